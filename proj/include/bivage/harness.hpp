#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bivage/bivmodel.hpp"
#include "bivage/kendall.hpp"
#include "bivage/registry.hpp"

namespace bivage {

enum class ObjectSel { Marginal, SurvivalCopula, AgeingFunction };
enum class AgeProp { IFR, DFR, IFRA, DFRA, PMD, NMD, PKD, NKD };

std::string to_string(ObjectSel o);
std::string to_string(AgeProp p);

struct ImplicationCase {
    std::vector<std::pair<ObjectSel, AgeProp>> premises;
    std::pair<ObjectSel, AgeProp> conclusion;
    std::string name; ///< e.g. "IFR(G) & PMD(C^) => PMD(B)"
};

enum class Outcome { Vacuous, Confirmed, Violation };

std::string to_string(Outcome o);

struct ImplicationResult {
    std::string name;
    Outcome outcome = Outcome::Vacuous;
    std::string detail;
};

struct VerificationReport {
    std::string model_id;
    std::string suite;
    std::vector<std::pair<std::string, Verdict>> verdicts; // stable order
    std::vector<ImplicationResult> implications;
    std::string note;
    bool skipped = false;

    int violations() const;
};

struct HarnessOptions {
    double tol = kVerdictTol;
    int grid_n = 33;        ///< univariate / dependence sweep resolution
    int mig_grid_n = 13;    ///< migrativity triples per axis
    WedgeGrid wedge{};      ///< bivariate ageing wedge
    int kendall_grid_n = 19;
    double route_tol = 1e-3; ///< cross-route Kendall agreement
    bool cross_check_routes = true;
    // deeper cap than the library default: steep ageing functions refine slowly
    PartitionRefine refine{64, 131072, 1e-4};
};

/// The six implication cases tying IFR/DFR of the marginal, PMD/NMD of the
/// survival copula, and PMD/NMD of the ageing function.
std::vector<ImplicationCase> migrativity_implications();

/// The six implication cases tying IFRA/DFRA of the marginal, PKD/NKD of the
/// survival copula, and PKD/NKD of the ageing function.
std::vector<ImplicationCase> kendall_implications();

/// Verdicts for (G: IFR/DFR, C^: PMD/NMD, B: PMD/NMD) plus the implication
/// outcomes. Never reports a violation on a sound implementation.
VerificationReport verify_migrativity_ageing(const BivariateModel& mdl,
                                             const HarnessOptions& opt = {});

/// Verdicts for (G: IFRA/DFRA, C^: PKD/NKD, B: PKD/NKD). The copula curve
/// uses the integral route, the ageing curve the transport route; both are
/// cross-checked against partition-sup values within route_tol before any
/// implication is evaluated (RouteMismatch otherwise). Requires strictly
/// increasing copula sections and a marginal density.
VerificationReport verify_kendall_ageing(const BivariateModel& mdl,
                                         const HarnessOptions& opt = {});

/// IFRA/DFRA implications for the composed survival G = H1(H2^{-1}(e^{-x})),
/// classified through its cumulative hazard composition.
VerificationReport verify_hazard_composition(const SurvivalModel& h1,
                                             const SurvivalModel& h2,
                                             const HarnessOptions& opt = {});

/// The four dependence/ageing biconditionals for an Archimedean generator:
/// PQD <=> NWU, PKD <=> DFRA, LTD <=> DFR, SI <=> log-convex density, each
/// side computed by its own module; disagreement counts as a violation.
VerificationReport verify_generator_ageing_equivalences(const Generator& g,
                                                        const HarnessOptions& opt = {});

struct MixtureDemoReport {
    std::vector<IfrDfr> component_ifr;
    BivIfrDfr conditional_biv; ///< on the conditionally-iid joint survival
    IfrDfr mixture_ifr;
    std::string note;
};

/// Ageing of a mixture of IFR components: each component IFR, the
/// conditionally-iid bivariate positive-ageing inequality, and the
/// (generally failing) marginal IFR of the mixture itself.
MixtureDemoReport mixture_paradox_demo(const MixtureModel& mix,
                                       const HarnessOptions& opt = {});

struct SweepResult {
    std::vector<VerificationReport> reports;
    int violations = 0;
    int models = 0;
};

/// Runs every suite over a model registry (plus the fixed marginal pairs,
/// generators, and the mixture demo) and aggregates violations.
SweepResult run_sweep(const std::vector<ModelSpecEntry>& entries,
                      const HarnessOptions& opt = {});

} // namespace bivage
