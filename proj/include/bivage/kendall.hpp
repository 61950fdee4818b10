#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bivage/semicopula.hpp"
#include "bivage/univariate.hpp"
#include "bivage/verdict.hpp"

namespace bivage {

enum class KendallProvenance {
    PartitionSup,
    ClosedForm, // t - phi/phi' for generator-backed semi-copulas
    IntegralForm,
    Transported,
};

std::string to_string(KendallProvenance p);

/// Tabulated Kendall distribution t -> K(t) on an interior grid of (0,1).
/// The endpoint convention K(0)=0, K(1)=1 is applied when interpolating
/// beyond the grid; curves built from an exact rule keep an evaluator for
/// resampling at arbitrary points.
struct KendallCurve {
    std::vector<double> grid;
    std::vector<double> values;
    KendallProvenance provenance = KendallProvenance::ClosedForm;
    std::function<double(double)> evaluator; // optional exact rule
    bool converged = true; // false when partition refinement hit its cap

    double eval(double t) const;
    bool has_evaluator() const { return static_cast<bool>(evaluator); }
};

/// Reference curve K_Pi(t) = t - t ln t of the product copula.
double kendall_product(double t);

struct PartitionRefine {
    int start_n = 64;
    int max_n = 16384;
    double tol = 1e-4;
};

struct SupValue {
    double value = 0.0;
    bool converged = true;
};

/// Partition-supremum Kendall value: dyadic refinements of [t,1] with t
/// forced into the partition, refined until two successive levels agree
/// within refine.tol. Returns the best value with converged=false when the
/// cell cap is reached first.
SupValue kendall_partition_sup(const SemiCopula& s, double t,
                               const PartitionRefine& refine = {});

/// K(t) = t - phi(t)/phi'(t). Throws DegenerateGenerator where phi' vanishes.
double kendall_archimedean(const Generator& g, double t);

/// K(t) = t + integral over (t,1) of dC/du at v = C_u^{-1}(t). Requires
/// strictly increasing sections (checked; throws SectionInversionFailure).
double kendall_integral(const SemiCopula& c, double t, double quad_tol = kQuadratureTol);

/// Transported Kendall value of the ageing function:
/// K_B(t) = t + gamma'(gamma^{-1}(t)) [K_Chat(gamma^{-1}(t)) - gamma^{-1}(t)].
/// Throws MissingDensity when the marginal has no density.
double transport_kendall_to_ageing(const KendallCurve& k_chat, const SurvivalModel& m,
                                   double t);

KendallCurve kendall_curve_sup(const SemiCopula& s, std::span<const double> grid,
                               const PartitionRefine& refine = {});
KendallCurve kendall_curve_closed(const Generator& g, std::span<const double> grid);
KendallCurve kendall_curve_integral(const SemiCopula& c, std::span<const double> grid,
                                    double quad_tol = kQuadratureTol);
KendallCurve kendall_curve_transported(const KendallCurve& k_chat, const SurvivalModel& m,
                                       std::span<const double> grid);

/// Default interior grid {1/(n+1), ..., n/(n+1)}.
std::vector<double> kendall_default_grid(int n = 19);

struct PkdNkd {
    Verdict pkd, nkd;
};

/// Kendall dependence against the product reference: PKD holds when
/// K(t) <= K_Pi(t) pointwise (the comonotone-positive orientation; some
/// references print the reverse inequality), NKD when K(t) >= K_Pi(t).
PkdNkd classify_pkd_nkd(const KendallCurve& k, double tol = kVerdictTol);

/// Text of the orientation note attached to classification reports.
const char* pkd_convention_note();

/// Holds iff sup |K1 - K2| <= tol over a common grid; resamples through
/// evaluators when the grids differ, else throws GridMismatch.
Verdict kendall_equivalent(const KendallCurve& k1, const KendallCurve& k2, double tol);

/// Pseudo-generator recovery: phi(t) = exp(int_{t0}^t ds / (s - K(s))),
/// normalised to phi(t0) = 1. Requires K(s) - s >= gap_tol on the interior
/// grid; throws NotPseudoArchimedean otherwise (reporting the touching
/// range). The result is tabulated on the curve's span; endpoints follow
/// the usual conventions.
Generator reconstruct_generator(const KendallCurve& k, double t0, double gap_tol = 1e-6);

/// Two-column CSV (t, K) with a provenance comment line.
void write_kendall_csv(std::ostream& os, const KendallCurve& k,
                       const std::string& comment_extra = "");

} // namespace bivage
