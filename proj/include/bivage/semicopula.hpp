#pragma once

#include <functional>
#include <memory>
#include <string>

#include "bivage/generator.hpp"
#include "bivage/univariate.hpp"
#include "bivage/verdict.hpp"

namespace bivage {

enum class CopulaKind { SemiCopula, QuasiCopula, Copula };

std::string to_string(CopulaKind k);

/// Bivariate function on the unit square with copula margins: S(w,1)=w,
/// S(w,0)=0, nondecreasing in each argument. `kind` records the claimed
/// class; `validate` certifies it on a grid. Immutable; cheap to copy.
class SemiCopula {
public:
    SemiCopula() = default;

    static SemiCopula product();        ///< Pi(u,v) = uv
    static SemiCopula comonotone();     ///< M(u,v) = min(u,v)
    static SemiCopula countermonotone();///< W(u,v) = max(u+v-1, 0)

    /// S(u,v) = phi_inverse(phi(u) + phi(v)); a copula iff phi is convex.
    static SemiCopula archimedean(const Generator& g);

    static SemiCopula from_function(std::function<double(double, double)> eval,
                                    CopulaKind kind, std::string label,
                                    std::function<double(double, double)> partial_u = {},
                                    std::function<double(double, double)> section_inv = {});

    bool valid() const { return impl_ != nullptr; }

    double operator()(double u, double v) const;
    CopulaKind kind() const;
    const std::string& label() const;
    /// Same semi-copula under a new label.
    SemiCopula relabel(std::string label) const;

    bool has_generator() const;
    const Generator& generator() const;

    bool has_analytic_partial_u() const;
    /// dS/du, analytic when attached, else a central finite difference.
    double partial_u(double u, double v) const;

    /// sup{ v : S(u,v) <= t }, the generalized section inverse with the
    /// sup(empty) = 0 convention. Analytic for generator-backed and closed
    /// families, bisection otherwise.
    double section_sup_inverse(double u, double t) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit SemiCopula(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

/// Survival copula of the pair whose connecting copula is C:
/// (u,v) -> u + v - 1 + C(1-u, 1-v). An involution.
SemiCopula survival_from_connecting(const SemiCopula& c);

/// Generator phi = G^{-1} of a strictly positive marginal survival function.
Generator survival_inverse_generator(const SurvivalModel& m);

/// Archimedean semi-copula S(u,v) = G(G^{-1}(u) + G^{-1}(v)); a copula
/// exactly when G is convex (checked numerically, recorded in `kind`).
SemiCopula schur_constant_semicopula(const SurvivalModel& m);

struct ValidationReport {
    Verdict boundary;
    Verdict monotone;
    Verdict two_increasing;
    bool semicopula_ok() const { return !boundary.fails() && !monotone.fails(); }
    bool copula_ok() const { return semicopula_ok() && !two_increasing.fails(); }
};

/// Grid certification of the semi-copula axioms plus 2-increasingness.
/// two_increasing may fail for genuine semi-copulas.
ValidationReport validate(const SemiCopula& s, int grid_n = 64, double tol = kVerdictTol);

struct PqdNqd {
    Verdict pqd, nqd;
};
struct PmdNmd {
    Verdict pmd, nmd;
};
struct LtdRti {
    Verdict ltd, rti_as_survival;
};

/// Pointwise comparison against the product copula.
PqdNqd check_pqd(const SemiCopula& s, int grid_n = 33, double tol = kVerdictTol);

/// Supermigrativity S(us,v) >= S(u,sv) on {v <= u, s in (0,1)} (PMD);
/// submigrativity is the reverse (NMD).
PmdNmd check_migrativity(const SemiCopula& s, int grid_n = 17, double tol = kVerdictTol);

/// LTD of S (u -> S(u,v)/u decreasing) and the same property read on the
/// survival transform of S, which is the RTI property of the original pair.
LtdRti check_ltd_rti(const SemiCopula& s, int grid_n = 33, double tol = kVerdictTol);

/// Stochastic increasingness via concavity of the u-sections.
Verdict check_si(const SemiCopula& s, int grid_n = 33, double tol = kVerdictTol);

} // namespace bivage
