#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "bivage/generator.hpp"
#include "bivage/numkit.hpp"
#include "bivage/verdict.hpp"

namespace bivage {

/// One-dimensional survival function on [0, inf), strictly decreasing and
/// strictly positive, with G(0) = 1. Immutable; cheap to copy.
class SurvivalModel {
public:
    SurvivalModel() = default;

    static SurvivalModel exponential(double rate);
    static SurvivalModel weibull(double shape, double scale = 1.0);
    static SurvivalModel pareto(double shape, double scale = 1.0);
    /// Treats phi_inverse of a strict generator as a survival function.
    static SurvivalModel generator_inverse(const Generator& g);
    static SurvivalModel finite_mixture(std::vector<double> weights,
                                        std::vector<SurvivalModel> components);
    /// Raw construction; density/log-survival/inverse optional (numeric fallbacks).
    static SurvivalModel from_functions(std::function<double(double)> survival,
                                        std::function<double(double)> density,
                                        std::function<double(double)> log_survival,
                                        std::function<double(double)> inverse_survival,
                                        std::string label, double lifetime_proxy);

    bool valid() const { return impl_ != nullptr; }

    double survival(double x) const;
    double log_survival(double x) const;
    double cumulative_hazard(double x) const { return -log_survival(x); }

    bool has_density() const;
    double density(double x) const;

    /// g(x) / G(x); falls back to a finite difference of -log G when no
    /// density is attached. Throws EvaluationOverflow once G underflows.
    double failure_rate(double x) const;

    /// x with G(x) = u, analytic per family or by bracketed bisection.
    double inverse_survival(double u) const;

    /// x with R(x) = y, i.e. R^{-1}; analytic for the closed-form families
    /// (avoids the exp/log round trip near y = 0), else via inverse_survival.
    double inverse_hazard(double y) const;

    /// Rough mean lifetime (exact for the closed-form families).
    double lifetime_proxy() const;
    /// Default sweep horizon: 8 lifetime proxies.
    double suggested_xmax() const { return 8.0 * lifetime_proxy(); }

    const std::string& label() const;

    bool is_mixture() const;
    std::span<const double> mixture_weights() const;
    std::span<const SurvivalModel> mixture_components() const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit SurvivalModel(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    friend struct MixtureModel;
};

/// Finite mixture over a discrete parameter set: prior weights plus one
/// conditional survival model per parameter value.
struct MixtureModel {
    std::vector<double> weights;
    std::vector<SurvivalModel> components;

    MixtureModel(std::vector<double> w, std::vector<SurvivalModel> comps);
    SurvivalModel as_survival_model() const;
};

/// Bayes posterior over the mixture index given survival past t.
std::vector<double> posterior_weights(const MixtureModel& mix, double t);

/// Posterior-weighted mean of component failure rates at t; equals the
/// mixture's own failure rate.
double predictive_failure_rate(const MixtureModel& mix, double t);

struct IfrDfr {
    Verdict ifr, dfr;
};
struct IfraDfra {
    Verdict ifra, dfra;
};
struct NbuNwu {
    Verdict nbu, nwu;
};

/// IFR via monotone failure rate when a density is attached, otherwise via
/// log-concavity of the survival function. DFR is the mirror check.
IfrDfr classify_ifr_dfr(const SurvivalModel& m, std::span<const double> grid,
                        double tol = kVerdictTol);

/// Monotonicity of the cumulative hazard average R(x)/x.
IfraDfra classify_ifra_dfra(const SurvivalModel& m, std::span<const double> grid,
                            double tol = kVerdictTol);

/// G(x+y) <= G(x) G(y) over the grid square (NBU); NWU is the reverse.
NbuNwu classify_nbu_nwu(const SurvivalModel& m, std::span<const double> axis_grid,
                        double tol = kVerdictTol);

/// [x_max * 1e-6, x_max], uniform; avoids rate singularities at 0.
std::vector<double> default_age_grid(const SurvivalModel& m, int n = 129);

/// Geometric grid on [1e-6, x_max] for R(x)/x sweeps (0 excluded).
std::vector<double> default_hazard_average_grid(const SurvivalModel& m, int n = 129);

std::vector<double> default_nbu_grid(const SurvivalModel& m, int n = 33);

} // namespace bivage
