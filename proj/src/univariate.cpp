#include "bivage/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "bivage/errors.hpp"

namespace bivage {

namespace {
constexpr double kSurvivalFloor = 1e-300;
}

struct SurvivalModel::Impl {
    std::string label;
    std::function<double(double)> survival;     // required
    std::function<double(double)> log_survival; // optional analytic
    std::function<double(double)> density;      // optional
    std::function<double(double)> inverse;      // optional analytic
    std::function<double(double)> inverse_hazard; // optional analytic R^{-1}
    double lifetime = 1.0;
    std::vector<double> weights;          // mixture payload
    std::vector<SurvivalModel> components;
};

double SurvivalModel::survival(double x) const { return impl_->survival(x); }

double SurvivalModel::log_survival(double x) const {
    if (impl_->log_survival) return impl_->log_survival(x);
    double s = impl_->survival(x);
    if (s <= 0.0) throw EvaluationOverflow(label() + ": survival underflow at x = " +
                                           std::to_string(x));
    return std::log(s);
}

bool SurvivalModel::has_density() const { return static_cast<bool>(impl_->density); }

double SurvivalModel::density(double x) const {
    if (!impl_->density) throw MissingDensity(label() + ": no density attached");
    return impl_->density(x);
}

double SurvivalModel::failure_rate(double x) const {
    double s = impl_->survival(x);
    if (s < kSurvivalFloor)
        throw EvaluationOverflow(label() + ": survival underflow at x = " +
                                 std::to_string(x));
    if (impl_->density) return impl_->density(x) / s;
    auto neg_log = [this](double t) { return -log_survival(t); };
    double h = 1e-6 * (1.0 + x);
    return central_difference(neg_log, x, h, 0.0,
                              std::numeric_limits<double>::infinity());
}

double SurvivalModel::inverse_survival(double u) const {
    if (u >= 1.0) return 0.0;
    if (impl_->inverse) return impl_->inverse(u);
    if (u <= 0.0) throw EvaluationOverflow(label() + ": inverse_survival(0)");
    // grow the bracket until survival drops below u, then bisect
    double hi = impl_->lifetime;
    int guard = 0;
    while (impl_->survival(hi) > u) {
        hi *= 2.0;
        if (++guard > 400)
            throw EvaluationOverflow(label() + ": inverse_survival bracket overflow");
    }
    return bisect_inverse(impl_->survival, u, 0.0, hi, /*increasing=*/false, 1e-13);
}

double SurvivalModel::inverse_hazard(double y) const {
    if (y <= 0.0) return 0.0;
    if (impl_->inverse_hazard) return impl_->inverse_hazard(y);
    return inverse_survival(std::exp(-y));
}

double SurvivalModel::lifetime_proxy() const { return impl_->lifetime; }

const std::string& SurvivalModel::label() const { return impl_->label; }

bool SurvivalModel::is_mixture() const { return !impl_->components.empty(); }

std::span<const double> SurvivalModel::mixture_weights() const { return impl_->weights; }

std::span<const SurvivalModel> SurvivalModel::mixture_components() const {
    return impl_->components;
}

SurvivalModel SurvivalModel::exponential(double rate) {
    if (rate <= 0.0) throw ParseError("exponential: rate must be > 0");
    auto impl = std::make_shared<Impl>();
    impl->label = "exp:" + std::to_string(rate);
    impl->survival = [rate](double x) { return std::exp(-rate * x); };
    impl->log_survival = [rate](double x) { return -rate * x; };
    impl->density = [rate](double x) { return rate * std::exp(-rate * x); };
    impl->inverse = [rate](double u) { return -std::log(u) / rate; };
    impl->inverse_hazard = [rate](double y) { return y / rate; };
    impl->lifetime = 1.0 / rate;
    return SurvivalModel(std::move(impl));
}

SurvivalModel SurvivalModel::weibull(double shape, double scale) {
    if (shape <= 0.0 || scale <= 0.0) throw ParseError("weibull: parameters must be > 0");
    auto impl = std::make_shared<Impl>();
    impl->label = "weibull:" + std::to_string(shape) + ":" + std::to_string(scale);
    impl->log_survival = [shape, scale](double x) { return -std::pow(x / scale, shape); };
    impl->survival = [shape, scale](double x) {
        return std::exp(-std::pow(x / scale, shape));
    };
    impl->density = [shape, scale](double x) {
        if (x <= 0.0) {
            if (shape > 1.0) return 0.0;
            if (shape == 1.0) return 1.0 / scale;
            return std::numeric_limits<double>::infinity();
        }
        double z = x / scale;
        return shape / scale * std::pow(z, shape - 1.0) * std::exp(-std::pow(z, shape));
    };
    impl->inverse = [shape, scale](double u) {
        return scale * std::pow(-std::log(u), 1.0 / shape);
    };
    impl->inverse_hazard = [shape, scale](double y) {
        return scale * std::pow(y, 1.0 / shape);
    };
    impl->lifetime = scale * std::tgamma(1.0 + 1.0 / shape);
    return SurvivalModel(std::move(impl));
}

SurvivalModel SurvivalModel::pareto(double shape, double scale) {
    if (shape <= 0.0 || scale <= 0.0) throw ParseError("pareto: parameters must be > 0");
    auto impl = std::make_shared<Impl>();
    impl->label = "pareto:" + std::to_string(shape) + ":" + std::to_string(scale);
    impl->log_survival = [shape, scale](double x) {
        return -shape * std::log1p(x / scale);
    };
    impl->survival = [shape, scale](double x) {
        return std::pow(1.0 + x / scale, -shape);
    };
    impl->density = [shape, scale](double x) {
        return shape / scale * std::pow(1.0 + x / scale, -shape - 1.0);
    };
    impl->inverse = [shape, scale](double u) {
        return scale * (std::pow(u, -1.0 / shape) - 1.0);
    };
    impl->inverse_hazard = [shape, scale](double y) {
        return scale * std::expm1(y / shape);
    };
    // infinite mean below shape 1; fall back to median / ln 2
    impl->lifetime = shape > 1.0 ? scale / (shape - 1.0)
                                 : scale * (std::pow(2.0, 1.0 / shape) - 1.0) / std::numbers::ln2;
    return SurvivalModel(std::move(impl));
}

SurvivalModel SurvivalModel::generator_inverse(const Generator& g) {
    if (!g.strict())
        throw InvalidGenerator(g.label() +
                               ": non-strict generator inverse is not positive on [0,inf)");
    auto impl = std::make_shared<Impl>();
    impl->label = "geninv:" + g.label();
    impl->survival = [g](double x) { return g.phi_inverse(x); };
    impl->log_survival = [g](double x) { return g.log_phi_inverse(x); };
    impl->density = [g](double x) {
        double t = g.phi_inverse(x);
        double d = g.phi_prime(t);
        return d == 0.0 ? 0.0 : -1.0 / d;
    };
    impl->inverse = [g](double u) { return g.phi(u); };
    Generator gc = g;
    impl->lifetime = gc.phi(0.5) / std::numbers::ln2;
    return SurvivalModel(std::move(impl));
}

SurvivalModel SurvivalModel::finite_mixture(std::vector<double> weights,
                                            std::vector<SurvivalModel> components) {
    MixtureModel mix(std::move(weights), std::move(components));
    return mix.as_survival_model();
}

SurvivalModel SurvivalModel::from_functions(std::function<double(double)> survival,
                                            std::function<double(double)> density,
                                            std::function<double(double)> log_survival,
                                            std::function<double(double)> inverse_survival,
                                            std::string label, double lifetime_proxy) {
    auto impl = std::make_shared<Impl>();
    impl->label = std::move(label);
    impl->survival = std::move(survival);
    impl->density = std::move(density);
    impl->log_survival = std::move(log_survival);
    impl->inverse = std::move(inverse_survival);
    impl->lifetime = lifetime_proxy;
    return SurvivalModel(std::move(impl));
}

MixtureModel::MixtureModel(std::vector<double> w, std::vector<SurvivalModel> comps)
    : weights(std::move(w)), components(std::move(comps)) {
    if (weights.empty() || weights.size() != components.size())
        throw ParseError("mixture: weights and components must match and be nonempty");
    double sum = 0.0;
    for (double wi : weights) {
        if (wi < 0.0) throw ParseError("mixture: negative weight");
        sum += wi;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw ParseError("mixture: weights sum to " + std::to_string(sum));
}

SurvivalModel MixtureModel::as_survival_model() const {
    auto w = weights;
    auto comps = components;
    std::string label = "mix[";
    for (size_t i = 0; i < comps.size(); ++i)
        label += (i ? "," : "") + comps[i].label();
    label += "]";
    auto surv = [w, comps](double x) {
        double s = 0.0;
        for (size_t i = 0; i < w.size(); ++i) s += w[i] * comps[i].survival(x);
        return s;
    };
    bool all_density = std::all_of(comps.begin(), comps.end(),
                                   [](const SurvivalModel& c) { return c.has_density(); });
    std::function<double(double)> dens;
    if (all_density)
        dens = [w, comps](double x) {
            double s = 0.0;
            for (size_t i = 0; i < w.size(); ++i) s += w[i] * comps[i].density(x);
            return s;
        };
    double lifetime = 0.0;
    for (size_t i = 0; i < w.size(); ++i) lifetime += w[i] * comps[i].lifetime_proxy();
    auto impl = std::make_shared<SurvivalModel::Impl>();
    impl->label = std::move(label);
    impl->survival = std::move(surv);
    impl->density = std::move(dens);
    impl->lifetime = lifetime;
    impl->weights = w;
    impl->components = comps;
    return SurvivalModel(std::move(impl));
}

std::vector<double> posterior_weights(const MixtureModel& mix, double t) {
    // work with log-survivals so a far tail does not underflow to 0/0
    size_t k = mix.weights.size();
    std::vector<double> logp(k);
    double best = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < k; ++i) {
        double ls = mix.components[i].log_survival(t);
        logp[i] = std::log(mix.weights[i]) + ls;
        best = std::max(best, logp[i]);
    }
    if (!std::isfinite(best))
        throw EvaluationOverflow("posterior_weights: all components underflow at t = " +
                                 std::to_string(t));
    double denom = 0.0;
    for (double lp : logp) denom += std::exp(lp - best);
    std::vector<double> out(k);
    for (size_t i = 0; i < k; ++i) out[i] = std::exp(logp[i] - best) / denom;
    return out;
}

double predictive_failure_rate(const MixtureModel& mix, double t) {
    auto post = posterior_weights(mix, t);
    double r = 0.0;
    for (size_t i = 0; i < post.size(); ++i)
        r += post[i] * mix.components[i].failure_rate(t);
    return r;
}

IfrDfr classify_ifr_dfr(const SurvivalModel& m, std::span<const double> grid, double tol) {
    IfrDfr out;
    if (m.has_density()) {
        auto rate = [&m](double x) { return m.failure_rate(x); };
        out.ifr = monotonicity_verdict(rate, grid, Direction::Increasing, tol);
        out.dfr = monotonicity_verdict(rate, grid, Direction::Decreasing, tol);
    } else {
        auto logG = [&m](double x) { return m.log_survival(x); };
        out.ifr = concavity_verdict(logG, grid, tol);
        out.dfr = convexity_verdict(logG, grid, tol);
    }
    return out;
}

IfraDfra classify_ifra_dfra(const SurvivalModel& m, std::span<const double> grid,
                            double tol) {
    auto avg = [&m](double x) { return m.cumulative_hazard(x) / x; };
    IfraDfra out;
    out.ifra = monotonicity_verdict(avg, grid, Direction::Increasing, tol);
    out.dfra = monotonicity_verdict(avg, grid, Direction::Decreasing, tol);
    return out;
}

NbuNwu classify_nbu_nwu(const SurvivalModel& m, std::span<const double> axis_grid,
                        double tol) {
    VerdictSweep nbu(tol), nwu(tol);
    for (double x : axis_grid) {
        double gx = m.survival(x);
        for (double y : axis_grid) {
            if (y < x) continue; // exchangeable in (x,y)
            double prod = gx * m.survival(y);
            double joint = m.survival(x + y);
            nbu.add(prod - joint, {x, y});
            nwu.add(joint - prod, {x, y});
        }
    }
    return {nbu.finish(), nwu.finish()};
}

std::vector<double> default_age_grid(const SurvivalModel& m, int n) {
    double xmax = m.suggested_xmax();
    auto g = linspace(0.0, xmax, n);
    g.front() = xmax * 1e-6;
    return g;
}

std::vector<double> default_hazard_average_grid(const SurvivalModel& m, int n) {
    return geomspace(1e-6, m.suggested_xmax(), n);
}

std::vector<double> default_nbu_grid(const SurvivalModel& m, int n) {
    return linspace(0.0, m.suggested_xmax(), n);
}

} // namespace bivage
