#include "bivage/kendall.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "bivage/errors.hpp"

namespace bivage {

std::string to_string(KendallProvenance p) {
    switch (p) {
    case KendallProvenance::PartitionSup: return "partition-sup";
    case KendallProvenance::ClosedForm: return "archimedean-closed-form";
    case KendallProvenance::IntegralForm: return "integral-form";
    case KendallProvenance::Transported: return "transported-from-copula";
    }
    return "?";
}

double kendall_product(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return t - t * std::log(t);
}

double KendallCurve::eval(double t) const {
    if (evaluator) return evaluator(t);
    if (grid.empty()) throw GridMismatch("kendall curve has no grid");
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    // interpolate, anchored at the convention endpoints (0,0) and (1,1)
    if (t <= grid.front()) {
        double w = t / grid.front();
        return w * values.front();
    }
    if (t >= grid.back()) {
        double w = (t - grid.back()) / (1.0 - grid.back());
        return values.back() + w * (1.0 - values.back());
    }
    auto it = std::upper_bound(grid.begin(), grid.end(), t);
    size_t i = static_cast<size_t>(it - grid.begin());
    double w = (t - grid[i - 1]) / (grid[i] - grid[i - 1]);
    return values[i - 1] + w * (values[i] - values[i - 1]);
}

namespace {

// estimate of the remaining refinement tail from the last two level
// differences, assuming the near-geometric decay the dyadic scheme shows
double tail_extrapolate(double val, double diff, double prev_diff) {
    if (diff == 0.0 || prev_diff == 0.0) return val;
    double r = diff / prev_diff;
    if (r > 0.0 && r < 0.95) return val + diff * r / (1.0 - r);
    return val;
}

} // namespace

SupValue kendall_partition_sup(const SemiCopula& s, double t, const PartitionRefine& refine) {
    if (t <= 0.0) return {0.0, true};
    if (t >= 1.0) return {1.0, true};
    double prev = std::numeric_limits<double>::quiet_NaN();
    double d1 = std::numeric_limits<double>::quiet_NaN(); // most recent level step
    double d2 = std::numeric_limits<double>::quiet_NaN(); // the one before
    for (int n = refine.start_n; n <= refine.max_n; n *= 2) {
        double sum = 0.0;
        for (int j = n - 1; j >= 0; --j) {
            double u0 = t + (1.0 - t) * j / n;
            double u1 = t + (1.0 - t) * (j + 1) / n;
            double v = s.section_sup_inverse(u1, t);
            double term = s(u1, v) - s(u0, v);
            if (term > 0.0) sum += term;
        }
        double val = t + sum;
        if (!std::isnan(prev)) {
            d2 = d1;
            d1 = val - prev;
            // a single small step can be a turning point of a non-monotone
            // sequence; require two consecutive small steps to stop
            if (!std::isnan(d2) && std::abs(d1) < refine.tol && std::abs(d2) < refine.tol)
                return {tail_extrapolate(val, d1, d2), true};
        }
        prev = val;
    }
    double best = std::isnan(d2) ? prev : tail_extrapolate(prev, d1, d2);
    return {best, false};
}

double kendall_archimedean(const Generator& g, double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    double d = g.phi_prime(t);
    if (d == 0.0 || !std::isfinite(d))
        throw DegenerateGenerator(g.label() + ": phi' degenerate at t = " +
                                  std::to_string(t));
    return t - g.phi(t) / d;
}

namespace {

void require_strict_sections(const SemiCopula& c, double t) {
    const double strict_eps = 1e-10;
    for (double u : linspace(t + (1.0 - t) / 6.0, t + 5.0 * (1.0 - t) / 6.0, 5)) {
        double prev = c(u, 0.0);
        for (double v : linspace(1.0 / 16.0, 1.0, 16)) {
            double cur = c(u, v);
            if (cur - prev < strict_eps)
                throw SectionInversionFailure(
                    c.label() + ": section at u = " + std::to_string(u) +
                    " is not strictly increasing near v = " + std::to_string(v));
            prev = cur;
        }
    }
}

} // namespace

double kendall_integral(const SemiCopula& c, double t, double quad_tol) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    require_strict_sections(c, t);
    auto integrand = [&c, t](double u) {
        double v = c.section_sup_inverse(u, t);
        return c.partial_u(u, v);
    };
    double at_one = integrand(1.0);
    bool singular_hi = !std::isfinite(at_one) || std::abs(at_one) > 1e8;
    return t + integrate(integrand, t, 1.0, quad_tol, /*singular_lo=*/false, singular_hi);
}

double transport_kendall_to_ageing(const KendallCurve& k_chat, const SurvivalModel& m,
                                   double t) {
    if (!m.has_density())
        throw MissingDensity("transport: marginal " + m.label() + " carries no density");
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    double x = -std::log(t);
    double gi = m.survival(x);     // gamma^{-1}(t)
    double dens = m.density(x);
    if (dens <= 0.0 || !std::isfinite(dens))
        throw MissingDensity("transport: density degenerate at x = " + std::to_string(x));
    double gp = t / dens;          // gamma'(gamma^{-1}(t))
    return t + gp * (k_chat.eval(gi) - gi);
}

KendallCurve kendall_curve_sup(const SemiCopula& s, std::span<const double> grid,
                               const PartitionRefine& refine) {
    KendallCurve k;
    k.provenance = KendallProvenance::PartitionSup;
    k.grid.assign(grid.begin(), grid.end());
    k.values.reserve(k.grid.size());
    for (double t : k.grid) {
        auto sv = kendall_partition_sup(s, t, refine);
        if (!sv.converged) k.converged = false;
        k.values.push_back(sv.value);
    }
    return k;
}

KendallCurve kendall_curve_closed(const Generator& g, std::span<const double> grid) {
    KendallCurve k;
    k.provenance = KendallProvenance::ClosedForm;
    k.grid.assign(grid.begin(), grid.end());
    k.values.reserve(k.grid.size());
    for (double t : k.grid) k.values.push_back(kendall_archimedean(g, t));
    k.evaluator = [g](double t) { return kendall_archimedean(g, t); };
    return k;
}

KendallCurve kendall_curve_integral(const SemiCopula& c, std::span<const double> grid,
                                    double quad_tol) {
    KendallCurve k;
    k.provenance = KendallProvenance::IntegralForm;
    k.grid.assign(grid.begin(), grid.end());
    k.values.reserve(k.grid.size());
    for (double t : k.grid) k.values.push_back(kendall_integral(c, t, quad_tol));
    k.evaluator = [c, quad_tol](double t) { return kendall_integral(c, t, quad_tol); };
    return k;
}

KendallCurve kendall_curve_transported(const KendallCurve& k_chat, const SurvivalModel& m,
                                       std::span<const double> grid) {
    KendallCurve k;
    k.provenance = KendallProvenance::Transported;
    k.grid.assign(grid.begin(), grid.end());
    k.values.reserve(k.grid.size());
    for (double t : k.grid) k.values.push_back(transport_kendall_to_ageing(k_chat, m, t));
    KendallCurve base = k_chat;
    SurvivalModel marg = m;
    k.evaluator = [base, marg](double t) {
        return transport_kendall_to_ageing(base, marg, t);
    };
    return k;
}

std::vector<double> kendall_default_grid(int n) {
    std::vector<double> g(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) g[static_cast<size_t>(i - 1)] = double(i) / (n + 1.0);
    return g;
}

PkdNkd classify_pkd_nkd(const KendallCurve& k, double tol) {
    VerdictSweep pkd(tol), nkd(tol);
    for (size_t i = 0; i < k.grid.size(); ++i) {
        double t = k.grid[i];
        if (t <= 0.0 || t >= 1.0) continue;
        double ref = kendall_product(t);
        pkd.add(ref - k.values[i], {t});
        nkd.add(k.values[i] - ref, {t});
    }
    return {pkd.finish(), nkd.finish()};
}

const char* pkd_convention_note() {
    return "PKD: K(t) <= K_Pi(t) = t - t ln t pointwise (comonotone-positive "
           "orientation); NKD reverses the inequality. Some references print "
           "the opposite sign.";
}

Verdict kendall_equivalent(const KendallCurve& k1, const KendallCurve& k2, double tol) {
    std::vector<double> grid;
    std::vector<double> a, b;
    auto same_grid = [&]() {
        if (k1.grid.size() != k2.grid.size()) return false;
        for (size_t i = 0; i < k1.grid.size(); ++i)
            if (std::abs(k1.grid[i] - k2.grid[i]) > 1e-12) return false;
        return true;
    };
    if (same_grid()) {
        grid = k1.grid;
        a = k1.values;
        b = k2.values;
    } else if (k2.has_evaluator()) {
        grid = k1.grid;
        a = k1.values;
        for (double t : grid) b.push_back(k2.eval(t));
    } else if (k1.has_evaluator()) {
        grid = k2.grid;
        b = k2.values;
        for (double t : grid) a.push_back(k1.eval(t));
    } else {
        throw GridMismatch("kendall_equivalent: incompatible grids and no evaluators");
    }
    Verdict v;
    double sup = 0.0;
    size_t arg = 0;
    for (size_t i = 0; i < grid.size(); ++i) {
        double d = std::abs(a[i] - b[i]);
        if (d > sup) {
            sup = d;
            arg = i;
        }
    }
    v.margin = tol - sup;
    if (sup <= tol) {
        v.status = Status::Holds;
    } else {
        v.status = Status::Fails;
        v.witness = {grid[arg]};
    }
    return v;
}

namespace {

// cubic Hermite with exact knot slopes; x ascending
struct HermiteTable {
    std::vector<double> x, y, slope;

    double operator()(double t) const {
        if (t <= x.front()) return y.front() + slope.front() * (t - x.front());
        if (t >= x.back()) return y.back() + slope.back() * (t - x.back());
        auto it = std::upper_bound(x.begin(), x.end(), t);
        size_t i = static_cast<size_t>(it - x.begin()) - 1;
        double h = x[i + 1] - x[i];
        double s = (t - x[i]) / h;
        double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
        double h10 = s * (1 - s) * (1 - s);
        double h01 = s * s * (3 - 2 * s);
        double h11 = s * s * (s - 1);
        return h00 * y[i] + h10 * h * slope[i] + h01 * y[i + 1] + h11 * h * slope[i + 1];
    }
};

} // namespace

Generator reconstruct_generator(const KendallCurve& k, double t0, double gap_tol) {
    if (k.grid.size() < 2)
        throw GridMismatch("reconstruct_generator: curve needs at least two grid points");
    double bad_lo = 2.0, bad_hi = -1.0;
    for (size_t i = 0; i < k.grid.size(); ++i) {
        double t = k.grid[i];
        if (t <= 0.0 || t >= 1.0) continue;
        if (k.values[i] - t < gap_tol) {
            bad_lo = std::min(bad_lo, t);
            bad_hi = std::max(bad_hi, t);
        }
    }
    if (bad_hi >= 0.0) {
        std::ostringstream msg;
        msg << "reconstruct_generator: K(s) - s < " << gap_tol << " on [" << bad_lo
            << ", " << bad_hi << "]";
        throw NotPseudoArchimedean(msg.str());
    }
    double lo = k.grid.front(), hi = k.grid.back();
    if (t0 <= lo || t0 >= hi)
        throw ParseError("reconstruct_generator: t0 must lie inside the curve span");

    auto integrand = [&k](double s) { return 1.0 / (s - k.eval(s)); };

    // cumulative integral of 1/(s - K(s)) on a refined knot set containing t0
    int n_knots = std::max<int>(257, static_cast<int>(4 * k.grid.size()) + 1);
    std::vector<double> knots = linspace(lo, hi, n_knots);
    knots.push_back(t0);
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

    HermiteTable table;
    table.x = knots;
    table.y.resize(knots.size());
    table.slope.resize(knots.size());
    size_t i0 = static_cast<size_t>(std::lower_bound(knots.begin(), knots.end(), t0) -
                                    knots.begin());
    table.y[i0] = 0.0;
    for (size_t i = i0; i + 1 < knots.size(); ++i)
        table.y[i + 1] = table.y[i] + integrate(integrand, knots[i], knots[i + 1], 1e-11);
    for (size_t i = i0; i-- > 0;)
        table.y[i] = table.y[i + 1] - integrate(integrand, knots[i], knots[i + 1], 1e-11);
    for (size_t i = 0; i < knots.size(); ++i) table.slope[i] = integrand(knots[i]);

    auto log_phi = table; // Phi(t) = log phi(t), decreasing
    auto phi = [log_phi](double t) {
        if (t >= 1.0) return 0.0;
        return std::exp(log_phi(t));
    };
    double phi0 = std::exp(log_phi(0.0));
    auto phi_inv = [log_phi](double y) {
        // Phi extrapolates linearly beyond the tabulated span
        double target = std::log(y);
        return bisect_inverse([&log_phi](double t) { return log_phi(t); }, target, 0.0,
                              1.0, /*increasing=*/false, 1e-13);
    };
    std::string label = "pseudo[t0=" + std::to_string(t0) + "]";
    return Generator::from_functions(phi, phi_inv, {}, phi0, std::move(label),
                                     Convexity::Unchecked);
}

void write_kendall_csv(std::ostream& os, const KendallCurve& k,
                       const std::string& comment_extra) {
    os << "# provenance=" << to_string(k.provenance);
    if (!k.converged) os << "; converged=false";
    if (!comment_extra.empty()) os << "; " << comment_extra;
    os << "\n";
    os << "t,K\n";
    char buf[64];
    for (size_t i = 0; i < k.grid.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", k.grid[i], k.values[i]);
        os << buf;
    }
}

} // namespace bivage
