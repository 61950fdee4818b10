#include "bivage/numkit.hpp"

#include <algorithm>
#include <cmath>

namespace bivage {

namespace {

constexpr int kMaxBisectIter = 200;
constexpr int kMaxSimpsonDepth = 48;

double fd_step(double x) {
    // cube-root-of-eps scaling balances truncation and rounding
    return 6.0e-6 * (1.0 + std::abs(x));
}

} // namespace

double central_difference(const std::function<double(double)>& f, double x, double h,
                          double lo, double hi) {
    double a = std::max(lo, x - h);
    double b = std::min(hi, x + h);
    if (b <= a) return 0.0;
    return (f(b) - f(a)) / (b - a);
}

double RealFunction1D::deriv(double x) const {
    if (derivative) return derivative(x);
    return central_difference(eval, x, fd_step(x), domain.lo, domain.hi);
}

double bisect_inverse(const std::function<double(double)>& f, double target, double lo,
                      double hi, bool increasing, double tol) {
    double flo = f(lo);
    double fhi = f(hi);
    if (!increasing) {
        std::swap(lo, hi);
        std::swap(flo, fhi);
    }
    // now f(lo) <= f(hi) in exact arithmetic; clamp off-range targets
    if (target <= std::min(flo, fhi)) return lo;
    if (target >= std::max(flo, fhi)) return hi;
    double denom = 1.0 + std::abs(target);
    for (int it = 0; it < kMaxBisectIter; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        double fm = f(mid);
        if (std::abs(fm - target) <= tol * denom) return mid;
        if (fm < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double monotone_inverse(const RealFunction1D& f, double target, Interval bracket,
                        double tol) {
    const int scan_n = 9;
    double prev = f(bracket.lo);
    double last = f(bracket.hi);
    bool increasing = last > prev;
    double slack = tol * (1.0 + std::abs(last - prev));
    double x_prev = bracket.lo;
    for (int i = 1; i < scan_n; ++i) {
        double x = bracket.lo + (bracket.hi - bracket.lo) * i / (scan_n - 1);
        double y = f(x);
        double step = increasing ? y - prev : prev - y;
        if (step < -slack) {
            throw MonotonicityViolation("monotone_inverse: samples at [" +
                                        std::to_string(x_prev) + ", " + std::to_string(x) +
                                        "] contradict monotone direction");
        }
        prev = y;
        x_prev = x;
    }
    return bisect_inverse(f.eval, target, bracket.lo, bracket.hi, increasing, tol);
}

namespace {

struct SimpsonState {
    const std::function<double(double)>* f;
    bool starved = false; // some leaf hit max depth above its local budget
    double starved_err = 0.0;
};

double adaptive_simpson(SimpsonState& st, double a, double b, double fa, double fb,
                        double fm, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = (*st.f)(lm);
    double frm = (*st.f)(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double refined = left + right;
    double err = (refined - whole) / 15.0;
    if (std::abs(err) <= tol || depth <= 0) {
        if (depth <= 0 && std::abs(err) > tol) {
            st.starved = true;
            st.starved_err += std::abs(err);
        }
        return refined + err;
    }
    return adaptive_simpson(st, a, m, fa, fm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(st, m, b, fm, fb, frm, right, 0.5 * tol, depth - 1);
}

double integrate_plain(const std::function<double(double)>& f, double a, double b,
                       double tol) {
    if (a == b) return 0.0;
    SimpsonState st{&f};
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    double result = adaptive_simpson(st, a, b, fa, fb, fm, whole, tol, kMaxSimpsonDepth);
    if (st.starved && st.starved_err > 10.0 * tol) {
        throw QuadratureFailure("integrate: refinement exhausted with error estimate " +
                                std::to_string(st.starved_err));
    }
    return result;
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 bool singular_lo, bool singular_hi) {
    if (a == b) return 0.0;
    if (a > b) return -integrate(f, b, a, tol, singular_hi, singular_lo);
    if (!singular_lo && !singular_hi) return integrate_plain(f, a, b, tol);

    // Truncate toward a diverging endpoint by decades; integrable tails form
    // a near-geometric series, so the remainder extrapolates from the ratio
    // of the last two decade contributions.
    double width = b - a;
    double eps = 1e-4 * width;
    const double eps_floor = 0.5e-12 * width;
    double lo = singular_lo ? a + eps : a;
    double hi = singular_hi ? b - eps : b;
    double value = integrate_plain(f, lo, hi, tol);
    double tail = 0.0, prev_tail = 0.0;
    while (eps > eps_floor) {
        double eps_next = 0.1 * eps;
        double lo_next = singular_lo ? a + eps_next : a;
        double hi_next = singular_hi ? b - eps_next : b;
        prev_tail = tail;
        tail = 0.0;
        if (singular_lo) tail += integrate_plain(f, lo_next, lo, tol);
        if (singular_hi) tail += integrate_plain(f, hi, hi_next, tol);
        value += tail;
        lo = lo_next;
        hi = hi_next;
        eps = eps_next;
        if (std::abs(tail) < tol) return value;
    }
    if (prev_tail == 0.0 || std::abs(tail) >= 0.99 * std::abs(prev_tail))
        throw QuadratureFailure("integrate: endpoint tail does not decay");
    double rho = std::abs(tail / prev_tail);
    return value + tail * rho / (1.0 - rho);
}

double integrate(const RealFunction1D& f, double a, double b, double tol) {
    bool slo = f.lo_behavior == EndpointBehavior::Diverges && a <= f.domain.lo;
    bool shi = f.hi_behavior == EndpointBehavior::Diverges && b >= f.domain.hi;
    return integrate(f.eval, a, b, tol, slo, shi);
}

Verdict monotonicity_verdict(const std::function<double(double)>& f,
                             std::span<const double> grid, Direction direction,
                             double tol) {
    VerdictSweep sweep(tol);
    double prev = f(grid[0]);
    for (size_t i = 1; i < grid.size(); ++i) {
        double cur = f(grid[i]);
        double slack = direction == Direction::Increasing ? cur - prev : prev - cur;
        sweep.add(slack, {grid[i - 1], grid[i]});
        prev = cur;
    }
    return sweep.finish();
}

Verdict monotonicity_verdict(const RealFunction1D& f, std::span<const double> grid,
                             Direction direction, double tol) {
    return monotonicity_verdict(f.eval, grid, direction, tol);
}

Verdict convexity_verdict(const std::function<double(double)>& f,
                          std::span<const double> grid, double tol) {
    VerdictSweep sweep(tol);
    for (size_t i = 2; i < grid.size(); ++i) {
        double x0 = grid[i - 2], x1 = grid[i - 1], x2 = grid[i];
        // divided-difference convexity: f(x1) below the chord through x0, x2
        double lam = (x2 - x1) / (x2 - x0);
        double chord = lam * f(x0) + (1.0 - lam) * f(x2);
        sweep.add(chord - f(x1), {x0, x2});
    }
    return sweep.finish();
}

Verdict concavity_verdict(const std::function<double(double)>& f,
                          std::span<const double> grid, double tol) {
    return convexity_verdict([&f](double x) { return -f(x); }, grid, tol);
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> g(static_cast<size_t>(n));
    if (n == 1) {
        g[0] = a;
        return g;
    }
    for (int i = 0; i < n; ++i) g[static_cast<size_t>(i)] = a + (b - a) * i / (n - 1);
    g.back() = b;
    return g;
}

std::vector<double> geomspace(double a, double b, int n) {
    std::vector<double> g(static_cast<size_t>(n));
    double la = std::log(a), lb = std::log(b);
    for (int i = 0; i < n; ++i)
        g[static_cast<size_t>(i)] = std::exp(la + (lb - la) * i / (n - 1));
    g.front() = a;
    g.back() = b;
    return g;
}

} // namespace bivage
