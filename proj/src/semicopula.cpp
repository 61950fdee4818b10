#include "bivage/semicopula.hpp"

#include <algorithm>
#include <cmath>

#include "bivage/errors.hpp"

namespace bivage {

std::string to_string(CopulaKind k) {
    switch (k) {
    case CopulaKind::SemiCopula: return "semi-copula";
    case CopulaKind::QuasiCopula: return "quasi-copula";
    case CopulaKind::Copula: return "copula";
    }
    return "?";
}

struct SemiCopula::Impl {
    std::string label;
    CopulaKind kind = CopulaKind::SemiCopula;
    std::function<double(double, double)> eval;
    Generator gen; // invalid unless Archimedean
    std::function<double(double, double)> partial_u;    // optional
    std::function<double(double, double)> section_inv;  // optional, (u,t) -> v
};

double SemiCopula::operator()(double u, double v) const { return impl_->eval(u, v); }

CopulaKind SemiCopula::kind() const { return impl_->kind; }

const std::string& SemiCopula::label() const { return impl_->label; }

bool SemiCopula::has_generator() const { return impl_->gen.valid(); }

const Generator& SemiCopula::generator() const {
    if (!impl_->gen.valid()) throw Error(label() + ": no generator attached");
    return impl_->gen;
}

bool SemiCopula::has_analytic_partial_u() const {
    return static_cast<bool>(impl_->partial_u);
}

double SemiCopula::partial_u(double u, double v) const {
    if (impl_->partial_u) return impl_->partial_u(u, v);
    double h = 1e-6;
    auto f = [this, v](double x) { return (*this)(x, v); };
    return central_difference(f, u, h, 0.0, 1.0);
}

double SemiCopula::section_sup_inverse(double u, double t) const {
    if (t >= 1.0) return 1.0;
    if (t < 0.0) return 0.0;
    if ((*this)(u, 1.0) <= t) return 1.0;
    if (impl_->section_inv) return impl_->section_inv(u, t);
    double lo = 0.0, hi = 1.0; // S(u,lo) <= t < S(u,hi)
    while (hi - lo > 1e-13) {
        double mid = 0.5 * (lo + hi);
        if ((*this)(u, mid) <= t)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

SemiCopula SemiCopula::from_function(std::function<double(double, double)> eval,
                                     CopulaKind kind, std::string label,
                                     std::function<double(double, double)> partial_u,
                                     std::function<double(double, double)> section_inv) {
    auto impl = std::make_shared<Impl>();
    impl->eval = std::move(eval);
    impl->kind = kind;
    impl->label = std::move(label);
    impl->partial_u = std::move(partial_u);
    impl->section_inv = std::move(section_inv);
    return SemiCopula(std::move(impl));
}

SemiCopula SemiCopula::relabel(std::string label) const {
    auto impl = std::make_shared<Impl>(*impl_);
    impl->label = std::move(label);
    return SemiCopula(std::move(impl));
}

SemiCopula SemiCopula::product() {
    return archimedean(Generator::log_gen()).relabel("pi");
}

SemiCopula SemiCopula::comonotone() {
    auto impl = std::make_shared<Impl>();
    impl->label = "m";
    impl->kind = CopulaKind::Copula;
    impl->eval = [](double u, double v) { return std::min(u, v); };
    impl->partial_u = [](double u, double v) { return u < v ? 1.0 : (u > v ? 0.0 : 0.5); };
    impl->section_inv = [](double u, double t) { return u <= t ? 1.0 : t; };
    return SemiCopula(std::move(impl));
}

SemiCopula SemiCopula::countermonotone() {
    auto impl = std::make_shared<Impl>();
    impl->label = "w";
    impl->kind = CopulaKind::Copula;
    impl->eval = [](double u, double v) { return std::max(u + v - 1.0, 0.0); };
    impl->partial_u = [](double u, double v) { return u + v > 1.0 ? 1.0 : 0.0; };
    impl->section_inv = [](double u, double t) { return std::min(1.0, 1.0 + t - u); };
    return SemiCopula(std::move(impl));
}

SemiCopula SemiCopula::archimedean(const Generator& g) {
    g.validate_contract();
    auto impl = std::make_shared<Impl>();
    impl->label = "arch[" + g.label() + "]";
    impl->kind = g.convexity() == Convexity::Yes ? CopulaKind::Copula
                                                 : CopulaKind::SemiCopula;
    impl->gen = g;
    impl->eval = [g](double u, double v) {
        // margins are exact under the phi(1)=0 / phi(0+)=sup conventions
        if (u <= 0.0 || v <= 0.0) return 0.0;
        if (u >= 1.0) return std::min(v, 1.0);
        if (v >= 1.0) return std::min(u, 1.0);
        return g.phi_inverse(g.phi(u) + g.phi(v));
    };
    if (g.has_analytic_prime()) {
        impl->partial_u = [g](double u, double v) {
            double s = g.phi_inverse(g.phi(u) + g.phi(v));
            if (s <= 0.0) return 0.0;
            double ds = g.phi_prime(s);
            if (ds == 0.0) return 0.0;
            return g.phi_prime(u) / ds;
        };
    }
    impl->section_inv = [g](double u, double t) {
        return g.phi_inverse(g.phi(t) - g.phi(u));
    };
    return SemiCopula(std::move(impl));
}

SemiCopula survival_from_connecting(const SemiCopula& c) {
    std::function<double(double, double)> partial;
    if (c.has_analytic_partial_u()) {
        partial = [c](double u, double v) { return 1.0 - c.partial_u(1.0 - u, 1.0 - v); };
    }
    auto eval = [c](double u, double v) {
        double x = u + v - 1.0 + c(1.0 - u, 1.0 - v);
        return std::clamp(x, 0.0, 1.0);
    };
    return SemiCopula::from_function(eval, c.kind(), "hat[" + c.label() + "]", partial);
}

Generator survival_inverse_generator(const SurvivalModel& m) {
    std::function<double(double)> prime;
    if (m.has_density()) {
        prime = [m](double t) {
            double d = m.density(m.inverse_survival(t));
            return d == 0.0 ? -std::numeric_limits<double>::infinity() : -1.0 / d;
        };
    }
    auto phi = [m](double t) { return m.inverse_survival(t); };
    Verdict convex = convexity_verdict(phi, linspace(1e-3, 1.0, 129), kVerdictTol);
    return Generator::from_functions(
        phi, [m](double y) { return m.survival(y); }, prime,
        std::numeric_limits<double>::infinity(), "survinv[" + m.label() + "]",
        convex.holds() ? Convexity::Yes : Convexity::No,
        [m](double y) { return m.log_survival(y); });
}

SemiCopula schur_constant_semicopula(const SurvivalModel& m) {
    return SemiCopula::archimedean(survival_inverse_generator(m));
}

ValidationReport validate(const SemiCopula& s, int grid_n, double tol) {
    ValidationReport rep;
    auto grid = linspace(0.0, 1.0, grid_n);

    VerdictSweep boundary(tol);
    for (double w : grid) {
        // equality constraints enter as -|deviation|
        boundary.add(-std::abs(s(w, 1.0) - w), {w, 1.0});
        boundary.add(-std::abs(s(1.0, w) - w), {1.0, w});
        boundary.add(-std::abs(s(w, 0.0)), {w, 0.0});
        boundary.add(-std::abs(s(0.0, w)), {0.0, w});
    }
    rep.boundary = boundary.finish();

    VerdictSweep monotone(tol);
    std::vector<std::vector<double>> vals(grid.size(), std::vector<double>(grid.size()));
    for (size_t i = 0; i < grid.size(); ++i)
        for (size_t j = 0; j < grid.size(); ++j) vals[i][j] = s(grid[i], grid[j]);
    for (size_t i = 0; i + 1 < grid.size(); ++i)
        for (size_t j = 0; j < grid.size(); ++j) {
            monotone.add(vals[i + 1][j] - vals[i][j], {grid[i], grid[j]});
            monotone.add(vals[j][i + 1] - vals[j][i], {grid[j], grid[i]});
        }
    rep.monotone = monotone.finish();

    VerdictSweep rect(tol);
    for (size_t i = 0; i + 1 < grid.size(); ++i)
        for (size_t j = 0; j + 1 < grid.size(); ++j) {
            double sum = vals[i][j] + vals[i + 1][j + 1] - vals[i][j + 1] - vals[i + 1][j];
            rect.add(sum, {grid[i], grid[j], grid[i + 1], grid[j + 1]});
        }
    rep.two_increasing = rect.finish();
    return rep;
}

PqdNqd check_pqd(const SemiCopula& s, int grid_n, double tol) {
    VerdictSweep pqd(tol), nqd(tol);
    auto grid = linspace(0.0, 1.0, grid_n);
    for (double u : grid)
        for (double v : grid) {
            double diff = s(u, v) - u * v;
            pqd.add(diff, {u, v});
            nqd.add(-diff, {u, v});
        }
    return {pqd.finish(), nqd.finish()};
}

PmdNmd check_migrativity(const SemiCopula& s, int grid_n, double tol) {
    VerdictSweep pmd(tol), nmd(tol);
    auto grid = linspace(0.0, 1.0, grid_n);
    auto sgrid = linspace(1.0 / (grid_n + 1.0), grid_n / (grid_n + 1.0), grid_n);
    for (double u : grid)
        for (double v : grid) {
            if (v > u) continue;
            for (double sc : sgrid) {
                double diff = s(u * sc, v) - s(u, sc * v);
                pmd.add(diff, {u, v, sc});
                nmd.add(-diff, {u, v, sc});
            }
        }
    return {pmd.finish(), nmd.finish()};
}

LtdRti check_ltd_rti(const SemiCopula& s, int grid_n, double tol) {
    auto ltd_of = [grid_n, tol](const SemiCopula& c) {
        VerdictSweep sweep(tol);
        auto ugrid = linspace(1e-4, 1.0, grid_n);
        auto vgrid = linspace(0.0, 1.0, grid_n);
        for (double v : vgrid) {
            double prev = c(ugrid[0], v) / ugrid[0];
            for (size_t i = 1; i < ugrid.size(); ++i) {
                double cur = c(ugrid[i], v) / ugrid[i];
                sweep.add(prev - cur, {ugrid[i - 1], ugrid[i], v});
                prev = cur;
            }
        }
        return sweep.finish();
    };
    return {ltd_of(s), ltd_of(survival_from_connecting(s))};
}

Verdict check_si(const SemiCopula& s, int grid_n, double tol) {
    VerdictSweep sweep(tol);
    auto ugrid = linspace(0.0, 1.0, grid_n);
    auto vgrid = linspace(1.0 / (grid_n + 1.0), grid_n / (grid_n + 1.0), grid_n);
    for (double v : vgrid) {
        for (size_t i = 2; i < ugrid.size(); ++i) {
            double a = s(ugrid[i - 2], v), b = s(ugrid[i - 1], v), c = s(ugrid[i], v);
            // concave section: midpoint above the chord
            sweep.add(b - 0.5 * (a + c), {ugrid[i - 2], ugrid[i], v});
        }
    }
    return sweep.finish();
}

} // namespace bivage
