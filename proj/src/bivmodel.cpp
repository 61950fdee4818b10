#include "bivage/bivmodel.hpp"

#include <algorithm>
#include <cmath>

#include "bivage/errors.hpp"

namespace bivage {

double GammaTransform::gamma(double u) const {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return std::exp(-marginal_.inverse_survival(u));
}

double GammaTransform::gamma_inv(double z) const {
    if (z <= 0.0) return 0.0;
    if (z >= 1.0) return 1.0;
    return marginal_.survival(-std::log(z));
}

double GammaTransform::gamma_prime(double u) const {
    double x = marginal_.inverse_survival(u);
    double d = marginal_.density(x);
    return std::exp(-x) / d;
}

BivariateModel::BivariateModel(SemiCopula survival_copula, SurvivalModel marginal,
                               std::string id)
    : chat_(std::move(survival_copula)), marginal_(std::move(marginal)),
      id_(std::move(id)) {
    if (id_.empty()) id_ = chat_.label() + "|" + marginal_.label();
}

double BivariateModel::joint_survival(double x, double y) const {
    return chat_(marginal_.survival(x), marginal_.survival(y));
}

SemiCopula ageing_function(const BivariateModel& mdl) {
    const SemiCopula& chat = mdl.survival_copula();
    const SurvivalModel m = mdl.marginal();
    std::string label = "ageing[" + mdl.id() + "]";

    if (chat.has_generator()) {
        const Generator phi = chat.generator();
        auto psi = [phi, m](double t) { return phi.phi(m.survival(-std::log(t))); };
        auto psi_inv = [phi, m](double y) {
            double x = phi.phi_inverse(y);
            if (x <= 0.0) return 0.0;
            if (x >= 1.0) return 1.0;
            return std::exp(-m.inverse_survival(x));
        };
        std::function<double(double)> prime;
        if (phi.has_analytic_prime() && m.has_density()) {
            prime = [phi, m](double t) {
                double x = -std::log(t);
                return phi.phi_prime(m.survival(x)) * m.density(x) / t;
            };
        }
        std::function<double(double)> log_inv;
        log_inv = [phi, m](double y) {
            double x = phi.phi_inverse(y);
            if (x <= 0.0) return -std::numeric_limits<double>::infinity();
            if (x >= 1.0) return 0.0;
            return -m.inverse_survival(x);
        };
        Generator psi_gen =
            Generator::from_functions(psi, psi_inv, prime, phi.phi_at_zero(),
                                      "ageing-gen[" + mdl.id() + "]",
                                      Convexity::Unchecked, log_inv);
        return SemiCopula::archimedean(psi_gen).relabel(label);
    }

    GammaTransform gt(m);
    auto eval = [gt, chat](double u, double v) {
        if (u <= 0.0 || v <= 0.0) return 0.0;
        if (u >= 1.0) return std::min(v, 1.0);
        if (v >= 1.0) return std::min(u, 1.0);
        return gt.gamma(chat(gt.gamma_inv(u), gt.gamma_inv(v)));
    };
    return SemiCopula::from_function(eval, CopulaKind::SemiCopula, label);
}

BivariateModel schur_constant_model(const SurvivalModel& m) {
    auto s = schur_constant_semicopula(m);
    if (s.kind() != CopulaKind::Copula)
        throw NotACopula("schur_constant_model: " + m.label() +
                         " is not convex, so S_{G^-1} is only a semi-copula");
    return BivariateModel(s, m, "schur-constant[" + m.label() + "]");
}

namespace {

struct WedgePoints {
    std::vector<double> xs;
    std::vector<double> ts;
};

WedgePoints wedge_points(const SurvivalModel& m, const WedgeGrid& grid) {
    double xmax = grid.x_max > 0.0 ? grid.x_max : m.suggested_xmax();
    WedgePoints w;
    w.xs = linspace(0.0, xmax, grid.axis_n);
    // shifts both inside and beyond typical y - x gaps
    w.ts = linspace(xmax / (4.0 * grid.t_n), 1.5 * xmax, grid.t_n);
    return w;
}

BivIfrDfr wedge_sweep(const std::function<double(double, double)>& joint,
                      const WedgePoints& w, bool as_ratio, double tol) {
    VerdictSweep pos(tol), neg(tol);
    const double floor = 1e-280;
    for (double x : w.xs)
        for (double y : w.xs) {
            if (y <= x) continue;
            double base = as_ratio ? joint(x, y) : 1.0;
            if (as_ratio && base < floor) continue;
            for (double t : w.ts) {
                double a = joint(x + t, y);
                double b = joint(x, y + t);
                double slack = (a - b) / base;
                pos.add(slack, {x, y, t});
                neg.add(-slack, {x, y, t});
            }
        }
    return {pos.finish(), neg.finish()};
}

} // namespace

BivIfrDfr biv_ifr_check(const BivariateModel& mdl, const WedgeGrid& grid, double tol) {
    auto joint = [&mdl](double x, double y) { return mdl.joint_survival(x, y); };
    return wedge_sweep(joint, wedge_points(mdl.marginal(), grid), /*as_ratio=*/true, tol);
}

BivIfrDfr schur_concavity_check(const std::function<double(double, double)>& joint,
                                const WedgeGrid& grid, double tol) {
    if (grid.x_max <= 0.0)
        throw ParseError("schur_concavity_check: x_max must be set for raw joints");
    WedgePoints w;
    w.xs = linspace(0.0, grid.x_max, grid.axis_n);
    w.ts = linspace(grid.x_max / (4.0 * grid.t_n), 1.5 * grid.x_max, grid.t_n);
    return wedge_sweep(joint, w, /*as_ratio=*/false, tol);
}

std::string to_string(Side s) {
    switch (s) {
    case Side::Positive: return "positive";
    case Side::Negative: return "negative";
    case Side::Neutral: return "neutral";
    case Side::Mixed: return "mixed";
    case Side::Undecided: return "undecided";
    }
    return "?";
}

Side verdict_side(const Verdict& positive, const Verdict& negative) {
    if (positive.holds() && negative.holds()) return Side::Neutral;
    if (positive.holds()) return Side::Positive;
    if (negative.holds()) return Side::Negative;
    if (positive.fails() && negative.fails()) return Side::Mixed;
    return Side::Undecided;
}

TriangleReport equivalence_triangle(const BivariateModel& mdl, const WedgeGrid& grid,
                                    double tol, int mig_grid_n) {
    TriangleReport rep;
    rep.conditional = biv_ifr_check(mdl, grid, tol);

    auto joint = [&mdl](double x, double y) { return mdl.joint_survival(x, y); };
    WedgeGrid g2 = grid;
    if (g2.x_max <= 0.0) g2.x_max = mdl.marginal().suggested_xmax();
    rep.schur = schur_concavity_check(joint, g2, tol);

    auto b = ageing_function(mdl);
    rep.migrativity_of_b = check_migrativity(b, mig_grid_n, tol);

    rep.conditional_side = verdict_side(rep.conditional.biv_ifr, rep.conditional.biv_dfr);
    rep.schur_side = verdict_side(rep.schur.biv_ifr, rep.schur.biv_dfr);
    rep.migrativity_side =
        verdict_side(rep.migrativity_of_b.pmd, rep.migrativity_of_b.nmd);

    auto compatible = [](Side a, Side b2) {
        return a == b2 || a == Side::Undecided || b2 == Side::Undecided;
    };
    rep.agree = compatible(rep.conditional_side, rep.schur_side) &&
                compatible(rep.conditional_side, rep.migrativity_side) &&
                compatible(rep.schur_side, rep.migrativity_side);
    return rep;
}

RebuildResult rebuild_from_ageing(const SemiCopula& b, const SurvivalModel& h, int grid_n,
                                  double tol) {
    SemiCopula bc = b;
    SurvivalModel hc = h;
    auto joint = [bc, hc](double x, double y) {
        double lvl = bc(std::exp(-x), std::exp(-y));
        if (lvl <= 0.0) return 0.0;
        if (lvl >= 1.0) return hc.survival(0.0);
        return hc.survival(-std::log(lvl));
    };
    // induced copula of the candidate: plug the marginal quantiles back in
    auto induced = [&](double u, double v) -> double {
        if (u <= 0.0 || v <= 0.0) return 0.0;
        double x = u >= 1.0 ? 0.0 : hc.inverse_survival(u);
        double y = v >= 1.0 ? 0.0 : hc.inverse_survival(v);
        return joint(x, y);
    };
    VerdictSweep rect(tol);
    auto grid = linspace(0.0, 1.0, grid_n);
    std::vector<std::vector<double>> vals(grid.size(), std::vector<double>(grid.size()));
    for (size_t i = 0; i < grid.size(); ++i)
        for (size_t j = 0; j < grid.size(); ++j) vals[i][j] = induced(grid[i], grid[j]);
    for (size_t i = 0; i + 1 < grid.size(); ++i)
        for (size_t j = 0; j + 1 < grid.size(); ++j) {
            double sum = vals[i][j] + vals[i + 1][j + 1] - vals[i][j + 1] - vals[i + 1][j];
            rect.add(sum, {grid[i], grid[j], grid[i + 1], grid[j + 1]});
        }
    return {joint, rect.finish()};
}

} // namespace bivage
