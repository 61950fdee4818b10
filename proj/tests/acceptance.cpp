// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs end to end in well under two minutes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bivage/cli.hpp"
#include "bivage/harness.hpp"

using namespace bivage;

namespace {

int g_failures = 0;

void report(int n, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", n, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

double sup_copula_diff(const SemiCopula& a, const SemiCopula& b, int n) {
    double worst = 0.0;
    for (double u : linspace(0.0, 1.0, n))
        for (double v : linspace(0.0, 1.0, n))
            worst = std::max(worst, std::abs(a(u, v) - b(u, v)));
    return worst;
}

struct Golden {
    const char* key;
    double value;
};

void criterion_1_golden_values() {
    const Golden golden[] = {
        {"pi", 0.8465735902799727},       {"m", 0.5},
        {"w", 1.0},                       {"clayton:1", 0.75},
        {"gumbel:2", 0.6732867951399863},
    };
    bool ok = true;
    std::string detail;
    for (const auto& g : golden) {
        auto cop = make_copula(g.key);
        double sup = kendall_partition_sup(cop, 0.5).value;
        if (std::abs(sup - g.value) > 1e-3) {
            ok = false;
            detail += std::string(g.key) + " sup=" + std::to_string(sup) + " ";
        }
        if (cop.has_generator()) {
            double closed = kendall_archimedean(cop.generator(), 0.5);
            if (std::abs(closed - g.value) > 1e-6) {
                ok = false;
                detail += std::string(g.key) + " closed=" + std::to_string(closed) + " ";
            }
            double integral = kendall_integral(cop, 0.5);
            if (std::abs(integral - g.value) > 1e-6) {
                ok = false;
                detail += std::string(g.key) + " integral=" + std::to_string(integral) + " ";
            }
        }
    }
    double kc_half = kendall_archimedean(Generator::cosine(), 0.5);
    if (std::abs(kc_half - 1.1366197723675814) > 1e-6) {
        ok = false;
        detail += "cosine(0.5)=" + std::to_string(kc_half) + " ";
    }
    double kc_small = kendall_archimedean(Generator::cosine(), 0.01);
    if (!(kc_small > 10.0)) {
        ok = false;
        detail += "cosine(0.01)=" + std::to_string(kc_small) + " ";
    }
    report(1, "Kendall golden values at t=0.5 (sup 1e-3, closed/integral 1e-6)", ok,
           detail);
}

void criterion_2_route_agreement() {
    auto start = std::chrono::steady_clock::now();
    const char* keys[] = {"pi", "clayton:0.5", "clayton:1", "clayton:2",
                          "gumbel:1.5", "gumbel:2"};
    auto grid = kendall_default_grid(19);
    bool ok = true;
    std::string detail;
    for (const char* key : keys) {
        auto cop = make_copula(key);
        auto closed = kendall_curve_closed(cop.generator(), grid);
        auto sup = kendall_curve_sup(cop, grid);
        auto integral = kendall_curve_integral(cop, grid);
        for (size_t i = 0; i < grid.size(); ++i) {
            double worst = std::max(std::abs(closed.values[i] - sup.values[i]),
                                    std::max(std::abs(closed.values[i] - integral.values[i]),
                                             std::abs(sup.values[i] - integral.values[i])));
            if (worst > 1e-3) {
                ok = false;
                detail += std::string(key) + "@t=" + std::to_string(grid[i]) + " ";
            }
        }
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= 30.0) {
        ok = false;
        detail += "runtime " + std::to_string(seconds) + "s";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.2fs)", seconds);
    report(2, std::string("route agreement within 1e-3 over six families") + buf, ok,
           detail);
}

void criterion_3_transport() {
    auto grid = kendall_default_grid(19);
    auto k_pi = kendall_curve_closed(Generator::log_gen(), grid);
    auto w2 = make_marginal("weibull:2");
    bool ok = true;
    std::string detail;
    auto transported = kendall_curve_transported(k_pi, w2, grid);
    for (size_t i = 0; i < grid.size(); ++i) {
        double t = grid[i];
        double closed_form = t - t * std::log(t) / 2.0;
        if (std::abs(transported.values[i] - closed_form) > 1e-6) {
            ok = false;
            detail += "closed-form@t=" + std::to_string(t) + " ";
        }
    }
    BivariateModel mdl(make_copula("pi"), w2);
    auto b = ageing_function(mdl);
    auto b_sup = kendall_curve_sup(b, grid);
    for (size_t i = 0; i < grid.size(); ++i) {
        if (std::abs(transported.values[i] - b_sup.values[i]) > 1e-3) {
            ok = false;
            detail += "sup@t=" + std::to_string(grid[i]) + " ";
        }
    }
    double mid = transport_kendall_to_ageing(k_pi, w2, 0.5);
    if (std::abs(mid - 0.6732867951399863) > 1e-6) {
        ok = false;
        detail += "K_B(0.5)=" + std::to_string(mid);
    }
    report(3, "transported ageing Kendall for (pi, weibull:2) matches t - t ln t / 2",
           ok, detail);
}

void criterion_4_reconstruction() {
    auto grid = kendall_default_grid(99);
    bool ok = true;
    std::string detail;
    struct Case {
        const char* key;
        double t0;
    };
    for (const Case& c : {Case{"pi", std::exp(-1.0)}, Case{"clayton:1", 0.5}}) {
        auto cop = make_copula(c.key);
        auto curve = kendall_curve_closed(cop.generator(), grid);
        auto gen = reconstruct_generator(curve, c.t0);
        double worst = 0.0;
        for (size_t i = 0; i < grid.size(); ++i)
            worst = std::max(worst, std::abs(kendall_archimedean(gen, grid[i]) -
                                             curve.values[i]));
        if (worst > 1e-3) {
            ok = false;
            detail += std::string(c.key) + " roundtrip=" + std::to_string(worst) + " ";
        }
    }
    bool threw = false;
    try {
        auto k_m = kendall_curve_sup(SemiCopula::comonotone(), grid);
        reconstruct_generator(k_m, 0.5);
    } catch (const NotPseudoArchimedean&) {
        threw = true;
    }
    if (!threw) {
        ok = false;
        detail += "M did not raise NotPseudoArchimedean";
    }
    report(4, "generator reconstruction round trips within 1e-3; M is rejected", ok,
           detail);
}

void criterion_5_ageing_identities() {
    bool ok = true;
    std::string detail;
    for (const char* cop : {"clayton:1", "gumbel:2", "frank:2"}) {
        BivariateModel mdl(make_copula(cop), make_marginal("exp:1"));
        double d = sup_copula_diff(ageing_function(mdl), mdl.survival_copula(), 64);
        if (d > 1e-10) {
            ok = false;
            detail += std::string("exp|") + cop + "=" + std::to_string(d) + " ";
        }
    }
    for (const char* marg : {"weibull:0.5", "exp:1", "pareto:1"}) {
        auto mdl = schur_constant_model(make_marginal(marg));
        double d = sup_copula_diff(ageing_function(mdl), SemiCopula::product(), 64);
        if (d > 1e-6) {
            ok = false;
            detail += std::string("schur|") + marg + "=" + std::to_string(d) + " ";
        }
    }
    {
        BivariateModel mdl(make_copula("pi"), make_marginal("weibull:2"));
        double d = sup_copula_diff(ageing_function(mdl), make_copula("gumbel:2"), 64);
        if (d > 1e-8) {
            ok = false;
            detail += "pi|weibull:2 vs gumbel:2 = " + std::to_string(d);
        }
    }
    report(5, "ageing-function identities (B=C^ for exp, B=Pi for Schur-constant, "
              "B=gumbel:2 for pi/weibull:2)",
           ok, detail);
}

void criterion_6_triangle() {
    bool ok = true;
    std::string detail;
    for (const auto& e : builtin_registry()) {
        BivariateModel mdl(make_copula(e.copula), make_marginal(e.marginal), e.id);
        auto rep = equivalence_triangle(mdl);
        if (!rep.agree) {
            ok = false;
            detail += e.id + "(" + to_string(rep.conditional_side) + "/" +
                      to_string(rep.schur_side) + "/" + to_string(rep.migrativity_side) +
                      ") ";
        }
    }
    report(6, "residual-life, Schur-concavity, and migrativity-of-B verdicts agree on "
              "every registry model",
           ok, detail);
}

void criterion_7_sweep() {
    std::ostringstream out, err;
    int code = cli::run({"verify", "builtin"}, out, err);
    bool ok = code == 0;
    std::string detail = ok ? "" : ("exit=" + std::to_string(code));
    int models = 0;
    bool demo_ok = false;
    std::istringstream is(out.str());
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line);
        if (j["suite"] == "migrativity-ageing") ++models;
        if (j["suite"] == "mixture-demo" && j["model"] == "mixexp:1,5:0.5,0.5") {
            demo_ok = j["verdicts"]["IFR(component 0)"]["status"] == "holds" &&
                      j["verdicts"]["IFR(component 1)"]["status"] == "holds" &&
                      j["verdicts"]["IFR(mixture)"]["status"] == "fails" &&
                      j["verdicts"]["DFR(mixture)"]["status"] == "holds";
        }
    }
    if (models < 20) {
        ok = false;
        detail += " models=" + std::to_string(models);
    }
    if (!demo_ok) {
        ok = false;
        detail += " mixture demo pattern missing";
    }
    report(7, "verify builtin: >= 20 models, zero violations, mixture paradox pattern",
           ok, detail);
}

void criterion_8_invariants() {
    bool ok = true;
    std::string detail;
    auto grid = kendall_default_grid(19);

    // K(t) >= t for every curve produced by any route
    for (const char* key : {"pi", "m", "w", "clayton:1", "gumbel:2", "frank:-2",
                            "arch-gen:cosine"}) {
        auto cop = make_copula(key);
        std::vector<KendallCurve> curves;
        curves.push_back(kendall_curve_sup(cop, grid));
        if (cop.has_generator())
            curves.push_back(kendall_curve_closed(cop.generator(), grid));
        for (const auto& k : curves)
            for (size_t i = 0; i < grid.size(); ++i)
                if (k.values[i] < grid[i] - 1e-9) {
                    ok = false;
                    detail += std::string(key) + " K<t ";
                }
    }

    // validated quasi-copulas stay below one
    for (const char* key : {"pi", "m", "w", "clayton:1", "gumbel:2", "frank:3",
                            "frank:-3"}) {
        auto cop = make_copula(key);
        if (validate(cop).two_increasing.fails()) continue;
        auto k = kendall_curve_sup(cop, grid);
        for (double v : k.values)
            if (v > 1.0 + 1e-6) {
                ok = false;
                detail += std::string(key) + " K>1 ";
            }
    }

    // PMD implies PQD; Archimedean LTD coincides with PMD
    for (const char* key : {"pi", "m", "w", "clayton:0.5", "clayton:1", "clayton:2",
                            "gumbel:1.5", "gumbel:2", "frank:2", "frank:-2"}) {
        auto cop = make_copula(key);
        auto mig = check_migrativity(cop);
        if (mig.pmd.holds() && !check_pqd(cop).pqd.holds()) {
            ok = false;
            detail += std::string(key) + " PMD!=>PQD ";
        }
        if (cop.has_generator()) {
            auto ltd = check_ltd_rti(cop).ltd;
            if (!ltd.inconclusive() && !mig.pmd.inconclusive() &&
                ltd.holds() != mig.pmd.holds()) {
                ok = false;
                detail += std::string(key) + " LTD!=PMD ";
            }
        }
    }
    report(8, "universal invariants: K>=t, quasi-copula K<=1, PMD=>PQD, LTD=PMD "
              "(Archimedean)",
           ok, detail);
}

} // namespace

int main() {
    auto start = std::chrono::steady_clock::now();
    criterion_1_golden_values();
    criterion_2_route_agreement();
    criterion_3_transport();
    criterion_4_reconstruction();
    criterion_5_ageing_identities();
    criterion_6_triangle();
    criterion_7_sweep();
    criterion_8_invariants();
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d/8 criteria passed in %.1fs\n", 8 - g_failures, seconds);
    return g_failures == 0 ? 0 : 1;
}
