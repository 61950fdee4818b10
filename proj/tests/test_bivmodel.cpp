#include <doctest.h>

#include <cmath>

#include "bivage/bivmodel.hpp"
#include "bivage/registry.hpp"

using namespace bivage;

namespace {

BivariateModel model(const char* cop, const char* marg) {
    return BivariateModel(make_copula(cop), make_marginal(marg));
}

double sup_diff(const SemiCopula& a, const SemiCopula& b, int n) {
    double worst = 0.0;
    for (double u : linspace(0.0, 1.0, n))
        for (double v : linspace(0.0, 1.0, n))
            worst = std::max(worst, std::abs(a(u, v) - b(u, v)));
    return worst;
}

} // namespace

TEST_CASE("gamma transform basics") {
    GammaTransform gt(SurvivalModel::weibull(2.0));
    CHECK(gt.gamma(0.0) == 0.0);
    CHECK(gt.gamma(1.0) == 1.0);
    CHECK(gt.gamma_inv(0.5) == doctest::Approx(0.618503137801576).epsilon(1e-10));
    for (double u : linspace(0.05, 0.95, 19)) {
        CHECK(gt.gamma(gt.gamma_inv(u)) == doctest::Approx(u).epsilon(1e-8));
        // gamma' matches a finite difference
        double fd = central_difference([&gt](double x) { return gt.gamma(x); }, u, 1e-6,
                                       1e-9, 1.0 - 1e-9);
        CHECK(gt.gamma_prime(u) == doctest::Approx(fd).epsilon(1e-4));
    }
    // monotone increasing
    CHECK(monotonicity_verdict([&gt](double u) { return gt.gamma(u); },
                               linspace(0.01, 0.99, 33), Direction::Increasing)
              .holds());
}

TEST_CASE("joint survival margins") {
    auto mdl = model("clayton:1", "weibull:2");
    for (double x : linspace(0.0, 2.0, 9)) {
        CHECK(mdl.joint_survival(x, 0.0) ==
              doctest::Approx(mdl.marginal().survival(x)).epsilon(1e-10));
        CHECK(mdl.joint_survival(0.0, x) ==
              doctest::Approx(mdl.marginal().survival(x)).epsilon(1e-10));
        for (double y : linspace(0.0, 2.0, 9))
            CHECK(mdl.joint_survival(x, y) ==
                  doctest::Approx(mdl.joint_survival(y, x)).epsilon(1e-12));
    }
}

TEST_CASE("joint survival is nonincreasing in each argument") {
    for (const char* cop : {"pi", "m", "w", "clayton:1", "frank:-2"}) {
        auto mdl = model(cop, "weibull:2");
        double xmax = mdl.marginal().suggested_xmax();
        for (double y : linspace(0.0, xmax, 9)) {
            auto sect = [&mdl, y](double x) { return mdl.joint_survival(x, y); };
            CHECK(monotonicity_verdict(sect, linspace(0.0, xmax, 33),
                                       Direction::Decreasing)
                      .holds());
        }
    }
}

TEST_CASE("ageing function identities") {
    // unit exponential marginal: B equals the survival copula
    for (const char* cop : {"clayton:1", "gumbel:2", "frank:-2"}) {
        auto mdl = model(cop, "exp:1");
        auto b = ageing_function(mdl);
        CHECK(sup_diff(b, mdl.survival_copula(), 33) < 1e-10);
    }

    // independence with a weibull-2 marginal: B is the gumbel-2 copula
    auto b = ageing_function(model("pi", "weibull:2"));
    auto gumbel2 = make_copula("gumbel:2");
    CHECK(sup_diff(b, gumbel2, 65) < 1e-8);
    CHECK(b(0.5, 0.5) == doctest::Approx(0.37521422724648174).epsilon(1e-9));

    // schur-constant models: B collapses to the product copula
    for (const char* marg : {"weibull:0.5", "exp:1", "pareto:1"}) {
        auto m = make_marginal(marg);
        auto mdl = schur_constant_model(m);
        CHECK(sup_diff(ageing_function(mdl), SemiCopula::product(), 33) < 1e-6);
    }
}

TEST_CASE("ageing function generator transport") {
    auto mdl = model("clayton:1", "weibull:2");
    auto b = ageing_function(mdl);
    REQUIRE(b.has_generator());
    const auto& psi = b.generator();
    const auto phi = Generator::clayton(1.0);
    auto w2 = SurvivalModel::weibull(2.0);
    for (double u : linspace(0.05, 0.95, 19)) {
        double expected = phi.phi(w2.survival(-std::log(u)));
        CHECK(psi.phi(u) == doctest::Approx(expected).epsilon(1e-8));
    }
    // lazy-composition route agrees with the generator route
    GammaTransform gt(w2);
    auto chat = mdl.survival_copula();
    for (double u : linspace(0.1, 0.9, 9))
        for (double v : linspace(0.1, 0.9, 9)) {
            double composed = gt.gamma(chat(gt.gamma_inv(u), gt.gamma_inv(v)));
            CHECK(b(u, v) == doctest::Approx(composed).epsilon(1e-8));
        }
}

TEST_CASE("ageing function output is always a semi-copula") {
    for (const char* cop : {"pi", "m", "w", "clayton:1", "gumbel:2", "frank:-2"}) {
        for (const char* marg : {"exp:1", "weibull:2", "weibull:0.5"}) {
            auto rep = validate(ageing_function(model(cop, marg)));
            CAPTURE(cop);
            CAPTURE(marg);
            CHECK(rep.boundary.holds());
            CHECK(rep.monotone.holds());
        }
    }
}

TEST_CASE("schur-constant model") {
    auto exp_mdl = schur_constant_model(SurvivalModel::exponential(1.0));
    for (double x : linspace(0.0, 3.0, 9))
        for (double y : linspace(0.0, 3.0, 9))
            CHECK(exp_mdl.joint_survival(x, y) ==
                  doctest::Approx(std::exp(-(x + y))).epsilon(1e-10));

    auto w05 = schur_constant_model(SurvivalModel::weibull(0.5));
    CHECK(w05.joint_survival(1.0, 1.0) ==
          doctest::Approx(0.2431167344342142).epsilon(1e-10));
    auto m = SurvivalModel::weibull(0.5);
    for (double x : linspace(0.0, 4.0, 9))
        for (double y : linspace(0.0, 4.0, 9))
            CHECK(w05.joint_survival(x, y) ==
                  doctest::Approx(m.survival(x + y)).epsilon(1e-10));

    CHECK_THROWS_AS(schur_constant_model(SurvivalModel::weibull(2.0)), NotACopula);
}

TEST_CASE("bivariate ageing wedge checks") {
    // iid weibull-2: positive ageing
    auto pos = biv_ifr_check(model("pi", "weibull:2"));
    CHECK(pos.biv_ifr.holds());
    CHECK(pos.biv_dfr.fails());

    // schur-constant: equality on both sides
    auto neutral = biv_ifr_check(schur_constant_model(SurvivalModel::weibull(0.5)));
    CHECK(neutral.biv_ifr.holds());
    CHECK(neutral.biv_dfr.holds());

    // iid mixture of exponentials: negative ageing
    auto neg = biv_ifr_check(model("pi", "mixexp:1,5:0.5,0.5"));
    CHECK(neg.biv_dfr.holds());
    CHECK(neg.biv_ifr.fails());

    // spot value from the independent weibull-2 model
    auto mdl = model("pi", "weibull:2");
    CHECK(mdl.joint_survival(0.5, 0.8) == doctest::Approx(std::exp(-0.89)).epsilon(1e-12));
    CHECK(mdl.joint_survival(0.2, 1.1) == doctest::Approx(std::exp(-1.25)).epsilon(1e-12));
}

TEST_CASE("equivalence triangle agrees on every registry model") {
    for (const auto& e : builtin_registry()) {
        auto mdl = BivariateModel(make_copula(e.copula), make_marginal(e.marginal), e.id);
        auto rep = equivalence_triangle(mdl);
        CAPTURE(e.id);
        CHECK(rep.agree);
    }
}

TEST_CASE("triangle sides land where expected") {
    auto rep1 = equivalence_triangle(model("pi", "weibull:2"));
    CHECK(rep1.conditional_side == Side::Positive);
    CHECK(rep1.schur_side == Side::Positive);
    CHECK(rep1.migrativity_side == Side::Positive);

    auto rep2 = equivalence_triangle(schur_constant_model(SurvivalModel::exponential(1.0)));
    CHECK(rep2.conditional_side == Side::Neutral);
    CHECK(rep2.schur_side == Side::Neutral);
    CHECK(rep2.migrativity_side == Side::Neutral);

    auto rep3 = equivalence_triangle(model("pi", "mixexp:1,5:0.5,0.5"));
    CHECK(rep3.conditional_side == Side::Negative);
    CHECK(rep3.schur_side == Side::Negative);
    CHECK(rep3.migrativity_side == Side::Negative);
}

TEST_CASE("rebuild from the ageing function") {
    // round trip: rebuilding with the model's own marginal reproduces F
    for (const char* cop : {"pi", "clayton:1", "gumbel:2"}) {
        auto mdl = model(cop, "weibull:2");
        auto b = ageing_function(mdl);
        auto rebuilt = rebuild_from_ageing(b, mdl.marginal());
        double xmax = mdl.marginal().suggested_xmax();
        for (double x : linspace(0.0, xmax, 9))
            for (double y : linspace(0.0, xmax, 9))
                CHECK(std::abs(rebuilt.joint(x, y) - mdl.joint_survival(x, y)) < 1e-8);
    }

    // B = Pi with an exponential head gives the independent model
    auto r1 = rebuild_from_ageing(SemiCopula::product(), SurvivalModel::exponential(1.0));
    CHECK(r1.joint(0.7, 1.1) == doctest::Approx(std::exp(-1.8)).epsilon(1e-10));
    CHECK(!r1.two_increasing.fails());

    // B = Pi forces a schur-constant candidate: valid iff the head is convex
    auto ok = rebuild_from_ageing(SemiCopula::product(), SurvivalModel::weibull(0.5));
    CHECK(!ok.two_increasing.fails());
    auto bad = rebuild_from_ageing(SemiCopula::product(), SurvivalModel::weibull(2.0));
    CHECK(bad.two_increasing.fails());
}
