#include <doctest.h>

#include <cmath>
#include <tuple>

#include "bivage/semicopula.hpp"

using namespace bivage;

TEST_CASE("archimedean closed values") {
    auto pi = SemiCopula::product();
    CHECK(pi(0.3, 0.7) == doctest::Approx(0.21).epsilon(1e-12));

    auto clayton = SemiCopula::archimedean(Generator::clayton(1.0));
    CHECK(clayton(0.5, 0.5) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    auto gumbel = SemiCopula::archimedean(Generator::gumbel(2.0));
    CHECK(gumbel(0.5, 0.5) == doctest::Approx(0.37521422724648174).epsilon(1e-10));
}

TEST_CASE("validation of the standard families") {
    for (const auto& s : {SemiCopula::product(), SemiCopula::comonotone(),
                          SemiCopula::countermonotone(),
                          SemiCopula::archimedean(Generator::clayton(1.0)),
                          SemiCopula::archimedean(Generator::frank(-2.0))}) {
        auto rep = validate(s);
        CHECK(rep.boundary.holds());
        CHECK(rep.monotone.holds());
        CHECK(!rep.two_increasing.fails());
    }
}

TEST_CASE("the cosine generator yields a genuine semi-copula") {
    auto s = SemiCopula::archimedean(Generator::cosine());
    auto rep = validate(s);
    CHECK(rep.boundary.holds());
    CHECK(rep.monotone.holds());
    CHECK(rep.two_increasing.fails());
    REQUIRE(rep.two_increasing.witness.size() == 4);
    // re-evaluate the rectangle at the witness: genuinely negative
    double u0 = rep.two_increasing.witness[0], v0 = rep.two_increasing.witness[1];
    double u1 = rep.two_increasing.witness[2], v1 = rep.two_increasing.witness[3];
    CHECK(s(u0, v0) + s(u1, v1) - s(u0, v1) - s(u1, v0) < -1e-7);
}

TEST_CASE("gumbel below one is only a semi-copula") {
    auto s = SemiCopula::archimedean(Generator::gumbel(0.5));
    CHECK(s.kind() == CopulaKind::SemiCopula);
    auto rep = validate(s);
    CHECK(rep.boundary.holds());
    CHECK(rep.monotone.holds());
    CHECK(rep.two_increasing.fails());
}

TEST_CASE("survival transform is an involution") {
    for (const auto& c : {SemiCopula::product(), SemiCopula::comonotone(),
                          SemiCopula::countermonotone(),
                          SemiCopula::archimedean(Generator::clayton(1.0))}) {
        auto twice = survival_from_connecting(survival_from_connecting(c));
        for (double u : linspace(0.0, 1.0, 9))
            for (double v : linspace(0.0, 1.0, 9))
                CHECK(std::abs(twice(u, v) - c(u, v)) < 1e-12);
    }
    // M and W are fixed points
    auto m = survival_from_connecting(SemiCopula::comonotone());
    auto w = survival_from_connecting(SemiCopula::countermonotone());
    for (double u : linspace(0.0, 1.0, 9))
        for (double v : linspace(0.0, 1.0, 9)) {
            CHECK(std::abs(m(u, v) - std::min(u, v)) < 1e-12);
            CHECK(std::abs(w(u, v) - std::max(u + v - 1.0, 0.0)) < 1e-12);
        }
}

TEST_CASE("PQD / NQD") {
    auto r1 = check_pqd(SemiCopula::comonotone());
    CHECK(r1.pqd.holds());
    CHECK(r1.nqd.fails());

    auto r2 = check_pqd(SemiCopula::archimedean(Generator::clayton(1.0)));
    CHECK(r2.pqd.holds());

    auto r3 = check_pqd(SemiCopula::countermonotone());
    CHECK(r3.nqd.holds());
    CHECK(r3.pqd.fails());

    auto r4 = check_pqd(SemiCopula::product());
    CHECK(r4.pqd.holds());
    CHECK(r4.nqd.holds()); // equality
}

TEST_CASE("migrativity") {
    auto m = check_migrativity(SemiCopula::comonotone());
    CHECK(m.pmd.holds());

    auto pi = check_migrativity(SemiCopula::product());
    CHECK(pi.pmd.holds());
    CHECK(pi.nmd.holds()); // equality: both sides are uvs

    auto w = check_migrativity(SemiCopula::countermonotone());
    CHECK(w.nmd.holds());
    CHECK(w.pmd.fails());
}

TEST_CASE("LTD") {
    auto c = check_ltd_rti(SemiCopula::archimedean(Generator::clayton(1.0)));
    CHECK(c.ltd.holds());

    auto m = check_ltd_rti(SemiCopula::comonotone());
    CHECK(m.ltd.holds());

    auto w = check_ltd_rti(SemiCopula::countermonotone());
    CHECK(w.ltd.fails());
}

TEST_CASE("SI via section concavity") {
    CHECK(check_si(SemiCopula::product()).holds());
    CHECK(check_si(SemiCopula::archimedean(Generator::clayton(1.0))).holds());
    CHECK(check_si(SemiCopula::countermonotone()).fails());
}

TEST_CASE("PMD implies PQD on the tested families") {
    for (const auto& s :
         {SemiCopula::comonotone(), SemiCopula::product(),
          SemiCopula::archimedean(Generator::clayton(1.0)),
          SemiCopula::archimedean(Generator::gumbel(2.0)),
          SemiCopula::archimedean(Generator::frank(2.0)),
          SemiCopula::archimedean(Generator::frank(-2.0)),
          SemiCopula::countermonotone()}) {
        auto mig = check_migrativity(s);
        if (mig.pmd.holds()) CHECK(check_pqd(s).pqd.holds());
    }
}

TEST_CASE("archimedean LTD coincides with PMD") {
    for (const auto& s :
         {SemiCopula::product(), SemiCopula::archimedean(Generator::clayton(0.5)),
          SemiCopula::archimedean(Generator::clayton(2.0)),
          SemiCopula::archimedean(Generator::gumbel(1.5)),
          SemiCopula::archimedean(Generator::frank(2.0)),
          SemiCopula::archimedean(Generator::frank(-2.0))}) {
        auto ltd = check_ltd_rti(s).ltd;
        auto pmd = check_migrativity(s).pmd;
        if (!ltd.inconclusive() && !pmd.inconclusive())
            CHECK(ltd.holds() == pmd.holds());
    }
}

TEST_CASE("frechet bounds on validated copulas") {
    auto m = SemiCopula::comonotone();
    auto w = SemiCopula::countermonotone();
    for (const auto& c : {SemiCopula::product(),
                          SemiCopula::archimedean(Generator::clayton(1.0)),
                          SemiCopula::archimedean(Generator::gumbel(2.0)),
                          SemiCopula::archimedean(Generator::frank(-3.0))}) {
        for (double u : linspace(0.0, 1.0, 17))
            for (double v : linspace(0.0, 1.0, 17)) {
                CHECK(c(u, v) >= w(u, v) - 1e-12);
                CHECK(c(u, v) <= m(u, v) + 1e-12);
            }
    }
}

TEST_CASE("schur-constant semi-copula from a marginal") {
    // exponential: G^{-1} generates the product copula
    auto s = schur_constant_semicopula(SurvivalModel::exponential(1.0));
    CHECK(s.kind() == CopulaKind::Copula);
    for (double u : linspace(0.1, 0.9, 9))
        CHECK(s(u, 0.5) == doctest::Approx(0.5 * u).epsilon(1e-9));

    // convex weibull: a copula, value G(2 (ln 2)^2)
    auto w05 = schur_constant_semicopula(SurvivalModel::weibull(0.5));
    CHECK(w05.kind() == CopulaKind::Copula);
    CHECK(w05(0.5, 0.5) == doctest::Approx(0.37521422724648174).epsilon(1e-9));

    // non-convex weibull: only a semi-copula, and visibly not 2-increasing
    auto w2 = schur_constant_semicopula(SurvivalModel::weibull(2.0));
    CHECK(w2.kind() == CopulaKind::SemiCopula);
    CHECK(validate(w2).two_increasing.fails());
}

TEST_CASE("section sup inverse agrees between analytic and bisection paths") {
    auto clayton = SemiCopula::archimedean(Generator::clayton(1.0));
    auto generic = SemiCopula::from_function(
        [clayton](double u, double v) { return clayton(u, v); }, CopulaKind::Copula,
        "clayton-generic");
    for (double u : linspace(0.3, 0.95, 9))
        for (double t : {0.1, 0.25, 0.6}) {
            if (u <= t) continue;
            CHECK(clayton.section_sup_inverse(u, t) ==
                  doctest::Approx(generic.section_sup_inverse(u, t)).epsilon(1e-8));
        }
    // flat section region: M at u > t stops exactly at t
    CHECK(SemiCopula::comonotone().section_sup_inverse(0.8, 0.3) ==
          doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("generator contract rejects a non-generator") {
    CHECK_THROWS_AS(SemiCopula::archimedean(Generator::from_functions(
                        [](double t) { return t; }, [](double y) { return y; }, {}, 1.0,
                        "increasing", Convexity::Unchecked)),
                    InvalidGenerator);
}
