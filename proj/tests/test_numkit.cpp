#include <doctest.h>

#include <cmath>

#include "bivage/numkit.hpp"

using namespace bivage;

namespace {

RealFunction1D wrap(std::function<double(double)> f, double lo, double hi) {
    RealFunction1D r;
    r.eval = std::move(f);
    r.domain = {lo, hi};
    return r;
}

// simple deterministic LCG for property sweeps
struct Lcg {
    std::uint64_t s = 12345;
    double next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return double(s >> 11) * 0x1.0p-53;
    }
};

} // namespace

TEST_CASE("monotone_inverse closed forms") {
    auto expd = wrap([](double x) { return std::exp(-x); }, 0.0, 50.0);
    CHECK(monotone_inverse(expd, 0.5, {0.0, 50.0}) == doctest::Approx(std::log(2.0)).epsilon(1e-9));

    auto ident = wrap([](double x) { return x; }, 0.0, 1.0);
    CHECK(monotone_inverse(ident, 0.25, {0.0, 1.0}) == doctest::Approx(0.25).epsilon(1e-9));

    auto weib2 = wrap([](double x) { return std::exp(-x * x); }, 0.0, 10.0);
    CHECK(monotone_inverse(weib2, 0.5, {0.0, 10.0}) ==
          doctest::Approx(0.8325546111576977).epsilon(1e-9));
}

TEST_CASE("monotone_inverse rejects non-monotone samples") {
    auto bump = wrap([](double x) { return x * (1.0 - x); }, 0.0, 1.0);
    CHECK_THROWS_AS(monotone_inverse(bump, 0.1, {0.0, 1.0}), MonotonicityViolation);
}

TEST_CASE("monotone_inverse is a right inverse over random monotone families") {
    Lcg rng;
    for (int rep = 0; rep < 25; ++rep) {
        double a = 0.2 + 2.0 * rng.next();
        double b = 0.1 + rng.next();
        auto f = wrap([a, b](double x) { return b * x * x * x + a * x; }, 0.0, 2.0);
        double x0 = 2.0 * rng.next();
        double y = f(x0);
        double x = monotone_inverse(f, y, {0.0, 2.0});
        CHECK(std::abs(f(x) - y) <= 1e-10 * (1.0 + std::abs(y)));
    }
}

TEST_CASE("integrate closed forms") {
    CHECK(integrate([](double) { return 1.0; }, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    // section of the product copula: integral of t/u on [1/2, 1] at t = 1/2
    CHECK(integrate([](double u) { return 0.5 / u; }, 0.5, 1.0) ==
          doctest::Approx(0.34657359027997264).epsilon(1e-9));
    // 1/(s ln s) has the antiderivative ln|ln s|
    CHECK(integrate([](double s) { return 1.0 / (s * std::log(s)); }, std::exp(-1.0), 0.5) ==
          doctest::Approx(-0.36651292058166435).epsilon(1e-9));
}

TEST_CASE("integrate is additive over subintervals") {
    auto f = [](double x) { return std::cos(3.0 * x) + x * x; };
    double tol = 1e-9;
    double whole = integrate(f, 0.0, 2.0, tol);
    double split = integrate(f, 0.0, 0.7, tol) + integrate(f, 0.7, 2.0, tol);
    CHECK(std::abs(whole - split) <= 3.0 * tol);
}

TEST_CASE("integrate handles a declared endpoint divergence") {
    // int_0^1 x^{-1/2} dx = 2
    double v = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-8,
                         /*singular_lo=*/true, false);
    CHECK(v == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("monotonicity verdicts") {
    auto grid_pos = linspace(0.0, 1.0, 33);
    auto grid_sym = linspace(-1.0, 1.0, 33);
    auto sq = [](double x) { return x * x; };

    CHECK(monotonicity_verdict(sq, grid_pos, Direction::Increasing).holds());
    auto v = monotonicity_verdict(sq, grid_sym, Direction::Increasing);
    CHECK(v.fails());
    REQUIRE(v.witness.size() == 2);
    CHECK(v.witness[0] < 0.0); // witness pair sits in the decreasing part

    // mixture failure rate r(t) = (e^-t + 5 e^-5t) / (e^-t + e^-5t) decreases
    auto mix_rate = [](double t) {
        double a = std::exp(-t), b = std::exp(-5.0 * t);
        return (a + 5.0 * b) / (a + b);
    };
    CHECK(monotonicity_verdict(mix_rate, linspace(0.0, 5.0, 64), Direction::Decreasing)
              .holds());
}

TEST_CASE("holds on one direction mirrors the negated function") {
    auto grid = linspace(0.1, 2.0, 21);
    auto f = [](double x) { return std::log(x); };
    auto neg = [](double x) { return -std::log(x); };
    CHECK(monotonicity_verdict(f, grid, Direction::Increasing).holds());
    CHECK(monotonicity_verdict(neg, grid, Direction::Decreasing).holds());
}

TEST_CASE("inconclusive shows up between equality noise and the tolerance") {
    // strictly decreasing by 1e-9 per step: below tol, beyond equality eps
    auto f = [](double x) { return -1e-8 * x; };
    auto v = monotonicity_verdict(f, linspace(0.0, 1.0, 11), Direction::Increasing, 1e-7);
    CHECK(v.inconclusive());
}

TEST_CASE("convexity and concavity verdicts") {
    auto grid = linspace(0.0, 1.0, 33);
    CHECK(convexity_verdict([](double x) { return x * x; }, grid).holds());
    CHECK(convexity_verdict([](double x) { return std::sqrt(x + 0.01); }, grid).fails());
    CHECK(concavity_verdict([](double x) { return std::sqrt(x + 0.01); }, grid).holds());
}

TEST_CASE("derivative fallback agrees with analytic derivative") {
    RealFunction1D f;
    f.eval = [](double x) { return std::sin(2.0 * x); };
    f.derivative = [](double x) { return 2.0 * std::cos(2.0 * x); };
    f.domain = {0.0, 3.0};
    RealFunction1D f_no = f;
    f_no.derivative = nullptr;
    for (double x : linspace(0.2, 2.8, 9)) {
        CHECK(std::abs(f.deriv(x) - f_no.deriv(x)) <=
              1e-6 * (1.0 + std::abs(f.deriv(x))));
    }
}
