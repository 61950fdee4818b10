#include "bivage/generator.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "bivage/errors.hpp"

namespace bivage {

struct Generator::Impl {
    std::function<double(double)> phi;
    std::function<double(double)> phi_inv;
    std::function<double(double)> phi_prime;   // may be empty
    std::function<double(double)> log_phi_inv; // may be empty
    double phi0 = std::numeric_limits<double>::infinity();
    std::string label;
    Convexity convexity = Convexity::Unchecked;
};

double Generator::phi(double t) const { return impl_->phi(t); }

double Generator::phi_inverse(double y) const {
    if (y <= 0.0) return 1.0;
    if (y >= impl_->phi0) return 0.0;
    return impl_->phi_inv(y);
}

double Generator::phi_prime(double t) const {
    if (impl_->phi_prime) return impl_->phi_prime(t);
    double h = 1e-6 * std::min(t, 1.0 - t + 1e-3);
    h = std::max(h, 1e-9);
    return central_difference(impl_->phi, t, h, 1e-12, 1.0);
}

bool Generator::has_analytic_prime() const { return static_cast<bool>(impl_->phi_prime); }

double Generator::phi_at_zero() const { return impl_->phi0; }

Convexity Generator::convexity() const { return impl_->convexity; }

const std::string& Generator::label() const { return impl_->label; }

void Generator::validate_contract(int grid_n, double tol) const {
    if (std::abs(phi(1.0)) > tol)
        throw InvalidGenerator(label() + ": phi(1) = " + std::to_string(phi(1.0)));
    auto grid = linspace(1e-4, 1.0, grid_n);
    double prev = phi(grid[0]);
    for (size_t i = 1; i < grid.size(); ++i) {
        double cur = phi(grid[i]);
        if (cur > prev + tol)
            throw InvalidGenerator(label() + ": phi not decreasing near t = " +
                                   std::to_string(grid[i]));
        prev = cur;
    }
    for (double t : linspace(0.05, 0.95, 19)) {
        double y = phi(t);
        if (std::abs(phi_inverse(y) - t) > tol * (1.0 + std::abs(t)))
            throw InvalidGenerator(label() + ": phi_inverse round trip fails at t = " +
                                   std::to_string(t));
    }
}

Verdict Generator::check_convex(int grid_n, double tol) const {
    auto grid = linspace(1e-3, 1.0, grid_n);
    return convexity_verdict(impl_->phi, grid, tol);
}

Generator Generator::from_functions(std::function<double(double)> phi,
                                    std::function<double(double)> phi_inverse,
                                    std::function<double(double)> phi_prime,
                                    double phi_at_zero, std::string label,
                                    Convexity convexity,
                                    std::function<double(double)> log_phi_inverse) {
    auto impl = std::make_shared<Impl>();
    impl->phi = std::move(phi);
    impl->phi_inv = std::move(phi_inverse);
    impl->phi_prime = std::move(phi_prime);
    impl->log_phi_inv = std::move(log_phi_inverse);
    impl->phi0 = phi_at_zero;
    impl->label = std::move(label);
    impl->convexity = convexity;
    return Generator(std::move(impl));
}

double Generator::log_phi_inverse(double y) const {
    if (y <= 0.0) return 0.0;
    if (impl_->log_phi_inv) return impl_->log_phi_inv(y);
    return std::log(phi_inverse(y));
}

bool Generator::has_log_inverse() const { return static_cast<bool>(impl_->log_phi_inv); }

Generator Generator::log_gen() {
    return from_functions([](double t) { return -std::log(t); },
                          [](double y) { return std::exp(-y); },
                          [](double t) { return -1.0 / t; },
                          std::numeric_limits<double>::infinity(), "log", Convexity::Yes,
                          [](double y) { return -y; });
}

Generator Generator::clayton(double theta) {
    if (theta <= 0.0) throw ParseError("clayton: theta must be > 0");
    return from_functions(
        [theta](double t) { return (std::pow(t, -theta) - 1.0) / theta; },
        [theta](double y) { return std::pow(1.0 + theta * y, -1.0 / theta); },
        [theta](double t) { return -std::pow(t, -theta - 1.0); },
        std::numeric_limits<double>::infinity(), "clayton:" + std::to_string(theta),
        Convexity::Yes, [theta](double y) { return -std::log1p(theta * y) / theta; });
}

Generator Generator::gumbel(double theta) {
    if (theta <= 0.0) throw ParseError("gumbel: theta must be > 0");
    // convex (a copula generator) iff theta >= 1; still a semi-copula below
    return from_functions(
        [theta](double t) { return std::pow(-std::log(t), theta); },
        [theta](double y) { return std::exp(-std::pow(y, 1.0 / theta)); },
        [theta](double t) {
            double l = -std::log(t);
            return -theta * std::pow(l, theta - 1.0) / t;
        },
        std::numeric_limits<double>::infinity(), "gumbel:" + std::to_string(theta),
        theta >= 1.0 ? Convexity::Yes : Convexity::No,
        [theta](double y) { return -std::pow(y, 1.0 / theta); });
}

Generator Generator::frank(double theta) {
    if (theta == 0.0) throw ParseError("frank: theta must be nonzero");
    double denom = std::expm1(-theta);
    return from_functions(
        [theta, denom](double t) { return -std::log(std::expm1(-theta * t) / denom); },
        [theta, denom](double y) { return -std::log1p(denom * std::exp(-y)) / theta; },
        [theta](double t) {
            double e = std::exp(-theta * t);
            return theta * e / (e - 1.0);
        },
        std::numeric_limits<double>::infinity(), "frank:" + std::to_string(theta),
        Convexity::Yes);
}

Generator Generator::cosine() {
    const double half_pi = std::numbers::pi / 2.0;
    return from_functions(
        [half_pi](double t) { return std::cos(half_pi * t); },
        [half_pi](double y) { return std::acos(y) / half_pi; },
        [half_pi](double t) { return -half_pi * std::sin(half_pi * t); }, 1.0, "cosine",
        Convexity::No);
}

} // namespace bivage
