#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <string>

#include "bivage/numkit.hpp"
#include "bivage/verdict.hpp"

namespace bivage {

enum class Convexity { Yes, No, Unchecked };

/// Additive generator of an Archimedean semi-copula: a continuous strictly
/// decreasing phi on (0,1] with phi(1) = 0. Strict generators diverge at 0;
/// non-strict ones (finite phi(0+)) use the pseudo-inverse convention
/// phi_inverse(y) = 0 for y >= phi(0+).
class Generator {
public:
    Generator() = default;

    static Generator log_gen(); ///< phi(t) = -ln t, the independence generator
    static Generator clayton(double theta);
    static Generator gumbel(double theta);
    static Generator frank(double theta);
    static Generator cosine(); ///< phi(t) = cos(pi t / 2), non-strict and non-convex

    static Generator from_functions(std::function<double(double)> phi,
                                    std::function<double(double)> phi_inverse,
                                    std::function<double(double)> phi_prime,
                                    double phi_at_zero, std::string label,
                                    Convexity convexity,
                                    std::function<double(double)> log_phi_inverse = {});

    bool valid() const { return impl_ != nullptr; }

    double phi(double t) const;
    /// Pseudo-inverse on [0, inf): exact inverse below phi(0+), zero beyond.
    double phi_inverse(double y) const;
    /// Analytic derivative when provided, else a central finite difference.
    double phi_prime(double t) const;
    bool has_analytic_prime() const;

    double phi_at_zero() const; ///< +inf for strict generators
    bool strict() const { return std::isinf(phi_at_zero()); }

    /// log(phi_inverse(y)) without the exp/log round trip when the family
    /// provides it; falls back to log(phi_inverse(y)).
    double log_phi_inverse(double y) const;
    bool has_log_inverse() const;

    Convexity convexity() const;
    const std::string& label() const;

    /// Grid checks of the generator contract (strict decrease, phi(1)=0,
    /// phi_inverse round trip). Throws InvalidGenerator on failure.
    void validate_contract(int grid_n = 65, double tol = 1e-8) const;

    /// Numeric convexity verdict of phi on an interior grid.
    Verdict check_convex(int grid_n = 129, double tol = kVerdictTol) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit Generator(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

} // namespace bivage
