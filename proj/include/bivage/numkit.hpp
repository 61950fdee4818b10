#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bivage/errors.hpp"
#include "bivage/verdict.hpp"

namespace bivage {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

enum class EndpointBehavior { FiniteLimit, Diverges };

/// One-dimensional real function on a declared interval, with optional
/// analytic derivative. Immutable after construction; safe to share.
struct RealFunction1D {
    std::function<double(double)> eval;
    std::function<double(double)> derivative; // may be empty
    Interval domain{0.0, 1.0};
    EndpointBehavior lo_behavior = EndpointBehavior::FiniteLimit;
    EndpointBehavior hi_behavior = EndpointBehavior::FiniteLimit;

    double operator()(double x) const { return eval(x); }
    bool has_derivative() const { return static_cast<bool>(derivative); }

    /// Analytic derivative when present, central finite difference otherwise.
    double deriv(double x) const;
};

enum class Direction { Increasing, Decreasing };

inline constexpr double kInverseTol = 1e-10;
inline constexpr double kQuadratureTol = 1e-9;

/// Solves f(x) = target for a strictly monotone f on `bracket` by bisection.
///
/// Stops when |f(x) - target| <= tol * (1 + |target|) or the bracket width
/// is below machine resolution. A coarse pre-scan rejects inputs whose
/// samples contradict monotonicity (MonotonicityViolation). Targets beyond
/// the sampled range clamp to the matching endpoint, the generalized-inverse
/// convention.
double monotone_inverse(const RealFunction1D& f, double target, Interval bracket,
                        double tol = kInverseTol);

/// Bisection without the pre-scan, for hot paths that already know their
/// function is monotone. `increasing` gives the direction of f.
double bisect_inverse(const std::function<double(double)>& f, double target, double lo,
                      double hi, bool increasing, double tol = kInverseTol);

/// Adaptive Simpson quadrature with error <= tol (estimated).
/// Endpoints tagged Diverges are approached by shrinking truncation until the
/// tail estimate falls below tol. Throws QuadratureFailure when the
/// refinement bottoms out with the error estimate still above tolerance.
double integrate(const RealFunction1D& f, double a, double b, double tol = kQuadratureTol);

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = kQuadratureTol, bool singular_lo = false,
                 bool singular_hi = false);

/// Grid verdict on monotonicity of f along `grid` (>= 2 points, ascending).
Verdict monotonicity_verdict(const std::function<double(double)>& f,
                             std::span<const double> grid, Direction direction,
                             double tol = kVerdictTol);

Verdict monotonicity_verdict(const RealFunction1D& f, std::span<const double> grid,
                             Direction direction, double tol = kVerdictTol);

/// Grid verdict on convexity of f via second differences.
Verdict convexity_verdict(const std::function<double(double)>& f,
                          std::span<const double> grid, double tol = kVerdictTol);

/// Grid verdict on concavity of f via second differences.
Verdict concavity_verdict(const std::function<double(double)>& f,
                          std::span<const double> grid, double tol = kVerdictTol);

/// n equally spaced points covering [a, b] inclusive.
std::vector<double> linspace(double a, double b, int n);

/// n geometrically spaced points covering [a, b], 0 < a < b.
std::vector<double> geomspace(double a, double b, int n);

/// Central finite difference with clamping to [lo, hi].
double central_difference(const std::function<double(double)>& f, double x, double h,
                          double lo, double hi);

} // namespace bivage
