#pragma once

#include <stdexcept>
#include <string>

namespace bivage {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A sample inside a bracket contradicts the claimed monotone direction.
struct MonotonicityViolation : Error {
    using Error::Error;
};

/// Adaptive quadrature failed to reach the requested tolerance.
struct QuadratureFailure : Error {
    using Error::Error;
};

/// A generator does not satisfy phi(1)=0 / strict decrease.
struct InvalidGenerator : Error {
    using Error::Error;
};

/// Generator derivative vanishes where a closed form needs it.
struct DegenerateGenerator : Error {
    using Error::Error;
};

/// A copula section v -> S(u,v) is not strictly increasing, so it
/// cannot be inverted for the integral-form Kendall computation.
struct SectionInversionFailure : Error {
    using Error::Error;
};

/// Kendall curve touches the diagonal K(s)=s: no pseudo-generator exists.
struct NotPseudoArchimedean : Error {
    using Error::Error;
};

/// Two Kendall curves cannot be compared on a common grid.
struct GridMismatch : Error {
    using Error::Error;
};

/// Evaluation left the representable range (all survival mass underflowed).
struct EvaluationOverflow : Error {
    using Error::Error;
};

/// A density is required but the model does not carry one.
struct MissingDensity : Error {
    using Error::Error;
};

/// Construction would need a copula but the input only yields a semi-copula.
struct NotACopula : Error {
    using Error::Error;
};

/// Independent computation routes disagree beyond the allowed tolerance.
struct RouteMismatch : Error {
    using Error::Error;
};

/// Malformed family key, parameter, or configuration input.
struct ParseError : Error {
    using Error::Error;
};

} // namespace bivage
