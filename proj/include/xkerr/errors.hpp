#pragma once

#include <stdexcept>
#include <string>

namespace xkerr {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A physical parameter violates its domain (non-positive rate, eta outside [0,1], ...).
struct InvalidParameterError : Error {
    using Error::Error;
};

/// Closed-form transformation denominators vanish for this parameter set.
struct SingularTransformError : Error {
    using Error::Error;
};

/// The linear system for the decoupling maps is singular (degenerate decay offsets).
struct DegenerateDecayError : Error {
    using Error::Error;
};

/// Parameters are at or beyond the parametric-oscillation threshold.
struct AboveThresholdError : Error {
    using Error::Error;
};

/// No admissible root of the pump equation exists below threshold.
struct NoSolutionError : Error {
    using Error::Error;
};

/// The nonlinearity measure is undefined (zero mean probe amplitude).
struct UndefinedMeasureError : Error {
    using Error::Error;
};

/// Fixed-point iteration failed to converge.
struct DivergenceError : Error {
    using Error::Error;
};

/// Resolvent matrix is singular at the requested frequency.
struct ResolventSingularError : Error {
    using Error::Error;
};

/// Operation requires a stable variation system.
struct InstabilityError : Error {
    using Error::Error;
};

/// Frequency or time grid does not satisfy the operation's requirements.
struct GridError : Error {
    using Error::Error;
};

/// Explicit time step violates the stability margin.
struct StepSizeError : Error {
    using Error::Error;
};

/// Not enough samples or traces for a statistical estimate.
struct StatisticsError : Error {
    using Error::Error;
};

/// Reflection phase cannot be determined (vanishing denominator).
struct PhaseUndefinedError : Error {
    using Error::Error;
};

/// Run configuration failed to parse or validate.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace xkerr
