#ifndef NCHYDRO_ERRORS_HPP
#define NCHYDRO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nchydro {

/// Base class for numerical failures (non-convergence, precision loss).
class NumericsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A series or adaptive scheme did not reach its tolerance
/// (truncation-not-converged, max-subdivision-exceeded, tail-not-decaying).
class ConvergenceError : public NumericsError {
public:
    using NumericsError::NumericsError;
};

/// Estimated cancellation error exceeds the documented relative bound.
class PrecisionLossError : public NumericsError {
public:
    using NumericsError::NumericsError;
};

/// A quantity was requested at eta = 1 where it diverges.
class DivergentAtUnityError : public NumericsError {
public:
    using NumericsError::NumericsError;
};

/// Invalid physical parameters (non-positive alpha or lengths).
class InvalidParametersError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace nchydro

#endif
