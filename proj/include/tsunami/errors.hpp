#pragma once

#include <stdexcept>
#include <string>

namespace tsunami {

/// Argument outside the domain of a state law or a violated precondition.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Base class for failures of a numerical procedure on valid input.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The profile coefficient q^2 c(q)^2 - q0^2 A^2 vanished.
class SonicSingularity : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// A strain density became non-positive.
class PositivityLoss : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Invalid or unknown configuration entry.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tsunami
