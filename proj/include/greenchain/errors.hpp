#pragma once

#include <stdexcept>
#include <string>

namespace greenchain {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a function (poles, non-positive radii, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Result not representable in double precision.
class RangeError : public Error {
public:
    using Error::Error;
};

/// An iteration failed to converge or a numerical method broke down.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Pivot below the absolute singularity floor during LU factorization.
class SingularMatrixError : public NumericError {
public:
    using NumericError::NumericError;
};

/// The spectral parameter sits on (or next to) a pole of the Green's function,
/// i.e. the system matrix is numerically singular relative to its norm.
class NearPoleError : public NumericError {
public:
    NearPoleError(const std::string& what, double pivot_ratio)
        : NumericError(what), pivot_ratio_(pivot_ratio) {}

    double pivot_ratio() const noexcept { return pivot_ratio_; }

private:
    double pivot_ratio_;
};

/// Violation of a documented calling contract (e.g. asking for the finite
/// coupling correction of an impenetrable chain).
class ContractError : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent user configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace greenchain
