#pragma once

#include <stdexcept>
#include <string>

namespace flagkernel {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range user input (bad type/rank, bad flag values, shape mismatch).
class InputError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation (rho <= 0, x >= 1, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An exact identity that must hold did not. Always a bug, never user error.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// Quadrature or iteration failed to reach its accuracy target.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Least-squares design matrix is numerically rank deficient.
class FitError : public Error {
public:
    FitError(const std::string& what, double condition_number)
        : Error(what), condition_number_(condition_number) {}
    double condition_number() const noexcept { return condition_number_; }

private:
    double condition_number_;
};

} // namespace flagkernel
