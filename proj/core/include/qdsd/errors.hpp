#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qdsd {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix handed to a Hermitian-only routine failed the symmetry check.
class NotHermitianError : public Error {
public:
    using Error::Error;
};

/// Matrix handed to a unitary-only routine failed the unitarity check.
class NotUnitaryError : public Error {
public:
    using Error::Error;
};

/// Iterative solver exhausted its sweep budget without reaching the
/// off-diagonal convergence threshold.
class NoConvergenceError : public Error {
public:
    using Error::Error;
};

/// Scalar parameter outside its documented domain.
class ParameterRangeError : public Error {
public:
    ParameterRangeError(std::string parameter, const std::string& message)
        : Error(message), parameter_(std::move(parameter)) {}

    const std::string& parameter() const noexcept { return parameter_; }

private:
    std::string parameter_;
};

/// Fixed-step integration drifted past its accuracy guards;
/// the step bound was too large for the requested evolution.
class AccuracyLossError : public Error {
public:
    using Error::Error;
};

/// A density-matrix invariant failed. invariant() names which one
/// ("shape", "finite", "hermiticity", "trace", "positivity").
class ValidationError : public Error {
public:
    ValidationError(std::string invariant, const std::string& message)
        : Error(message), invariant_(std::move(invariant)) {}

    const std::string& invariant() const noexcept { return invariant_; }

private:
    std::string invariant_;
};

/// Text-format parse failure; carries the 1-based line and column.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// File could not be opened or written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace qdsd
