#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trcq {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// delta_char evaluated at (or numerically at) its pole zeta = -1.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Incompatible sizes or table lengths.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Weight table and signal were built for different step sizes.
class GridMismatchError : public ShapeError {
public:
    using ShapeError::ShapeError;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// Iterative procedure (root finding, quadrature) missed its tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double achieved)
        : Error(what), achieved_(achieved) {}

    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

/// Derivative requested beyond what a test function provides.
class OrderOverflowError : public Error {
public:
    using Error::Error;
};

/// Malformed symbol spec, g spec or config line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// No closed-form reference solution is known for a (symbol, g) pair.
class MissingExactSolutionError : public Error {
public:
    using Error::Error;
};

/// Data too small or too degenerate for the requested fit.
class DegenerateDataError : public Error {
public:
    using Error::Error;
};

}  // namespace trcq
