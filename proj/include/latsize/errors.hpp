#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latsize {

// Root of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Coordinates or intermediate images outside the configured guard.
class GuardError : public Error {
  public:
    using Error::Error;
};

// An operation was called on input of the wrong dimension or kind
// (empty polygon, degenerate polygon where a two-dimensional one is needed, ...).
class PreconditionError : public Error {
  public:
    using Error::Error;
};

// move_out was asked to shift a polygon that is not the interior hull of
// any lattice polygon.
class NotAnInteriorPolygon : public PreconditionError {
  public:
    using PreconditionError::PreconditionError;
};

class NotTwoDimensional : public PreconditionError {
  public:
    using PreconditionError::PreconditionError;
};

class SyntaxError : public Error {
  public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

class ZeroPolynomial : public Error {
  public:
    ZeroPolynomial() : Error("polynomial is identically zero") {}
};

// A computed value could not be certified. Always a bug.
class InternalError : public Error {
  public:
    using Error::Error;
};

} // namespace latsize
