#pragma once

#include <stdexcept>
#include <string>

namespace umeb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unparseable numbers, wrong lengths, degenerate states.
class ParseError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in cyclotomic field") {}
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A value that the exact backend cannot represent (angle not a multiple of pi/12).
class NotRepresentable : public Error {
 public:
  using Error::Error;
};

/// Inputs that violate an operation's precondition (non-orthonormal completion pair etc.).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace umeb
