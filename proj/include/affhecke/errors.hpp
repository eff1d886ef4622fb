#pragma once

#include <stdexcept>
#include <string>

namespace affhecke {

/// Bad user input: malformed JSON, invalid root datum, a weight that
/// violates a stated precondition. The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed. This always indicates a bug or a
/// convention mismatch, never bad input. The CLI maps this to exit code 2.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised by exact division routines when the divisor does not divide.
class InexactDivision : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

}  // namespace affhecke
