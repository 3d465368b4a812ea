#pragma once

#include <stdexcept>
#include <string>

namespace permsym {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad cycle text, arity mismatch,
/// non-normalized amplitudes, unsupported operator form, ...).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// An operation that requires a G-invariant state was given one that is not.
class NotInvariantError : public Error {
 public:
  using Error::Error;
};

/// Requested enumeration exceeds the configured size cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace permsym
