#pragma once

#include <stdexcept>
#include <string>

namespace w0sig {

/// Rejected user input: bad algebra token, wrong coefficient count, and so on.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its mathematical domain (e.g. a
/// non-dominant highest weight).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A vector that was required to lie in the weight lattice does not.
class LatticeError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Exact integer arithmetic left the representable range.
class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

/// An internal invariant failed. Always an upstream bug, never a user error.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A character handed to the branching stage is not the restriction of a
/// finite-dimensional module.
class MalformedCharacter : public InternalError {
public:
  using InternalError::InternalError;
};

}  // namespace w0sig
