#pragma once

#include <stdexcept>
#include <string>

namespace pong {

// Bad caller input: invalid parameters, malformed generators, points outside
// a permutation's domain.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A theorem-level consistency check failed (e.g. a negative or half-integral
// monomial exponent). Always indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Degenerate geometry in the diagram oracle (a fixed point or orbifold
// center on a boundary). Cannot happen with the quarter offsets in use.
class GenericityError : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

// Two states with different idempotents have no connecting domain.
class NoConnectingDomain : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

}  // namespace pong
