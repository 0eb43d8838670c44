#pragma once

#include <stdexcept>
#include <string>

namespace hsec {

/// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The forward scan of a radius function found no sign change in (0,1).
class NoBracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A claim id that is not in the registry.
class UnknownClaimError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Vanishing denominator inside a proof function.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hsec
