#pragma once

#include <stdexcept>
#include <string>

namespace llddc {

/// Caller violated a precondition (bad argument, mismatched objects).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The request is well-formed but has no numerical answer
/// (unstable stage, unreachable target, evaluation at an exact zero).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Reconstruction filter is undefined because sin(Delta) vanishes.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace llddc
