#pragma once

#include <stdexcept>
#include <string>

namespace phardy {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operation not supported for the requested configuration (e.g. pointwise
/// harmonics in d >= 4).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Closed-form kernel evaluated on (or numerically at) its singular set.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested size exceeds the supported limits.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace phardy
