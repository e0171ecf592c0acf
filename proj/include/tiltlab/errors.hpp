#pragma once

#include <stdexcept>
#include <string>

namespace tiltlab {

/// Base class for every precondition or domain violation raised by the
/// library. The CLI maps these to exit status 2.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Wall requested for proportional characters.
class DegenerateWallError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Input outside the supported class (e.g. rank-zero characters in wall formulas).
class UnsupportedError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Operation requires a wall of a different type than the one supplied.
class TypeMismatchError : public DomainError {
public:
  using DomainError::DomainError;
};

/// A stated hypothesis on the slope bound (mu < mu(E), mu-bar > mu(E)) fails.
class HypothesisError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Request refused because it exceeds the configured enumeration guard.
class RefusalError : public DomainError {
public:
  using DomainError::DomainError;
};

}  // namespace tiltlab
