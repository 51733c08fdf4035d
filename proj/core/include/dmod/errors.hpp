#pragma once

#include <stdexcept>
#include <string>

namespace dmod {

// Precondition violations of the pure operations.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An operation that needs a field was handed the Boolean semiring (or vice versa).
class UnsupportedDomainError : public DomainError {
 public:
  using DomainError::DomainError;
};

// No (unique) solution of s;g = f.
class FactorizationError : public std::runtime_error {
 public:
  FactorizationError(const std::string& what, std::string witness)
      : std::runtime_error(what + " (witness " + witness + ")"), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

// Two independent computations of the same object disagree. Never expected to fire.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dmod
