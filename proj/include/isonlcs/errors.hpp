#pragma once

#include <stdexcept>
#include <string>

namespace isonlcs {

// Argument outside the mathematical domain of an operation (e.g. level n = 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Index or order beyond a table or overflow cap.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Objects combined that do not belong together (different bases, wrong flags).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computed quantity broke a documented invariant.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The truncated basis is too small for the requested state or witness.
class TruncationError : public InvariantError {
 public:
  TruncationError(const std::string& what, int suggested_n_max)
      : InvariantError(what), suggested_n_max_(suggested_n_max) {}

  int suggested_n_max() const noexcept { return suggested_n_max_; }

 private:
  int suggested_n_max_;
};

// Operation only defined for a particular family of states.
class UnsupportedStateError : public UsageError {
 public:
  using UsageError::UsageError;
};

}  // namespace isonlcs
