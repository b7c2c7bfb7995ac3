#pragma once

#include <stdexcept>
#include <string>

namespace tuning {

/// Argument outside the mathematical domain of an operation
/// (non-positive pitch, ratio outside the octave, n = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A prime exponent left the configured safety bound.
class BoundExceededError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Operation only defined for a particular octave division (e.g. n = 12).
class UnsupportedDivisionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Two lengths or pitches given in the wrong order.
class OrderingError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A pairing of generated sounds against equal-tempered degrees is incomplete.
class CoverageError : public std::runtime_error {
 public:
  CoverageError(int degree, const std::string& what)
      : std::runtime_error(what), degree_(degree) {}

  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

/// An exhaustive search that must have exactly one solution found zero or several.
class PropositionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tuning
