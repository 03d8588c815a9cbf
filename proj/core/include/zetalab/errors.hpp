#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

/// Argument outside the mathematical domain of an operation (e.g. zeta(1)).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A point handed to a function defined only on the open hypercube touches
/// its boundary.
class BoundaryError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Requested configuration is valid mathematically but outside what the
/// implementation supports (dimension too large, precision too high).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exactness invariant was violated, e.g. a denominator that should
/// divide lcm(1..k)^3 does not.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An iterative scheme stopped before meeting its tolerance. Carries the
/// last two estimates as decimal strings.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::string last, std::string previous)
      : std::runtime_error(what + " (last=" + last + ", previous=" + previous + ")"),
        last_(std::move(last)),
        previous_(std::move(previous)) {}

  const std::string& last_estimate() const noexcept { return last_; }
  const std::string& previous_estimate() const noexcept { return previous_; }

 private:
  std::string last_;
  std::string previous_;
};

}  // namespace zetalab
