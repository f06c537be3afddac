#pragma once

#include <stdexcept>
#include <string>

namespace sommerfeld {

/// Raised when a charge, quantum number or frequency lies outside the
/// region where the closed-form orbit formulas are real and meaningful.
class DomainError : public std::domain_error {
 public:
  enum class Reason {
    ChargeOutOfRange,      // z outside [1, 137]
    InvalidQuantumNumber,  // n_r < 0 or n_theta < 1
    OrbitCollapse,         // alpha*z >= n_theta, omega not real
    FrequencyOutOfRange,   // omega outside (0, 1]
  };

  DomainError(Reason reason, const std::string& what)
      : std::domain_error(what), reason_(reason) {}

  [[nodiscard]] Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// Invalid sampling or rendering arguments.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Polyline too coarse for reliable transversal-crossing detection.
class ResolutionError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// Circular orbit: self-overlap is not transversal, loop count undefined.
class DegenerateError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

/// Element registry lookup outside Z = 92..137.
class NotFoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sommerfeld
