#pragma once

#include <stdexcept>
#include <string>

namespace hrsurf {

// Tolerance failures, non-converging iterations, loss of precision.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ODE integration hit a pole of the slope-recovery expression.
class SingularDomainError : public std::domain_error {
 public:
  SingularDomainError(const std::string& msg, double last_valid)
      : std::domain_error(msg), last_valid_param(last_valid) {}
  double last_valid_param;
};

// ODE integration left the region where the slope stays real.
class DomainExhaustedError : public std::domain_error {
 public:
  DomainExhaustedError(const std::string& msg, double last_valid)
      : std::domain_error(msg), last_valid_param(last_valid) {}
  double last_valid_param;
};

}  // namespace hrsurf
