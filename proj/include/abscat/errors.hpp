// Error types shared across the library.
#pragma once

#include <stdexcept>

namespace abscat {

/// Reduced flux landed exactly on an integer flux quantum (alpha = 0 is
/// outside the model).
class integer_flux_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Cross-section evaluation requested in the forward direction
/// (theta = theta0 mod 2pi), where the amplitude has a pole.
class forward_singularity_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace abscat
