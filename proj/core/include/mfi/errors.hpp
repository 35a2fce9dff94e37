#pragma once

#include <stdexcept>
#include <string>

namespace mfi {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (negative scale, probability outside [0,1], ...).
class domain_error : public error {
 public:
  using error::error;
};

/// A grid does not satisfy the preconditions of a grid operation
/// (too few points, asymmetric where symmetry is required, ...).
class invalid_grid_error : public error {
 public:
  using error::error;
};

/// A density or amplitude that must be normalized is not.
class normalization_error : public error {
 public:
  using error::error;
};

/// A density carries values below the allowed negative tolerance.
class invalid_density_error : public error {
 public:
  using error::error;
};

/// An iterative solver failed to reach its tolerance.  Carries the final
/// residual so callers can report it.
class convergence_error : public error {
 public:
  convergence_error(const std::string& what, double residual)
      : error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_ = 0.0;
};

/// A grid is too narrow to resolve the requested spectrum.
class domain_coverage_error : public error {
 public:
  using error::error;
};

/// Inconsistent or missing configuration (mixed images, missing common
/// parameter, malformed strategy file, ...).
class config_error : public error {
 public:
  using error::error;
};

/// A numerical contract promised by the library was violated at runtime.
class contract_error : public error {
 public:
  using error::error;
};

}  // namespace mfi
