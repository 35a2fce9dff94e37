#pragma once

#include <cmath>

#include "mfi/errors.hpp"

namespace mfi {

/// Scale and center of the oscillator family: mu is the inverse-variance
/// scale, m the center (mean log-price).
struct OscillatorParams {
  double mu = 1.0;
  double m = 0.0;

  void validate() const {
    if (!(mu > 0.0) || !std::isfinite(mu))
      throw domain_error("oscillator params: mu must be positive and finite");
    if (!std::isfinite(m))
      throw domain_error("oscillator params: m must be finite");
  }
};

}  // namespace mfi
