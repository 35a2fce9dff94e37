// Independent oracles for the test suites.  Everything here is computed
// through routes the library does not use: direct normalized-form
// evaluation with exact factorials, finite differences of sampled values,
// and dense parameter scans.
#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "mfi/oscillator_params.hpp"

namespace oracle {

// Hermite polynomial by the textbook recurrence, kept separate from the
// library so the two implementations can disagree.
inline double hermite_recurrence(int n, double x) {
  double prev = 1.0, cur = 2.0 * x;
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

inline double factorial(int n) {
  double acc = 1.0;
  for (int k = 2; k <= n; ++k) acc *= k;
  return acc;
}

// Direct evaluation of the normalized eigenfunction,
//   psi_n(x) = (mu/pi)^{1/4} / sqrt(2^n n!) e^{-mu (x-m)^2/2} H_n(sqrt(mu)(x-m)),
// valid while 2^n n! is representable.
inline double eigenstate_direct(int n, double x, const mfi::OscillatorParams& p) {
  const double u = std::sqrt(p.mu) * (x - p.m);
  const double norm =
      std::pow(p.mu / std::numbers::pi, 0.25) / std::sqrt(std::pow(2.0, n) * factorial(n));
  return norm * std::exp(-0.5 * u * u) * hermite_recurrence(n, u);
}

// 4th-order central finite difference with step eps.
inline double central_derivative(const std::function<double(double)>& f, double x,
                                 double eps) {
  return (f(x - 2 * eps) - 8.0 * f(x - eps) + 8.0 * f(x + eps) - f(x + 2 * eps)) /
         (12.0 * eps);
}

// Dense scan minimizer for functions of one variable on [lo, hi].
struct ScanMinimum {
  double arg = 0.0;
  double value = 0.0;
};

inline ScanMinimum scan_minimum(const std::function<double(double)>& f, double lo,
                                double hi, int samples) {
  ScanMinimum best{lo, f(lo)};
  for (int i = 1; i < samples; ++i) {
    const double x = lo + (hi - lo) * i / (samples - 1);
    const double v = f(x);
    if (v < best.value) best = {x, v};
  }
  return best;
}

}  // namespace oracle
