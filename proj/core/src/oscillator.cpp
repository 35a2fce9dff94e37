#include "mfi/oscillator.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace mfi {

namespace {

void check_index(int n) {
  if (n < 0) throw domain_error("eigen index must be >= 0");
}

double ground_state(double x, const OscillatorParams& p) {
  const double u = x - p.m;
  return std::pow(p.mu / std::numbers::pi, 0.25) * std::exp(-0.5 * p.mu * u * u);
}

}  // namespace

double hermite(int n, double x) {
  check_index(n);
  if (!std::isfinite(x)) throw domain_error("hermite: x must be finite");
  double prev = 1.0;  // H_0
  if (n == 0) return prev;
  double cur = 2.0 * x;  // H_1
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  if (!std::isfinite(cur))
    throw std::range_error("hermite: H_" + std::to_string(n) + " overflowed");
  return cur;
}

std::vector<double> eigenstate_values_upto(int n_max, double x,
                                           const OscillatorParams& params) {
  check_index(n_max);
  params.validate();
  std::vector<double> psi(n_max + 1);
  psi[0] = ground_state(x, params);
  if (n_max == 0) return psi;
  const double u = x - params.m;
  psi[1] = std::sqrt(2.0 * params.mu) * u * psi[0];
  for (int n = 1; n < n_max; ++n) {
    psi[n + 1] = std::sqrt(2.0 * params.mu / (n + 1)) * u * psi[n] -
                 std::sqrt(static_cast<double>(n) / (n + 1)) * psi[n - 1];
  }
  return psi;
}

double eigenstate_value(int n, double x, const OscillatorParams& params) {
  return eigenstate_values_upto(n, x, params).back();
}

double eigenstate_derivative(int n, double x, const OscillatorParams& params) {
  check_index(n);
  params.validate();
  const std::vector<double> psi = eigenstate_values_upto(n + 1, x, params);
  double d = -std::sqrt((n + 1) * params.mu / 2.0) * psi[n + 1];
  if (n > 0) d += std::sqrt(n * params.mu / 2.0) * psi[n - 1];
  return d;
}

double position_recursion_check(int n, double x, const OscillatorParams& params) {
  check_index(n);
  params.validate();
  const std::vector<double> psi = eigenstate_values_upto(n + 1, x, params);
  double residual = params.mu * (x - params.m) * psi[n] -
                    std::sqrt((n + 1) * params.mu / 2.0) * psi[n + 1];
  if (n > 0) residual -= std::sqrt(n * params.mu / 2.0) * psi[n - 1];
  return residual;
}

GridFunction eigenstate_on_grid(int n, const OscillatorParams& params,
                                const Grid& grid) {
  return GridFunction::sample(
      grid, [&](double x) { return eigenstate_value(n, x, params); });
}

GridFunction eigenstate_derivative_on_grid(int n, const OscillatorParams& params,
                                           const Grid& grid) {
  return GridFunction::sample(
      grid, [&](double x) { return eigenstate_derivative(n, x, params); });
}

}  // namespace mfi
