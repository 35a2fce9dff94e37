#pragma once

#include <vector>

#include "mfi/grid.hpp"
#include "mfi/oscillator_params.hpp"

namespace mfi {

/// Highest eigenstate index the recurrences are validated for.
inline constexpr int kMaxEigenIndex = 64;

/// Physicists' Hermite polynomial H_n(x) via the three-term recurrence
/// H_{n+1} = 2x H_n - 2n H_{n-1}.  Throws range_error on overflow.
double hermite(int n, double x);

/// Normalized oscillator eigenfunction psi_n(x).  Evaluated through the
/// normalized recurrence
///   psi_{n+1} = sqrt(2 mu/(n+1)) (x-m) psi_n - sqrt(n/(n+1)) psi_{n-1}
/// which stays bounded where the Hermite-times-Gaussian form overflows.
double eigenstate_value(int n, double x, const OscillatorParams& params);

/// psi_0(x) .. psi_{n_max}(x) in one recurrence sweep.
std::vector<double> eigenstate_values_upto(int n_max, double x,
                                           const OscillatorParams& params);

/// d psi_n/dx = -sqrt((n+1) mu/2) psi_{n+1} + sqrt(n mu/2) psi_{n-1}.
double eigenstate_derivative(int n, double x, const OscillatorParams& params);

/// Residual of the position recursion
///   mu (x-m) psi_n - sqrt((n+1) mu/2) psi_{n+1} - sqrt(n mu/2) psi_{n-1};
/// bounded by 1e-10 for |x-m| sqrt(mu) <= 10 and n <= 40.
double position_recursion_check(int n, double x, const OscillatorParams& params);

/// psi_n sampled on a grid.
GridFunction eigenstate_on_grid(int n, const OscillatorParams& params,
                                const Grid& grid);

/// d psi_n/dx sampled on a grid.
GridFunction eigenstate_derivative_on_grid(int n, const OscillatorParams& params,
                                           const Grid& grid);

}  // namespace mfi
