#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "mfi/errors.hpp"
#include "mfi/oscillator_params.hpp"

namespace mfi {

using complex = std::complex<double>;

/// Uniform sampling grid on [x_min, x_max] with `count` points including
/// both endpoints.
struct Grid {
  double x_min = -1.0;
  double x_max = 1.0;
  int count = 0;

  double step() const { return (x_max - x_min) / (count - 1); }
  double point(int j) const { return x_min + j * step(); }
  double center() const { return 0.5 * (x_min + x_max); }
  double half_width() const { return 0.5 * (x_max - x_min); }

  static Grid centered(double center, double half_width, int count) {
    return Grid{center - half_width, center + half_width, count};
  }

  /// Enforces the invariants of grids the library builds for itself.
  void validate() const {
    if (!(x_min < x_max)) throw invalid_grid_error("grid: x_min must be < x_max");
    if (count < 16) throw invalid_grid_error("grid: count must be >= 16");
  }

  bool operator==(const Grid& other) const = default;
};

/// Sampled complex-valued function on a uniform grid.
struct GridFunction {
  Grid grid;
  std::vector<complex> values;

  GridFunction() = default;
  GridFunction(Grid g, std::vector<complex> v) : grid(g), values(std::move(v)) {
    if (static_cast<int>(values.size()) != grid.count)
      throw invalid_grid_error("grid function: values length must equal grid count");
  }

  static GridFunction sample(const Grid& g, const std::function<double(double)>& f);
  static GridFunction sample_complex(const Grid& g,
                                     const std::function<complex(double)>& f);

  /// true when every imaginary part is negligible against the field scale.
  bool effectively_real(double tol = 1e-10) const;
};

/// Number of samples used when no override is given; reads the
/// MFI_GRID_COUNT environment variable once per process.
int default_grid_count();

/// Grid wide enough for every eigenstate up to n_max: centered at m with
/// half-width 1.5*sqrt(2*(2*n_max+1)/mu) + 6/sqrt(mu).
Grid default_grid_for(const OscillatorParams& params, int n_max, int count = 0);

/// Composite Simpson weights (3/8 block on the last interval triple when
/// the interval count is odd).  Exact for cubics, O(step^4) for smooth f.
std::vector<double> quadrature_weights(const Grid& grid);

/// Quadrature of f over its grid.  Throws invalid_grid_error for count < 3.
complex integrate(const GridFunction& f);

/// Quadrature of the real part; asserts nothing about the imaginary part.
double integrate_real(const GridFunction& f);

/// 4th-order centered differences in the interior, one-sided 4th-order
/// stencils on the two-point boundary bands.  Throws for count < 5.
GridFunction differentiate(const GridFunction& f);

/// Fourier-based derivative.  Exact to the decay floor for smooth
/// functions that vanish at the grid ends; used by the Fisher quadratures
/// where 4th-order stencils are not accurate enough.
GridFunction spectral_derivative(const GridFunction& f);

/// Unitary continuous-transform approximation
///   (FT f)(y) = (2*pi)^{-1/2} * integral exp(-i x y) f(x) dx
/// evaluated on the conjugate grid y_k = (k - (count-1)/2) * 2*pi/(count*step).
/// Requires the grid to be symmetric about zero.
GridFunction fourier_transform(const GridFunction& f);

/// |f|^2 as a real-valued grid function.
GridFunction density_of(const GridFunction& psi);

/// sqrt(integral |f|^2).
double l2_norm(const GridFunction& f);

/// sqrt(integral |f - g|^2); the grids must match.
double l2_error(const GridFunction& f, const GridFunction& g);

}  // namespace mfi
