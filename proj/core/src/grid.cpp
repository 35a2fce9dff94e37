#include "mfi/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

namespace mfi {

GridFunction GridFunction::sample(const Grid& g,
                                  const std::function<double(double)>& f) {
  std::vector<complex> v(g.count);
  for (int j = 0; j < g.count; ++j) v[j] = f(g.point(j));
  return GridFunction{g, std::move(v)};
}

GridFunction GridFunction::sample_complex(const Grid& g,
                                          const std::function<complex(double)>& f) {
  std::vector<complex> v(g.count);
  for (int j = 0; j < g.count; ++j) v[j] = f(g.point(j));
  return GridFunction{g, std::move(v)};
}

bool GridFunction::effectively_real(double tol) const {
  double scale = 0.0, imag = 0.0;
  for (const complex& v : values) {
    scale = std::max(scale, std::abs(v));
    imag = std::max(imag, std::abs(v.imag()));
  }
  return imag <= tol * std::max(scale, 1.0);
}

int default_grid_count() {
  static const int count = [] {
    if (const char* env = std::getenv("MFI_GRID_COUNT")) {
      const int parsed = std::atoi(env);
      if (parsed >= 16) return parsed;
    }
    return 4096;
  }();
  return count;
}

Grid default_grid_for(const OscillatorParams& params, int n_max, int count) {
  params.validate();
  if (n_max < 0) throw domain_error("default_grid_for: n_max must be >= 0");
  if (count <= 0) count = default_grid_count();
  const double half_width =
      1.5 * std::sqrt(2.0 * (2.0 * n_max + 1.0) / params.mu) + 6.0 / std::sqrt(params.mu);
  Grid g = Grid::centered(params.m, half_width, count);
  g.validate();
  return g;
}

std::vector<double> quadrature_weights(const Grid& grid) {
  const int n = grid.count;
  if (n < 3) throw invalid_grid_error("quadrature: need at least 3 points");
  const double h = grid.step();
  std::vector<double> w(n, 0.0);

  // Composite Simpson over an even number of intervals; when the interval
  // count is odd, a 3/8 block covers the last three intervals.
  int simpson_end = n - 1;          // index where the Simpson section stops
  const bool needs_38 = ((n - 1) % 2) != 0;
  if (needs_38) {
    if (n < 4) throw invalid_grid_error("quadrature: odd interval count needs >= 4 points");
    simpson_end = n - 4;
  }
  if (simpson_end > 0) {
    w[0] += h / 3.0;
    w[simpson_end] += h / 3.0;
    for (int j = 1; j < simpson_end; ++j)
      w[j] += (j % 2 == 1) ? 4.0 * h / 3.0 : 2.0 * h / 3.0;
  }
  if (needs_38) {
    const double c = 3.0 * h / 8.0;
    w[n - 4] += c;
    w[n - 3] += 3.0 * c;
    w[n - 2] += 3.0 * c;
    w[n - 1] += c;
  }
  return w;
}

complex integrate(const GridFunction& f) {
  const std::vector<double> w = quadrature_weights(f.grid);
  complex acc = 0.0;
  for (int j = 0; j < f.grid.count; ++j) acc += w[j] * f.values[j];
  return acc;
}

double integrate_real(const GridFunction& f) { return integrate(f).real(); }

GridFunction differentiate(const GridFunction& f) {
  const int n = f.grid.count;
  if (n < 5) throw invalid_grid_error("differentiate: need at least 5 points");
  const double inv = 1.0 / (12.0 * f.grid.step());
  const std::vector<complex>& v = f.values;
  std::vector<complex> d(n);

  d[0] = (-25.0 * v[0] + 48.0 * v[1] - 36.0 * v[2] + 16.0 * v[3] - 3.0 * v[4]) * inv;
  d[1] = (-3.0 * v[0] - 10.0 * v[1] + 18.0 * v[2] - 6.0 * v[3] + v[4]) * inv;
  for (int j = 2; j < n - 2; ++j)
    d[j] = (v[j - 2] - 8.0 * v[j - 1] + 8.0 * v[j + 1] - v[j + 2]) * inv;
  d[n - 2] = (3.0 * v[n - 1] + 10.0 * v[n - 2] - 18.0 * v[n - 3] + 6.0 * v[n - 4] -
              v[n - 5]) * inv;
  d[n - 1] = (25.0 * v[n - 1] - 48.0 * v[n - 2] + 36.0 * v[n - 3] - 16.0 * v[n - 4] +
              3.0 * v[n - 5]) * inv;
  return GridFunction{f.grid, std::move(d)};
}

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 Cooley-Tukey; sign = -1 forward, +1 inverse (unscaled).
void fft_pow2(std::vector<complex>& a, int sign) {
  const int n = static_cast<int>(a.size());
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / len;
    const complex wl(std::cos(ang), std::sin(ang));
    for (int i = 0; i < n; i += len) {
      complex w = 1.0;
      for (int k = 0; k < len / 2; ++k) {
        const complex u = a[i + k];
        const complex t = a[i + k + len / 2] * w;
        a[i + k] = u + t;
        a[i + k + len / 2] = u - t;
        w *= wl;
      }
    }
  }
}

// O(n^2) fallback for non-power-of-two sizes; grids of that kind only
// appear in small hand-built tests.
std::vector<complex> dft_direct(const std::vector<complex>& a, int sign) {
  const int n = static_cast<int>(a.size());
  std::vector<complex> out(n, 0.0);
  for (int k = 0; k < n; ++k) {
    complex acc = 0.0;
    for (int j = 0; j < n; ++j) {
      const double ang = sign * 2.0 * std::numbers::pi *
                         static_cast<double>((static_cast<long long>(j) * k) % n) / n;
      acc += a[j] * complex(std::cos(ang), std::sin(ang));
    }
    out[k] = acc;
  }
  return out;
}

void dft(std::vector<complex>& a, int sign) {
  if (is_power_of_two(static_cast<int>(a.size()))) {
    fft_pow2(a, sign);
  } else {
    a = dft_direct(a, sign);
  }
}

}  // namespace

GridFunction spectral_derivative(const GridFunction& f) {
  const int n = f.grid.count;
  if (n < 4) throw invalid_grid_error("spectral derivative: need at least 4 points");
  std::vector<complex> a = f.values;
  dft(a, -1);
  const double dk = 2.0 * std::numbers::pi / (n * f.grid.step());
  for (int k = 0; k < n; ++k) {
    int k_signed = (k <= n / 2) ? k : k - n;
    if (n % 2 == 0 && k == n / 2) k_signed = 0;  // Nyquist mode has no odd derivative
    a[k] *= complex(0.0, k_signed * dk);
  }
  dft(a, +1);
  const double scale = 1.0 / n;
  for (complex& v : a) v *= scale;
  return GridFunction{f.grid, std::move(a)};
}

GridFunction fourier_transform(const GridFunction& f) {
  const int n = f.grid.count;
  if (n < 16) throw invalid_grid_error("fourier transform: need at least 16 points");
  const double span = f.grid.x_max - f.grid.x_min;
  if (std::abs(f.grid.x_min + f.grid.x_max) > 1e-9 * span)
    throw invalid_grid_error("fourier transform: grid must be symmetric about zero");

  const double h = f.grid.step();
  const double half = 0.5 * (n - 1);  // grid offset of x = 0
  const double dy = 2.0 * std::numbers::pi / (n * h);

  // x_j = (j - half) h, y_k = (k - half) dy:
  //   sum_j h f_j e^{-i x_j y_k}
  //     = h e^{2 pi i half k / n} e^{-2 pi i half^2 / n}
  //       sum_j [f_j e^{2 pi i half j / n}] e^{-2 pi i j k / n}
  std::vector<complex> a(n);
  const double twopi_n = 2.0 * std::numbers::pi / n;
  for (int j = 0; j < n; ++j) {
    const double phase = twopi_n * half * j;
    a[j] = f.values[j] * complex(std::cos(phase), std::sin(phase));
  }
  dft(a, -1);
  const double norm = h / std::sqrt(2.0 * std::numbers::pi);
  const double base = -twopi_n * half * half;
  for (int k = 0; k < n; ++k) {
    const double phase = twopi_n * half * k + base;
    a[k] *= norm * complex(std::cos(phase), std::sin(phase));
  }
  const Grid conjugate = Grid::centered(0.0, half * dy, n);
  return GridFunction{conjugate, std::move(a)};
}

GridFunction density_of(const GridFunction& psi) {
  std::vector<complex> v(psi.values.size());
  for (size_t j = 0; j < v.size(); ++j) v[j] = std::norm(psi.values[j]);
  return GridFunction{psi.grid, std::move(v)};
}

double l2_norm(const GridFunction& f) {
  const std::vector<double> w = quadrature_weights(f.grid);
  double acc = 0.0;
  for (int j = 0; j < f.grid.count; ++j) acc += w[j] * std::norm(f.values[j]);
  return std::sqrt(std::max(acc, 0.0));
}

double l2_error(const GridFunction& f, const GridFunction& g) {
  if (!(f.grid == g.grid))
    throw invalid_grid_error("l2 error: grids must match");
  const std::vector<double> w = quadrature_weights(f.grid);
  double acc = 0.0;
  for (int j = 0; j < f.grid.count; ++j)
    acc += w[j] * std::norm(f.values[j] - g.values[j]);
  return std::sqrt(std::max(acc, 0.0));
}

}  // namespace mfi
