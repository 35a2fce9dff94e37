#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mfi/grid.hpp"
#include "mfi/oscillator.hpp"

using namespace mfi;

TEST_SUITE_BEGIN("grid");

TEST_CASE("default grid covers the padded turning point") {
  const Grid g = default_grid_for(OscillatorParams{1.0, 0.0}, 0);
  CHECK(g.count == 4096);
  CHECK(g.x_min <= -8.1);
  CHECK(g.x_max >= 8.1);

  const Grid quarter = default_grid_for(OscillatorParams{4.0, 0.0}, 0);
  CHECK(quarter.half_width() == doctest::Approx(g.half_width() / 2.0).epsilon(1e-15));

  const Grid shifted = default_grid_for(OscillatorParams{1.0, 5.0}, 2);
  CHECK(shifted.center() == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("integrate constants exactly") {
  for (int count : {17, 16}) {  // odd and even interval parity
    const Grid g{0.0, 1.0, count};
    const GridFunction one = GridFunction::sample(g, [](double) { return 1.0; });
    CHECK(integrate_real(one) == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("integrate normalization and odd integrands") {
  const OscillatorParams p{1.0, 0.0};
  const Grid g = default_grid_for(p, 1);
  const GridFunction psi0 = eigenstate_on_grid(0, p, g);
  const GridFunction psi1 = eigenstate_on_grid(1, p, g);

  CHECK(std::abs(integrate_real(density_of(psi0)) - 1.0) < 1e-10);

  std::vector<complex> prod(g.count);
  for (int j = 0; j < g.count; ++j) prod[j] = psi0.values[j] * psi1.values[j];
  CHECK(std::abs(integrate_real(GridFunction{g, std::move(prod)})) < 1e-10);
}

TEST_CASE("integrate rejects degenerate grids") {
  const Grid g{0.0, 1.0, 2};
  const GridFunction f{g, {1.0, 1.0}};
  CHECK_THROWS_AS(integrate(f), invalid_grid_error);
}

TEST_CASE("differentiate is exact for linear functions") {
  const Grid g{-1.0, 1.0, 33};
  const GridFunction f = GridFunction::sample(g, [](double x) { return x; });
  const GridFunction d = differentiate(f);
  for (int j = 0; j < g.count; ++j)
    CHECK(std::abs(d.values[j].real() - 1.0) < 1e-12);
}

TEST_CASE("differentiate sine to 1e-10") {
  const Grid g{-std::numbers::pi, std::numbers::pi, 4096};
  const GridFunction f = GridFunction::sample(g, [](double x) { return std::sin(x); });
  const GridFunction d = differentiate(f);
  double worst = 0.0;
  for (int j = 0; j < g.count; ++j)
    worst = std::max(worst, std::abs(d.values[j].real() - std::cos(g.point(j))));
  CHECK(worst < 1e-10);
}

TEST_CASE("differentiate matches the eigenstate derivative recurrence") {
  const OscillatorParams p{1.0, 0.0};
  const Grid g = default_grid_for(p, 3);
  const GridFunction d = differentiate(eigenstate_on_grid(3, p, g));
  double worst = 0.0;
  for (int j = 2; j < g.count - 2; ++j)
    worst = std::max(worst,
                     std::abs(d.values[j].real() - eigenstate_derivative(3, g.point(j), p)));
  CHECK(worst < 1e-8);
}

TEST_CASE("differentiate rejects tiny grids") {
  const Grid g{0.0, 1.0, 4};
  const GridFunction f{g, {1.0, 1.0, 1.0, 1.0}};
  CHECK_THROWS_AS(differentiate(f), invalid_grid_error);
}

TEST_CASE("fourier transform fixes the gaussian ground state") {
  const OscillatorParams p{1.0, 0.0};
  const Grid g = default_grid_for(p, 0);
  const GridFunction ft = fourier_transform(eigenstate_on_grid(0, p, g));
  const GridFunction reference =
      GridFunction::sample(ft.grid, [&](double y) { return eigenstate_value(0, y, p); });
  CHECK(l2_error(ft, reference) < 1e-6);
}

TEST_CASE("fourier transform eigenphases (-i)^n") {
  const OscillatorParams p{1.0, 0.0};
  const Grid g = default_grid_for(p, 10);
  for (int n = 0; n <= 10; ++n) {
    const GridFunction ft = fourier_transform(eigenstate_on_grid(n, p, g));
    const complex phase = std::pow(complex(0.0, -1.0), n);
    const GridFunction reference = GridFunction::sample_complex(
        ft.grid, [&](double y) { return phase * eigenstate_value(n, y, p); });
    CHECK(l2_error(ft, reference) < 1e-6);
  }
}

TEST_CASE("fourier transform swaps the gaussian scale mu <-> 1/mu") {
  const OscillatorParams sharp{4.0, 0.0};
  const Grid g = default_grid_for(sharp, 0);
  const GridFunction ft = fourier_transform(eigenstate_on_grid(0, sharp, g));
  const OscillatorParams wide{0.25, 0.0};
  const GridFunction reference = GridFunction::sample(
      ft.grid, [&](double y) { return eigenstate_value(0, y, wide); });
  CHECK(l2_error(ft, reference) < 1e-6);
}

TEST_CASE("fourier transform rejects asymmetric grids") {
  const Grid g{-1.0, 2.0, 64};
  const GridFunction f = GridFunction::sample(g, [](double) { return 1.0; });
  CHECK_THROWS_AS(fourier_transform(f), invalid_grid_error);
}

TEST_CASE("plancherel identity") {
  const OscillatorParams p{1.0, 0.0};
  const Grid g = default_grid_for(p, 8);
  for (int n : {0, 1, 4, 8}) {
    const GridFunction psi = eigenstate_on_grid(n, p, g);
    const GridFunction ft = fourier_transform(psi);
    const double direct = integrate_real(density_of(psi));
    const double dual = integrate_real(density_of(ft));
    CHECK(std::abs(direct - dual) < 1e-10 * direct);
  }
}

TEST_CASE("double transform is the parity flip") {
  const OscillatorParams p{1.0, 0.0};
  const Grid g = default_grid_for(p, 5);
  // Parity-asymmetric combination so the check is non-trivial.
  GridFunction f = eigenstate_on_grid(2, p, g);
  const GridFunction odd = eigenstate_on_grid(3, p, g);
  for (int j = 0; j < g.count; ++j) f.values[j] = 0.8 * f.values[j] + 0.6 * odd.values[j];

  const GridFunction ft2 = fourier_transform(fourier_transform(f));
  double err = 0.0;
  std::vector<double> w = quadrature_weights(ft2.grid);
  for (int j = 0; j < g.count; ++j) {
    const complex flipped = f.values[g.count - 1 - j];
    err += w[j] * std::norm(ft2.values[j] - flipped);
  }
  CHECK(std::sqrt(err) < 1e-8);
}

TEST_CASE("risk balance: derivative quadrature equals conjugate-moment quadrature") {
  const OscillatorParams p{1.0, 0.0};
  const Grid g = default_grid_for(p, 6);
  for (int n : {0, 1, 3, 6}) {
    const GridFunction ft = fourier_transform(eigenstate_on_grid(n, p, g));
    std::vector<complex> weighted(ft.grid.count);
    for (int k = 0; k < ft.grid.count; ++k) {
      const double y = ft.grid.point(k);
      weighted[k] = y * y * std::norm(ft.values[k]);
    }
    const double conjugate_moment =
        integrate_real(GridFunction{ft.grid, std::move(weighted)});

    const GridFunction dpsi = eigenstate_derivative_on_grid(n, p, g);
    const double derivative_energy = integrate_real(density_of(dpsi));
    CHECK(std::abs(conjugate_moment - derivative_energy) < 1e-6);
  }
}

TEST_CASE("spectral derivative reaches the decay floor") {
  const OscillatorParams p{1.0, 0.0};
  const Grid g = default_grid_for(p, 12);
  const GridFunction d = spectral_derivative(eigenstate_on_grid(12, p, g));
  double worst = 0.0;
  for (int j = 0; j < g.count; ++j)
    worst = std::max(worst,
                     std::abs(d.values[j].real() - eigenstate_derivative(12, g.point(j), p)));
  CHECK(worst < 1e-11);
}

TEST_SUITE_END();
