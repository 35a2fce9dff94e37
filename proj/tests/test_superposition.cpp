#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mfi/fisher.hpp"
#include "mfi/superposition.hpp"
#include "oracle_utils.hpp"

using namespace mfi;

namespace {
const OscillatorParams unit_params{1.0, 0.0};
}

TEST_SUITE_BEGIN("superposition");

TEST_CASE("superpose coefficient layout") {
  const StateVector pure = superpose({1.0, 0.3, 0, 2, unit_params});
  CHECK(pure.coefficients[0] == complex(1.0, 0.0));
  CHECK(std::abs(pure.coefficients[2]) == 0.0);

  const StateVector even = superpose({0.5, 0.0, 0, 2, unit_params});
  CHECK(even.coefficients[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(even.coefficients[1] == complex(0.0, 0.0));
  CHECK(even.coefficients[2].real() == doctest::Approx(1.0 / std::sqrt(2.0)));

  const StateVector flipped = superpose({0.5, std::numbers::pi, 0, 2, unit_params});
  CHECK(flipped.coefficients[2].real() == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK(std::abs(flipped.coefficients[2].imag()) < 1e-15);

  CHECK(even.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(superpose({1.5, 0.0, 0, 2, unit_params}), domain_error);
}

TEST_CASE("closed-form fisher of the (0,2) pair") {
  CHECK(fisher_closed({1.0, 0.0, 0, 2, unit_params}) == doctest::Approx(2.0));
  const double p_min = 0.5 + 1.0 / std::sqrt(6.0);
  CHECK(fisher_closed({p_min, 0.0, 0, 2, unit_params}) ==
        doctest::Approx(6.0 - 2.0 * std::sqrt(6.0)).epsilon(1e-14));
  CHECK(fisher_closed({0.4, std::numbers::pi / 2.0, 0, 2, unit_params}) ==
        doctest::Approx(6.8).epsilon(1e-14));
}

TEST_CASE("closed-form variance of the (0,2) pair") {
  CHECK(variance_closed({1.0, 1.1, 0, 2, unit_params}) == doctest::Approx(0.5));
  const double p_min = 0.5 + 1.0 / std::sqrt(6.0);
  CHECK(variance_closed({p_min, 0.0, 0, 2, unit_params}) ==
        doctest::Approx(1.5 - 1.0 / std::sqrt(6.0)).epsilon(1e-14));
  CHECK(variance_closed({0.5, std::numbers::pi / 2.0, 0, 2, unit_params}) ==
        doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("closed forms match grid synthesis") {
  for (double p : {0.0, 0.25, 0.5, 0.9, 1.0}) {
    for (double alpha : {0.0, 0.7, std::numbers::pi / 2.0, 2.4, std::numbers::pi}) {
      for (auto [k_low, k_high] : {std::pair{0, 2}, std::pair{1, 3}}) {
        const SuperpositionSpec spec{p, alpha, k_low, k_high, unit_params};
        const Grid g = default_grid_for(unit_params, k_high);
        const GridFunction psi = synthesize(superpose(spec), g);
        const double fisher_grid = fisher_of_amplitude(psi);
        const double variance_grid = moments(density_of(psi)).variance;
        CHECK(std::abs(fisher_grid - fisher_closed(spec)) <
              1e-8 * std::abs(fisher_closed(spec)));
        CHECK(std::abs(variance_grid - variance_closed(spec)) <
              1e-8 * std::abs(variance_closed(spec)));
      }
    }
  }
}

TEST_CASE("interference balance: fisher + 4 mu^2 variance is alpha-free") {
  for (double mu : {0.5, 1.0, 2.0}) {
    const OscillatorParams params{mu, 0.0};
    for (double p : {0.1, 0.5, 0.9}) {
      const double expected =
          8.0 * mu * (p * 0.5 + (1.0 - p) * 2.5);
      for (double alpha = 0.0; alpha < 6.4; alpha += 0.17) {
        const SuperpositionSpec spec{p, alpha, 0, 2, params};
        const double balance =
            fisher_closed(spec) + 4.0 * mu * mu * variance_closed(spec);
        CHECK(std::abs(balance - expected) < 1e-12 * expected);
      }
    }
  }
}

TEST_CASE("phase symmetry alpha -> 2 pi - alpha") {
  for (double p : {0.2, 0.6, 0.95}) {
    for (double alpha : {0.1, 1.0, 2.2, 3.0}) {
      CHECK(fisher_closed({p, alpha, 0, 2, unit_params}) ==
            doctest::Approx(fisher_closed({p, 2.0 * std::numbers::pi - alpha, 0, 2,
                                           unit_params})).epsilon(1e-14));
    }
  }
}

TEST_CASE("non-interfering pairs are affine in p and alpha-free") {
  for (auto [k_low, k_high] : {std::pair{0, 1}, std::pair{0, 3}, std::pair{2, 5}}) {
    const double f0 = fisher_closed({0.0, 0.0, k_low, k_high, unit_params});
    const double f1 = fisher_closed({1.0, 0.0, k_low, k_high, unit_params});
    for (double p : {0.15, 0.4, 0.85}) {
      for (double alpha : {0.0, 1.3, 2.9}) {
        const double value = fisher_closed({p, alpha, k_low, k_high, unit_params});
        CHECK(std::abs(value - (f0 + (f1 - f0) * p)) < 1e-12);
      }
    }
  }
}

TEST_CASE("minimize_fisher on the canonical pair") {
  const FisherMinimum minimum = minimize_fisher(0, 2, 1.0);
  CHECK(minimum.p_min == doctest::Approx(0.9082483).epsilon(1e-6));
  CHECK(minimum.alpha_min == 0.0);
  CHECK(minimum.value == doctest::Approx(1.1010205).epsilon(1e-6));
  CHECK(minimum.value < 2.0);

  // mu scales the minimal value and leaves the minimizer alone.
  const FisherMinimum scaled = minimize_fisher(0, 2, 3.0);
  CHECK(scaled.p_min == doctest::Approx(minimum.p_min).epsilon(1e-12));
  CHECK(scaled.value == doctest::Approx(3.0 * minimum.value).epsilon(1e-12));
}

TEST_CASE("minimize_fisher without interference returns the pure low state") {
  const FisherMinimum minimum = minimize_fisher(0, 1, 1.0);
  CHECK(minimum.p_min == 1.0);
  CHECK(minimum.value == 2.0);
}

TEST_CASE("minimize_fisher on the (1,3) pair beats the pure state") {
  const FisherMinimum minimum = minimize_fisher(1, 3, 1.0);
  CHECK(minimum.value < 6.0);

  const auto scan = oracle::scan_minimum(
      [&](double p) { return fisher_closed({p, 0.0, 1, 3, unit_params}); }, 0.0, 1.0,
      200001);
  CHECK(std::abs(minimum.p_min - scan.arg) < 1e-5);
  CHECK(std::abs(minimum.value - scan.value) < 1e-9);
}

TEST_CASE("figure1 scan endpoints and shape") {
  const std::vector<Figure1Row> rows = figure1_scan(1.0, 41);
  CHECK(rows.front().p == 0.0);
  CHECK(rows.back().p == 1.0);
  CHECK(rows.front().fisher_alpha0_over_4mu == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(rows.front().fisher_alpha_half_pi_over_4mu == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(rows.back().fisher_alpha0_over_4mu == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(rows.back().fisher_alpha_half_pi_over_4mu == doctest::Approx(0.5).epsilon(1e-15));

  for (const Figure1Row& row : rows) {
    CHECK(std::abs(row.fisher_alpha_half_pi_over_4mu - (2.5 - 2.0 * row.p)) < 1e-12);
    CHECK(row.fisher_alpha0_over_4mu <= row.fisher_alpha_half_pi_over_4mu + 1e-15);
  }
}

TEST_CASE("figure1 alpha=0 minimum sits at the closed-form spot") {
  const std::vector<Figure1Row> rows = figure1_scan(1.0, 200001);
  double best = rows.front().fisher_alpha0_over_4mu;
  double best_p = rows.front().p;
  for (const Figure1Row& row : rows) {
    if (row.fisher_alpha0_over_4mu < best) {
      best = row.fisher_alpha0_over_4mu;
      best_p = row.p;
    }
  }
  CHECK(best == doctest::Approx(1.1010205 / 4.0).epsilon(1e-6));
  CHECK(std::abs(best_p - 0.9082483) < 1e-5);
}

TEST_SUITE_END();
