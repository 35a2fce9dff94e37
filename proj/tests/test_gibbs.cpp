#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mfi/fisher.hpp"
#include "mfi/gibbs.hpp"
#include "mfi/oscillator.hpp"

using namespace mfi;

TEST_SUITE_BEGIN("gibbs");

TEST_CASE("weights form the geometric ladder") {
  const std::vector<double> p = gibbs_weights(std::log(2.0), 3);
  REQUIRE(p.size() == 3);
  CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p[1] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(p[2] == doctest::Approx(0.125).epsilon(1e-15));

  for (double d : {0.3, 1.0, 2.5}) {
    for (int n : {1, 7, 40}) {
      const std::vector<double> w = gibbs_weights(d, n);
      double sum = 0.0;
      for (double v : w) sum += v;
      CHECK(sum == doctest::Approx(1.0 - std::exp(-d * n)).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(gibbs_weights(0.0, 4), domain_error);
  CHECK_THROWS_AS(gibbs_weights(-1.0, 4), domain_error);
}

TEST_CASE("truncated mean eigen fisher approaches the closed form") {
  const double d = 1.0;
  const double mu = 1.0;
  const std::vector<double> p = gibbs_weights(d, 40);
  double mean = 0.0;
  for (size_t n = 0; n < p.size(); ++n)
    mean += p[n] * closed_form_eigen_fisher(static_cast<int>(n), mu);
  // Truncated sums sit below the full series by at most the tail times
  // the largest truncated term scale.
  const double tail = std::exp(-d * 40);
  CHECK(std::abs(mean - gibbs_mean_eigen_fisher(d, mu)) < 200.0 * tail + 1e-13);

  // The mixture's own information is 2 s mu, strictly below the weighted
  // mean 2 mu / s of the component informations.
  CHECK(gibbs_fisher(d, mu) < mean);
}

TEST_CASE("single-term series is the deficient-mass gaussian") {
  const OscillatorParams params{1.0, 0.0};
  for (double x : {-1.0, 0.0, 0.45}) {
    const double expected = (1.0 - std::exp(-0.7)) *
                            std::pow(eigenstate_value(0, x, params), 2);
    CHECK(mixture_density_series(0.7, params, 1, x) ==
          doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("series matches the closed form at depth") {
  const OscillatorParams params{1.0, 0.0};
  CHECK(mixture_density_series(1.0, params, 60, 0.0) ==
        doctest::Approx(mixture_density_closed(1.0, params, 0.0)).epsilon(1e-10));

  for (double d : {0.5, 1.0, 2.0}) {
    const int truncation = GibbsEnsemble::truncation_for_tail(d, 1e-12);
    const Grid grid = default_grid_for(params, 4);
    double sup = 0.0;
    for (int j = 0; j < grid.count; j += 7) {
      const double x = grid.point(j);
      sup = std::max(sup, std::abs(mixture_density_series(d, params, truncation, x) -
                                   mixture_density_closed(d, params, x)));
    }
    CHECK(sup < 1e-10);
  }
}

TEST_CASE("frozen-ensemble limit collapses to the ground state") {
  const OscillatorParams params{1.0, 0.3};
  for (double x : {0.0, 0.3, 1.2}) {
    const double ground = std::pow(eigenstate_value(0, x, params), 2);
    CHECK(std::abs(mixture_density_series(20.0, params, 5, x) - ground) < 1e-8);
  }
}

TEST_CASE("closed-form density integrates to one") {
  const OscillatorParams params{1.0, 0.0};
  const Grid grid = default_grid_for(params, 0);
  const GridFunction density = GridFunction::sample(
      grid, [&](double x) { return mixture_density_closed(2.0, params, x); });
  CHECK(std::abs(integrate_real(density) - 1.0) < 1e-10);
}

TEST_CASE("gibbs fisher closed form and limits") {
  CHECK(gibbs_fisher(2.0, 1.0) == doctest::Approx(2.0 * std::tanh(1.0)).epsilon(1e-15));
  CHECK(std::abs(gibbs_fisher(40.0, 1.5) - 3.0) < 1e-12);
  for (double d : {0.1, 0.5, 1.0, 3.0, 10.0}) {
    CHECK(gibbs_fisher(d, 1.0) < 2.0);
    CHECK(gibbs_fisher(d, 2.5) < 5.0);
  }
}

TEST_CASE("gibbs fisher is monotone in d and mu") {
  double previous = 0.0;
  for (double d = 0.1; d < 6.0; d += 0.1) {
    const double value = gibbs_fisher(d, 1.0);
    CHECK(value > previous);
    previous = value;
  }
  CHECK(gibbs_fisher(1.0, 2.0) > gibbs_fisher(1.0, 1.0));
}

TEST_CASE("gibbs risk inverts the fisher information") {
  CHECK(gibbs_risk(2.0, 1.0) ==
        doctest::Approx(1.0 / (2.0 * std::tanh(1.0))).epsilon(1e-15));
  CHECK(std::abs(gibbs_risk(40.0, 1.0) - 0.5) < 1e-12);
  CHECK(gibbs_fisher_risk_product() == 1.0);
  for (double d : {0.25, 1.0, 4.0}) {
    for (double mu : {0.5, 1.0, 2.0}) {
      const double numeric = gibbs_fisher(d, mu) * gibbs_risk(d, mu);
      CHECK(std::abs(numeric - 1.0) <= 3e-16);
    }
  }
}

TEST_CASE("quadrature fisher of the mixture matches 2 s mu") {
  for (double d : {0.5, 1.0, 2.0, 5.0}) {
    for (double mu : {0.5, 1.0, 2.0}) {
      const OscillatorParams params{mu, 0.0};
      // Size the grid by the mixture's own scale s*mu: for small d the
      // mixture is much wider than the mu-eigenstates.
      const Grid grid = default_grid_for({std::tanh(0.5 * d) * mu, 0.0}, 0);
      const GridFunction density = GridFunction::sample(
          grid, [&](double x) { return mixture_density_closed(d, params, x); });
      const double quadrature = fisher_of_density(density);
      CHECK(std::abs(quadrature - gibbs_fisher(d, mu)) < 1e-6);
      const double risk = moments(density).variance;
      CHECK(std::abs(risk - gibbs_risk(d, mu)) < 1e-8);
    }
  }
}

TEST_CASE("ensemble bookkeeping") {
  const GibbsEnsemble ensemble(1.0, 30);
  CHECK(ensemble.s == doctest::Approx(std::tanh(0.5)).epsilon(1e-15));
  CHECK(ensemble.tail_bound() == doctest::Approx(std::exp(-30.0)).epsilon(1e-12));
  CHECK(GibbsEnsemble::truncation_for_tail(1.0, 1e-12) == 28);
  CHECK(GibbsEnsemble::from_beta(0.25, OscillatorParams{1.0, 0.0}, 10).d ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(GibbsEnsemble(-0.5, 10), domain_error);
}

TEST_CASE("entropy maximizer survives constrained perturbations") {
  CHECK(entropy_maximizer_check(1.0, 30, 1e-3));
  CHECK(entropy_maximizer_check(0.2, 120, 1e-3));
}

TEST_CASE("entropy can increase when only normalization is enforced") {
  // Witness: blending toward the uniform distribution keeps the total mass
  // fixed, abandons the fixed mean information, and raises entropy.
  const int n = 30;
  const std::vector<double> p = gibbs_weights(1.0, n);
  auto entropy = [](const std::vector<double>& q) {
    double acc = 0.0;
    for (double v : q)
      if (v > 0.0) acc -= v * std::log(v);
    return acc;
  };
  const double mass = [&] {
    double acc = 0.0;
    for (double v : p) acc += v;
    return acc;
  }();
  std::vector<double> blended(p);
  const double t = 1e-3;
  for (double& v : blended) v = (1.0 - t) * v;
  for (double& v : blended) v += t * mass / n;
  CHECK(entropy(blended) > entropy(p) + 1e-12);
}

TEST_SUITE_END();
