#include "mfi/gibbs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "mfi/fisher.hpp"
#include "mfi/oscillator.hpp"

namespace mfi {

namespace {

void check_d(double d) {
  if (!(d > 0.0) || !std::isfinite(d))
    throw domain_error("gibbs: the maximum-entropy multiplier requires d > 0");
}

double s_of(double d) { return std::tanh(0.5 * d); }

}  // namespace

GibbsEnsemble::GibbsEnsemble(double d_, int truncation_, OscillatorParams params_)
    : d(d_), truncation(truncation_), params(params_) {
  check_d(d);
  params.validate();
  if (truncation < 1) throw domain_error("gibbs: truncation must be >= 1");
  s = s_of(d);
}

GibbsEnsemble GibbsEnsemble::from_beta(double beta, OscillatorParams params,
                                       int truncation) {
  if (!(beta > 0.0)) throw domain_error("gibbs: beta must be positive");
  return GibbsEnsemble(4.0 * beta * params.mu, truncation, params);
}

int GibbsEnsemble::truncation_for_tail(double d, double tol) {
  check_d(d);
  if (!(tol > 0.0 && tol < 1.0)) throw domain_error("gibbs: tail tolerance in (0,1)");
  return static_cast<int>(std::ceil(-std::log(tol) / d));
}

double GibbsEnsemble::tail_bound() const { return std::exp(-d * truncation); }

std::vector<double> gibbs_weights(double d, int truncation) {
  check_d(d);
  if (truncation < 1) throw domain_error("gibbs: truncation must be >= 1");
  const double head = 1.0 - std::exp(-d);
  std::vector<double> p(truncation);
  for (int n = 0; n < truncation; ++n) p[n] = head * std::exp(-d * n);
  return p;
}

double mixture_density_series(double d, const OscillatorParams& params,
                              int truncation, double x) {
  const std::vector<double> p = gibbs_weights(d, truncation);
  params.validate();
  const std::vector<double> psi = eigenstate_values_upto(truncation - 1, x, params);
  double acc = 0.0;
  for (int n = truncation - 1; n >= 0; --n) acc += p[n] * psi[n] * psi[n];
  return acc;
}

double mixture_density_closed(double d, const OscillatorParams& params, double x) {
  check_d(d);
  params.validate();
  const double smu = s_of(d) * params.mu;
  const double u = x - params.m;
  return std::sqrt(smu / std::numbers::pi) * std::exp(-smu * u * u);
}

double gibbs_fisher(double d, double mu) {
  check_d(d);
  if (!(mu > 0.0)) throw domain_error("mu must be positive");
  return 2.0 * s_of(d) * mu;
}

double gibbs_risk(double d, double mu) {
  check_d(d);
  if (!(mu > 0.0)) throw domain_error("mu must be positive");
  return 1.0 / (2.0 * s_of(d) * mu);
}

double gibbs_fisher_risk_product() {
  // 2 s mu * 1/(2 s mu) cancels algebraically for every d and mu.
  return 1.0;
}

double gibbs_mean_eigen_fisher(double d, double mu) {
  check_d(d);
  if (!(mu > 0.0)) throw domain_error("mu must be positive");
  return 2.0 * mu / s_of(d);
}

bool entropy_maximizer_check(double d, int truncation, double perturbation_scale,
                             int samples, std::uint64_t seed) {
  const std::vector<double> p = gibbs_weights(d, truncation);
  if (!(perturbation_scale > 0.0))
    throw domain_error("entropy check: perturbation scale must be positive");

  const int n = truncation;
  std::vector<double> fisher_values(n);
  for (int i = 0; i < n; ++i) fisher_values[i] = 4.0 * i + 2.0;  // units of mu

  auto entropy = [](const std::vector<double>& q) {
    double acc = 0.0;
    for (double v : q)
      if (v > 0.0) acc -= v * std::log(v);
    return acc;
  };
  const double base_entropy = entropy(p);

  // Project a raw perturbation onto {sum v = 0, sum v I_F = 0} by removing
  // its components along the two constraint rows.
  double g11 = n, g12 = 0.0, g22 = 0.0;
  for (int i = 0; i < n; ++i) {
    g12 += fisher_values[i];
    g22 += fisher_values[i] * fisher_values[i];
  }
  const double det = g11 * g22 - g12 * g12;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);

  for (int trial = 0; trial < samples; ++trial) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = perturbation_scale * p[i] * uniform(rng);
    double r1 = 0.0, r2 = 0.0;
    for (int i = 0; i < n; ++i) {
      r1 += v[i];
      r2 += v[i] * fisher_values[i];
    }
    const double a = (g22 * r1 - g12 * r2) / det;
    const double b = (g11 * r2 - g12 * r1) / det;
    for (int i = 0; i < n; ++i) v[i] -= a + b * fisher_values[i];

    // Backtrack until the perturbed weights stay positive; the projection
    // can push far-tail weights below zero.
    std::vector<double> q(n);
    double shrink = 1.0;
    bool feasible = false;
    for (int attempt = 0; attempt < 60 && !feasible; ++attempt, shrink *= 0.5) {
      feasible = true;
      for (int i = 0; i < n; ++i) {
        q[i] = p[i] + shrink * v[i];
        if (q[i] <= 0.0) { feasible = false; break; }
      }
    }
    if (!feasible) continue;
    if (entropy(q) > base_entropy + 1e-12) return false;
  }
  return true;
}

}  // namespace mfi
