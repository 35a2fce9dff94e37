#include "mfi/superposition.hpp"

#include <cmath>
#include <numbers>

#include "mfi/fisher.hpp"
#include "mfi/oscillator.hpp"

namespace mfi {

void SuperpositionSpec::validate() const {
  params.validate();
  if (!(p >= 0.0 && p <= 1.0))
    throw domain_error("superposition: p must lie in [0,1]");
  if (!std::isfinite(alpha)) throw domain_error("superposition: alpha must be finite");
  if (k_low < 0 || k_high <= k_low)
    throw domain_error("superposition: need 0 <= k_low < k_high");
}

double StateVector::norm_squared() const {
  double acc = 0.0;
  for (const complex& c : coefficients) acc += std::norm(c);
  return acc;
}

StateVector superpose(const SuperpositionSpec& spec) {
  spec.validate();
  StateVector state;
  state.params = spec.params;
  state.coefficients.assign(spec.k_high + 1, complex(0.0, 0.0));
  state.coefficients[spec.k_low] = std::sqrt(spec.p);
  state.coefficients[spec.k_high] =
      std::sqrt(1.0 - spec.p) * complex(std::cos(spec.alpha), std::sin(spec.alpha));
  return state;
}

GridFunction synthesize(const StateVector& state, const Grid& grid) {
  const int n_max = static_cast<int>(state.coefficients.size()) - 1;
  if (n_max < 0) throw domain_error("state vector has no coefficients");
  return GridFunction::sample_complex(grid, [&](double x) {
    const std::vector<double> psi = eigenstate_values_upto(n_max, x, state.params);
    complex acc = 0.0;
    for (int n = 0; n <= n_max; ++n) acc += state.coefficients[n] * psi[n];
    return acc;
  });
}

namespace {

// Coupling of the |j-k| = 2 band in the Lemma matrices; zero otherwise.
double band_coupling(int k_low, int k_high) {
  if (k_high != k_low + 2) return 0.0;
  return std::sqrt((k_low + 1.0) * (k_low + 2.0));
}

double cross_weight(const SuperpositionSpec& spec) {
  return 2.0 * std::sqrt(spec.p * (1.0 - spec.p)) * std::cos(spec.alpha);
}

}  // namespace

double fisher_closed(const SuperpositionSpec& spec) {
  spec.validate();
  const double mu = spec.params.mu;
  const double w_cross = -2.0 * mu * band_coupling(spec.k_low, spec.k_high);
  return spec.p * closed_form_eigen_fisher(spec.k_low, mu) +
         (1.0 - spec.p) * closed_form_eigen_fisher(spec.k_high, mu) +
         cross_weight(spec) * w_cross;
}

double variance_closed(const SuperpositionSpec& spec) {
  spec.validate();
  const double mu = spec.params.mu;
  const double v_cross = band_coupling(spec.k_low, spec.k_high) / (2.0 * mu);
  const double eps_low = spec.k_low + 0.5;
  const double eps_high = spec.k_high + 0.5;
  return spec.p * eps_low / mu + (1.0 - spec.p) * eps_high / mu +
         cross_weight(spec) * v_cross;
}

namespace {

double golden_section_min(const std::function<double(double)>& f, double lo,
                          double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d; d = c; fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

FisherMinimum minimize_fisher(int k_low, int k_high, double mu) {
  if (k_low < 0 || k_high <= k_low) throw domain_error("invalid eigenstate pair");
  if (!(mu > 0.0)) throw domain_error("mu must be positive");
  const OscillatorParams params{mu, 0.0};

  FisherMinimum result;
  const double coupling = band_coupling(k_low, k_high);
  if (coupling == 0.0) {
    // No interference: affine in p, minimized by the pure lower state.
    result.p_min = 1.0;
    result.alpha_min = 0.0;
    result.value = closed_form_eigen_fisher(k_low, mu);
    return result;
  }

  // Interference band: the cross weight is negative, so alpha = 0.  The
  // stationarity condition in p reduces to a quadratic through
  // g = (1-2p)/sqrt(p(1-p)):  g = -4/coupling, hence
  // (4 + c^2) p^2 - (4 + c^2) p + 1 = 0 with c^2 = 16/coupling^2.
  const double c2 = 16.0 / (coupling * coupling);
  const double p_closed = 0.5 + 0.5 * std::sqrt(c2 / (4.0 + c2));
  auto value_at = [&](double p) {
    return fisher_closed(SuperpositionSpec{p, 0.0, k_low, k_high, params});
  };
  // The search localizes the argument only to ~sqrt(eps) on the flat
  // quadratic bottom; the minimum value itself must agree to 1e-9.
  const double p_golden = golden_section_min(value_at, 0.0, 1.0, 1e-12);
  if (std::abs(p_golden - p_closed) > 1e-6 ||
      std::abs(value_at(p_golden) - value_at(p_closed)) > 1e-9)
    throw contract_error("minimize_fisher: closed form and search disagree");

  result.p_min = p_closed;
  result.alpha_min = 0.0;
  result.value = value_at(p_closed);
  return result;
}

std::vector<Figure1Row> figure1_scan(double mu, int p_count) {
  if (!(mu > 0.0)) throw domain_error("mu must be positive");
  if (p_count < 2) throw domain_error("figure1 scan needs at least 2 samples");
  const OscillatorParams params{mu, 0.0};
  const double unit = 4.0 * mu;
  std::vector<Figure1Row> rows(p_count);
  for (int i = 0; i < p_count; ++i) {
    const double p = static_cast<double>(i) / (p_count - 1);
    rows[i].p = p;
    rows[i].fisher_alpha0_over_4mu =
        fisher_closed(SuperpositionSpec{p, 0.0, 0, 2, params}) / unit;
    rows[i].fisher_alpha_half_pi_over_4mu =
        fisher_closed(SuperpositionSpec{p, std::numbers::pi / 2.0, 0, 2, params}) / unit;
  }
  return rows;
}

}  // namespace mfi
