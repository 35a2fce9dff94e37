#pragma once

#include <cstdint>
#include <vector>

#include "mfi/grid.hpp"
#include "mfi/oscillator_params.hpp"

namespace mfi {

/// Maximum-entropy (geometric) mixture of eigenstate densities at fixed
/// mean Fisher information.  d = 4 beta mu is the only combination the
/// results depend on; s = (1 - e^-d)/(1 + e^-d) = tanh(d/2).
struct GibbsEnsemble {
  double d = 1.0;
  int truncation = 1;
  double s = 0.0;
  OscillatorParams params;

  GibbsEnsemble(double d_, int truncation_, OscillatorParams params_ = {});

  static GibbsEnsemble from_beta(double beta, OscillatorParams params,
                                 int truncation);

  /// Smallest N with tail bound e^{-dN} <= tol.
  static int truncation_for_tail(double d, double tol);

  double tail_bound() const;
};

/// p_n = (1 - e^-d) e^{-d n} for n = 0..truncation-1.  Sums to
/// 1 - e^{-d truncation}.
std::vector<double> gibbs_weights(double d, int truncation);

/// Truncated mixture density sum p_n psi_n(x)^2.
double mixture_density_series(double d, const OscillatorParams& params,
                              int truncation, double x);

/// Closed-form mixture density sqrt(s mu/pi) exp(-s mu (x-m)^2).
double mixture_density_closed(double d, const OscillatorParams& params, double x);

/// Fisher information of the mixture density: 2 s mu = 2 mu tanh(d/2).
double gibbs_fisher(double d, double mu);

/// Second moment of the mixture density: 1/(2 s mu).
double gibbs_risk(double d, double mu);

/// gibbs_fisher * gibbs_risk simplified algebraically; identically 1.
double gibbs_fisher_risk_product();

/// Weighted mean of the eigenstate Fisher informations
/// sum p_n (4n+2) mu = 2 mu / s.  Distinct from gibbs_fisher: Fisher
/// information is convex, so the mixture carries less than the mean.
double gibbs_mean_eigen_fisher(double d, double mu);

/// Verifies that the geometric weights are a constrained maximum of
/// Shannon entropy: random perturbations projected onto
/// {sum p = 1, sum p I_Fn fixed} may not raise entropy beyond 1e-12.
bool entropy_maximizer_check(double d, int truncation, double perturbation_scale,
                             int samples = 64, std::uint64_t seed = 20260809);

}  // namespace mfi
