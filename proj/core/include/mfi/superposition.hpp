#pragma once

#include <vector>

#include "mfi/grid.hpp"
#include "mfi/oscillator_params.hpp"

namespace mfi {

/// Two-eigenstate superposition sqrt(p) psi_{k_low} + e^{i alpha}
/// sqrt(1-p) psi_{k_high}.  Interference requires k_high = k_low + 2.
struct SuperpositionSpec {
  double p = 1.0;
  double alpha = 0.0;
  int k_low = 0;
  int k_high = 2;
  OscillatorParams params;

  void validate() const;
  bool interfering() const { return k_high == k_low + 2; }
};

/// Finite coefficient vector over the eigenbasis.
struct StateVector {
  std::vector<complex> coefficients;
  OscillatorParams params;

  double norm_squared() const;
};

StateVector superpose(const SuperpositionSpec& spec);

/// Sum of coefficients[n] * psi_n(x) on a grid.
GridFunction synthesize(const StateVector& state, const Grid& grid);

/// Closed-form Fisher information
///   p I_low + (1-p) I_high + 2 sqrt(p(1-p)) cos(alpha) w_{low,high}.
double fisher_closed(const SuperpositionSpec& spec);

/// Closed-form second moment about the center m:
///   p v_low + (1-p) v_high + 2 sqrt(p(1-p)) cos(alpha) v_{low,high}.
double variance_closed(const SuperpositionSpec& spec);

struct FisherMinimum {
  double p_min = 1.0;
  double alpha_min = 0.0;
  double value = 0.0;
};

/// Minimum of fisher_closed over p in [0,1], alpha in [0, 2pi).  Solved
/// in closed form and cross-checked against golden-section search; the
/// two routes must agree to 1e-9.
FisherMinimum minimize_fisher(int k_low, int k_high, double mu);

struct Figure1Row {
  double p = 0.0;
  double fisher_alpha0_over_4mu = 0.0;       // alpha = 0, interference on
  double fisher_alpha_half_pi_over_4mu = 0.0; // alpha = pi/2, no cross term
};

/// Both interference curves of the (0,2) pair in units of 4 mu, sampled
/// at p_count uniform points on [0,1].
std::vector<Figure1Row> figure1_scan(double mu, int p_count);

}  // namespace mfi
