#pragma once

#include <string>

#include "mfi/grid.hpp"
#include "mfi/linalg.hpp"

namespace mfi {

/// Which comparison the Fisher values of a report live in: common
/// oscillator scale mu (physical) or common fixed risk r (transactional).
enum class Image { physical, transactional };

const char* to_string(Image image);

/// Bundled outputs for ranking a strategy.
struct FisherReport {
  double fisher = 0.0;
  double mean = 0.0;
  double variance = 0.0;
  double cramer_rao_product = 0.0;
  Image image = Image::physical;

  static std::string csv_header();
  std::string csv_row() const;
};

/// Fisher information of a probability density via
/// integral (f')^2 / f, skipping points where f < floor.
/// f must be real, nonnegative (above -1e-12) and normalized to 1e-6.
double fisher_of_density(const GridFunction& f, double floor = 1e-12);

/// Fisher information of a (possibly complex) normalized amplitude:
/// 4 integral |psi'|^2.  The derivative is spectral, so eigenstate inputs
/// reproduce the closed form to near machine precision.
double fisher_of_amplitude(const GridFunction& psi);

/// Closed form for eigenstates: I_Fn = (4n+2) mu.
double closed_form_eigen_fisher(int n, double mu);

struct Moments {
  double norm = 0.0;
  double mean = 0.0;
  double variance = 0.0;
};

/// Zeroth, first and centered second moment of a real density.
Moments moments(const GridFunction& f);

/// v_jk = (1/2mu)(2 delta_jk eps_j + (delta_{j+2,k}+delta_{j,k+2})
///         min_{r=j,k} sqrt((r+1)(r+2))), 0 <= j,k <= n_max.
SymMatrix risk_matrix_v(int n_max, double mu);

/// w_jk = 2mu (2 delta_jk eps_j - (delta_{j+2,k}+delta_{j,k+2})
///         min_{r=j,k} sqrt((r+1)(r+2))).
SymMatrix gradient_matrix_w(int n_max, double mu);

/// fisher_of_amplitude(psi) times the variance of |psi|^2; always
/// >= 1 - 1e-9 for states this library constructs.
double cramer_rao_product(const GridFunction& psi);

}  // namespace mfi
