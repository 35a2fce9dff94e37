#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "mfi/grid.hpp"
#include "mfi/linalg.hpp"

namespace mfi {

/// The three moment constraints of the minimization: unit mass, mean and
/// centered second moment (risk).
struct ConstraintSet {
  double norm_target = 1.0;
  double mean_target = 0.0;
  double risk_target = 0.5;

  void validate() const {
    if (norm_target != 1.0)
      throw domain_error("constraints: norm target must be 1");
    if (!(risk_target > 0.0))
      throw domain_error("constraints: risk target must be positive");
  }
};

struct SolveOptions {
  int max_iterations = 50000;
  double gradient_tolerance = 1e-8;
  /// When set, receives one CSV line per iteration:
  /// iter,fisher,norm_residual,mean_residual,risk_residual
  std::ostream* trace = nullptr;
};

/// Minimizes 4 integral (psi')^2 over real grid functions under the three
/// constraints by projected gradient descent: Barzilai-Borwein steps with
/// a spectral-radius clamp, exact renormalization plus a 2x2 Newton
/// correction of mean and risk after every step.  The randomized strictly
/// positive initial bump is drawn from `seed`.  Converges to the Gaussian
/// ground state with mu = 1/(2 risk); throws convergence_error (carrying
/// the residual) when the projected gradient does not reach tolerance.
GridFunction solve_mfi(const ConstraintSet& constraints, const Grid& grid,
                       std::uint64_t seed, const SolveOptions& options = {});

/// L2 norm of -(1/2mu) psi'' + (mu/2)(x-m)^2 psi - eps psi over the grid
/// interior (two-point bands at each end excluded).
double euler_lagrange_residual(const GridFunction& psi, double epsilon,
                               double mu, double m);

/// Symmetric tridiagonal discretization of
///   -(1/2mu) d^2/dx^2 + (mu/2)(x-m)^2
/// on the interior points with Dirichlet ends.  Assembled as a Numerov
/// pencil A y = eps B y; a plain 2nd-order operator cannot hold the
/// eigenvalue error below 1e-4 at the default resolution.
struct DiscreteOperator {
  Grid grid;
  double mu = 1.0;
  double m = 0.0;
  TridiagonalPencil pencil;

  DiscreteOperator(const Grid& grid, double mu, double m);
};

struct EigenPair {
  double epsilon = 0.0;
  GridFunction psi;
};

/// Lowest `count` eigenpairs of the discrete operator, ascending,
/// eigenvectors normalized under the grid quadrature weight.  Throws
/// domain_coverage_error when the top state leaks into the boundary.
std::vector<EigenPair> discrete_spectrum(const Grid& grid, double mu, double m,
                                         int count);

/// Second variation of the Fisher term along a perturbation:
/// 4 integral |delta_psi'|^2, strictly positive for nonzero input.
double convexity_witness(const GridFunction& delta_psi);

}  // namespace mfi
