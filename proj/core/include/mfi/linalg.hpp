#pragma once

#include <vector>

#include "mfi/errors.hpp"

namespace mfi {

/// Dense symmetric matrix, row-major.  Sizes stay small (<= 65) so no
/// packed storage is used.
struct SymMatrix {
  int dim = 0;
  std::vector<double> data;

  SymMatrix() = default;
  explicit SymMatrix(int n) : dim(n), data(static_cast<size_t>(n) * n, 0.0) {}

  double& at(int i, int j) { return data[static_cast<size_t>(i) * dim + j]; }
  double at(int i, int j) const { return data[static_cast<size_t>(i) * dim + j]; }

  double max_asymmetry() const;
};

/// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi
/// rotations.
std::vector<double> symmetric_eigenvalues(const SymMatrix& a);

/// Generalized symmetric tridiagonal pencil A y = eps B y with B positive
/// definite.  diag vectors have length n, off vectors length n-1.
///
/// When a_lower/a_upper are filled, they describe a nonsymmetric variant
/// of A whose symmetric part is a_off; bisection runs on the symmetric
/// pencil (provable inertia counts) while inverse iteration targets the
/// variant, whose eigenvectors can carry a higher-order discretization.
struct TridiagonalPencil {
  std::vector<double> a_diag, a_off;
  std::vector<double> b_diag, b_off;
  std::vector<double> a_lower, a_upper;

  int size() const { return static_cast<int>(a_diag.size()); }

  /// Number of symmetric-pencil eigenvalues strictly below `shift`
  /// (Sylvester inertia of A - shift B via LDL^T).
  int eigenvalues_below(double shift) const;

  /// Lowest `count` eigenvalues, ascending, by Sturm bisection.
  std::vector<double> lowest_eigenvalues(int count) const;

  /// Eigenvector near `eigenvalue` via inverse iteration with a pivoted
  /// tridiagonal factorization.  `previous` holds already-computed
  /// eigenvectors to orthogonalize against (B-inner product for the
  /// symmetric pencil, Euclidean for the nonsymmetric variant, matching
  /// the respective exact orthogonality).  Euclidean-normalized.
  std::vector<double> eigenvector(double eigenvalue,
                                  const std::vector<std::vector<double>>& previous) const;
};

}  // namespace mfi
