#include "mfi/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace mfi {

double SymMatrix::max_asymmetry() const {
  double worst = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      worst = std::max(worst, std::abs(at(i, j) - at(j, i)));
  return worst;
}

std::vector<double> symmetric_eigenvalues(const SymMatrix& input) {
  const int n = input.dim;
  if (n == 0) return {};
  SymMatrix a = input;

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += a.at(i, j) * a.at(i, j);
    return std::sqrt(2.0 * s);
  };

  double scale = 0.0;
  for (double v : a.data) scale = std::max(scale, std::abs(v));
  const double tol = 1e-15 * std::max(scale, 1.0);

  for (int sweep = 0; sweep < 100 && off_norm() > tol; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a.at(p, q);
        if (std::abs(apq) <= tol * 1e-2) continue;
        const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a.at(k, p);
          const double akq = a.at(k, q);
          a.at(k, p) = c * akp - s * akq;
          a.at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a.at(p, k);
          const double aqk = a.at(q, k);
          a.at(p, k) = c * apk - s * aqk;
          a.at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a.at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

int TridiagonalPencil::eigenvalues_below(double shift) const {
  const int n = size();
  int count = 0;
  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    scale = std::max(scale, std::abs(a_diag[i]) + std::abs(shift) * b_diag[i]);
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon() +
                      1e-300 * scale;

  double d = a_diag[0] - shift * b_diag[0];
  if (d == 0.0) d = -tiny;
  if (d < 0.0) ++count;
  for (int i = 1; i < n; ++i) {
    const double off = a_off[i - 1] - shift * b_off[i - 1];
    d = (a_diag[i] - shift * b_diag[i]) - off * off / d;
    if (d == 0.0) d = -tiny;
    if (d < 0.0) ++count;
  }
  return count;
}

std::vector<double> TridiagonalPencil::lowest_eigenvalues(int count) const {
  const int n = size();
  if (count < 1 || count > n)
    throw domain_error("pencil: eigenvalue count out of range");

  // All pencil eigenvalues lie in [-R, R] where strict diagonal dominance
  // of A - t B forces nonsingularity (B is strictly dominant itself).
  double radius = 0.0;
  for (int i = 0; i < n; ++i) {
    double ra = 0.0, rb = 0.0;
    if (i > 0) { ra += std::abs(a_off[i - 1]); rb += std::abs(b_off[i - 1]); }
    if (i + 1 < n) { ra += std::abs(a_off[i]); rb += std::abs(b_off[i]); }
    const double denom = b_diag[i] - rb;
    if (!(denom > 0.0))
      throw domain_error("pencil: B must be strictly diagonally dominant");
    radius = std::max(radius, (std::abs(a_diag[i]) + ra) / denom);
  }
  radius *= 1.0 + 1e-12;

  std::vector<double> out(count);
  for (int k = 0; k < count; ++k) {
    double lo = -radius, hi = radius;
    while (hi - lo > 1e-13 * std::max(1.0, std::abs(hi) + std::abs(lo))) {
      const double mid = 0.5 * (lo + hi);
      if (eigenvalues_below(mid) >= k + 1)
        hi = mid;
      else
        lo = mid;
    }
    out[k] = 0.5 * (lo + hi);
  }
  return out;
}

namespace {

// LU factorization of a tridiagonal matrix with partial pivoting
// (fill-in limited to a second superdiagonal), plus the paired solve.
struct TriLU {
  std::vector<double> dl, d, du, du2;
  std::vector<char> swapped;

  TriLU(std::vector<double> sub, std::vector<double> diag, std::vector<double> sup)
      : dl(std::move(sub)), d(std::move(diag)), du(std::move(sup)) {
    const int n = static_cast<int>(d.size());
    du2.assign(std::max(n - 2, 0), 0.0);
    swapped.assign(std::max(n - 1, 0), 0);

    double scale = 0.0;
    for (double v : d) scale = std::max(scale, std::abs(v));
    for (double v : dl) scale = std::max(scale, std::abs(v));
    const double tiny = 1e-290 + 1e-20 * std::numeric_limits<double>::epsilon() * scale;

    for (int i = 0; i + 1 < n; ++i) {
      if (std::abs(d[i]) >= std::abs(dl[i])) {
        if (d[i] == 0.0) d[i] = tiny;
        const double m = dl[i] / d[i];
        dl[i] = m;
        d[i + 1] -= m * du[i];
      } else {
        const double m = d[i] / dl[i];
        d[i] = dl[i];
        dl[i] = m;
        const double tmp = du[i];
        du[i] = d[i + 1];
        d[i + 1] = tmp - m * d[i + 1];
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -m * du[i + 1];
        }
        swapped[i] = 1;
      }
    }
    if (n > 0 && d[n - 1] == 0.0) d[n - 1] = tiny;
  }

  void solve(std::vector<double>& b) const {
    const int n = static_cast<int>(d.size());
    for (int i = 0; i + 1 < n; ++i) {
      if (swapped[i]) std::swap(b[i], b[i + 1]);
      b[i + 1] -= dl[i] * b[i];
    }
    b[n - 1] /= d[n - 1];
    if (n >= 2) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (int i = n - 3; i >= 0; --i)
      b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
  }
};

}  // namespace

std::vector<double> TridiagonalPencil::eigenvector(
    double eigenvalue, const std::vector<std::vector<double>>& previous) const {
  const int n = size();
  const bool plain = !a_lower.empty();
  std::vector<double> sub(std::max(n - 1, 0)), diag(n), sup(std::max(n - 1, 0));
  for (int i = 0; i < n; ++i) diag[i] = a_diag[i] - eigenvalue * b_diag[i];
  for (int i = 0; i + 1 < n; ++i) {
    sub[i] = (plain ? a_lower[i] : a_off[i]) - eigenvalue * b_off[i];
    sup[i] = (plain ? a_upper[i] : a_off[i]) - eigenvalue * b_off[i];
  }
  const TriLU lu(std::move(sub), std::move(diag), std::move(sup));

  auto apply_b = [&](const std::vector<double>& y) {
    std::vector<double> r(n);
    for (int i = 0; i < n; ++i) {
      double acc = b_diag[i] * y[i];
      if (i > 0) acc += b_off[i - 1] * y[i - 1];
      if (i + 1 < n) acc += b_off[i] * y[i + 1];
      r[i] = acc;
    }
    return r;
  };
  auto b_orthogonalize = [&](std::vector<double>& y) {
    for (const std::vector<double>& q : previous) {
      const std::vector<double> bq = plain ? q : apply_b(q);
      double num = 0.0, den = 0.0;
      for (int i = 0; i < n; ++i) {
        num += y[i] * bq[i];
        den += q[i] * bq[i];
      }
      const double coeff = num / den;
      for (int i = 0; i < n; ++i) y[i] -= coeff * q[i];
    }
  };
  auto normalize = [&](std::vector<double>& y) {
    double norm = 0.0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0.0) throw convergence_error("inverse iteration produced zero vector", 0.0);
    for (double& v : y) v /= norm;
  };

  // Deterministic pseudo-random start with full parity content.
  std::vector<double> y(n);
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  for (int i = 0; i < n; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    y[i] = static_cast<double>(state >> 11) / 9007199254740992.0 - 0.5;
  }
  normalize(y);

  for (int iter = 0; iter < 6; ++iter) {
    std::vector<double> rhs = apply_b(y);
    lu.solve(rhs);
    y = std::move(rhs);
    b_orthogonalize(y);
    normalize(y);
  }
  return y;
}

}  // namespace mfi
