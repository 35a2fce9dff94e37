#include "mfi/variational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>

#include "mfi/oscillator.hpp"

namespace mfi {

namespace {

struct ConstraintState {
  double norm = 0.0;
  double mean = 0.0;  // first moment (not centered)
  double risk = 0.0;  // second moment about mean_target
};

class MfiProblem {
 public:
  MfiProblem(const ConstraintSet& constraints, const Grid& grid)
      : constraints_(constraints),
        grid_(grid),
        h_(grid.step()),
        w_(quadrature_weights(grid)),
        x_(grid.count),
        xt_(grid.count) {
    for (int j = 0; j < grid.count; ++j) {
      x_[j] = grid.point(j);
      xt_[j] = x_[j] - constraints.mean_target;
    }
  }

  // Dirichlet-form objective 4 integral (psi')^2 and its gradient; the
  // gradient of the pair-sum form is exactly tridiagonal.
  double objective(const std::vector<double>& psi) const {
    double acc = 0.0;
    for (int j = 0; j + 1 < grid_.count; ++j) {
      const double diff = psi[j + 1] - psi[j];
      acc += diff * diff;
    }
    return 4.0 * acc / h_;
  }

  std::vector<double> gradient(const std::vector<double>& psi) const {
    const int n = grid_.count;
    std::vector<double> g(n);
    g[0] = (8.0 / h_) * (psi[0] - psi[1]);
    for (int j = 1; j + 1 < n; ++j)
      g[j] = (8.0 / h_) * (2.0 * psi[j] - psi[j - 1] - psi[j + 1]);
    g[n - 1] = (8.0 / h_) * (psi[n - 1] - psi[n - 2]);
    return g;
  }

  ConstraintState measure(const std::vector<double>& psi) const {
    ConstraintState s;
    for (int j = 0; j < grid_.count; ++j) {
      const double density = w_[j] * psi[j] * psi[j];
      s.norm += density;
      s.mean += x_[j] * density;
      s.risk += xt_[j] * xt_[j] * density;
    }
    return s;
  }

  double constraint_residual(const ConstraintState& s) const {
    return std::abs(s.mean - constraints_.mean_target) /
               (1.0 + std::abs(constraints_.mean_target)) +
           std::abs(s.risk - constraints_.risk_target) /
               (1.0 + constraints_.risk_target);
  }

  // Normalization by exact rescaling, then a damped 2x2 Newton solve on
  // the two multiplier-like coefficients (b, c) of the correction
  // psi += (b (x - m) + c (x - m)^2) psi.
  void reproject(std::vector<double>& psi) const {
    double residual = 0.0;
    for (int round = 0; round < 60; ++round) {
      ConstraintState s = measure(psi);
      const double inv = 1.0 / std::sqrt(s.norm);
      for (double& v : psi) v *= inv;
      s = measure(psi);
      const double c1 = s.mean - constraints_.mean_target;
      const double c2 = s.risk - constraints_.risk_target;
      if (std::abs(c1) < 1e-13 * (1.0 + std::abs(constraints_.mean_target)) &&
          std::abs(c2) < 1e-13 * (1.0 + constraints_.risk_target))
        return;
      residual = constraint_residual(s);

      double m1 = 0.0, m2 = 0.0, m3 = 0.0, m4 = 0.0;
      for (int j = 0; j < grid_.count; ++j) {
        const double density = w_[j] * psi[j] * psi[j];
        const double t = xt_[j];
        m1 += t * density;
        m2 += t * t * density;
        m3 += t * t * t * density;
        m4 += t * t * t * t * density;
      }
      // Jacobian of the renormalized constraints in central moments about
      // the target mean; the renormalization makes it symmetric.
      const double j11 = 2.0 * (m2 - m1 * m1);
      const double j12 = 2.0 * (m3 - m1 * m2);
      const double j21 = j12;
      const double j22 = 2.0 * (m4 - m2 * m2);
      const double det = j11 * j22 - j12 * j21;
      if (det == 0.0) throw convergence_error("constraint projection is singular", c2);
      const double b = (-c1 * j22 + c2 * j12) / det;
      const double c = (-c2 * j11 + c1 * j21) / det;

      // Backtrack the Newton step until the residual actually drops; far
      // from the manifold the full step can leave the linearization region.
      double gamma = 1.0;
      bool accepted = false;
      for (int attempt = 0; attempt < 30; ++attempt, gamma *= 0.5) {
        std::vector<double> trial = psi;
        for (int j = 0; j < grid_.count; ++j)
          trial[j] += gamma * (b * xt_[j] + c * xt_[j] * xt_[j]) * psi[j];
        ConstraintState ts = measure(trial);
        const double tinv = 1.0 / std::sqrt(ts.norm);
        for (double& v : trial) v *= tinv;
        ts = measure(trial);
        if (constraint_residual(ts) < (1.0 - 0.25 * gamma) * residual) {
          psi = std::move(trial);
          accepted = true;
          break;
        }
      }
      if (!accepted)
        throw convergence_error("constraint projection did not settle", residual);
    }
    throw convergence_error("constraint projection did not settle", residual);
  }

  // Removes the components of g along the three constraint gradients.
  void project_tangent(const std::vector<double>& psi, std::vector<double>& g) const {
    const int n = grid_.count;
    std::vector<double> u0(n), u1(n), u2(n);
    for (int j = 0; j < n; ++j) {
      const double base = 2.0 * w_[j] * psi[j];
      u0[j] = base;
      u1[j] = base * x_[j];
      u2[j] = base * xt_[j] * xt_[j];
    }
    auto dot = [n](const std::vector<double>& a, const std::vector<double>& b) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) acc += a[j] * b[j];
      return acc;
    };
    double gram[3][3] = {{dot(u0, u0), dot(u0, u1), dot(u0, u2)},
                         {dot(u1, u0), dot(u1, u1), dot(u1, u2)},
                         {dot(u2, u0), dot(u2, u1), dot(u2, u2)}};
    double rhs[3] = {dot(u0, g), dot(u1, g), dot(u2, g)};
    // Gaussian elimination with partial pivoting on the 3x3 system.
    int order[3] = {0, 1, 2};
    for (int col = 0; col < 3; ++col) {
      int pivot = col;
      for (int row = col + 1; row < 3; ++row)
        if (std::abs(gram[order[row]][col]) > std::abs(gram[order[pivot]][col]))
          pivot = row;
      std::swap(order[col], order[pivot]);
      const double diag = gram[order[col]][col];
      if (diag == 0.0) throw convergence_error("tangent projection is singular", 0.0);
      for (int row = col + 1; row < 3; ++row) {
        const double f = gram[order[row]][col] / diag;
        for (int k = col; k < 3; ++k) gram[order[row]][k] -= f * gram[order[col]][k];
        rhs[order[row]] -= f * rhs[order[col]];
      }
    }
    double lambda[3];
    for (int col = 2; col >= 0; --col) {
      double acc = rhs[order[col]];
      for (int k = col + 1; k < 3; ++k) acc -= gram[order[col]][k] * lambda[k];
      lambda[col] = acc / gram[order[col]][col];
    }
    for (int j = 0; j < n; ++j)
      g[j] -= lambda[0] * u0[j] + lambda[1] * u1[j] + lambda[2] * u2[j];
  }

  // L2 norm of the tangent gradient read as a function (Euclidean
  // gradient entries divided by the uniform cell measure).
  double function_norm(const std::vector<double>& g) const {
    double acc = 0.0;
    for (double v : g) acc += v * v;
    return std::sqrt(acc * h_) / h_;
  }

  const ConstraintSet& constraints() const { return constraints_; }
  const Grid& grid() const { return grid_; }
  double h() const { return h_; }

 private:
  ConstraintSet constraints_;
  Grid grid_;
  double h_;
  std::vector<double> w_;
  std::vector<double> x_, xt_;
};

std::vector<double> positive_bump(const MfiProblem& problem, std::uint64_t seed) {
  const Grid& grid = problem.grid();
  const ConstraintSet& constraints = problem.constraints();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> amp(-0.08, 0.08);
  double a[4];
  for (double& v : a) v = amp(rng);

  std::vector<double> psi(grid.count);
  const double half_width = grid.half_width();
  for (int j = 0; j < grid.count; ++j) {
    const double t = grid.point(j) - constraints.mean_target;
    double wiggle = 1.0;
    for (int i = 0; i < 4; ++i)
      wiggle += a[i] * std::cos((i + 1) * std::numbers::pi * t / (2.0 * half_width));
    // Amplitude width 4 r so the squared bump carries variance ~ r.
    psi[j] = std::exp(-t * t / (4.0 * constraints.risk_target)) * wiggle;
  }
  return psi;
}

}  // namespace

GridFunction solve_mfi(const ConstraintSet& constraints, const Grid& grid,
                       std::uint64_t seed, const SolveOptions& options) {
  constraints.validate();
  grid.validate();
  const double reach = 6.0 * std::sqrt(constraints.risk_target);
  if (grid.x_min > constraints.mean_target - reach ||
      grid.x_max < constraints.mean_target + reach)
    throw invalid_grid_error("solve_mfi: grid must cover +-6 sqrt(risk) around the mean");

  MfiProblem problem(constraints, grid);
  std::vector<double> psi = positive_bump(problem, seed);
  problem.reproject(psi);

  // Stability ceiling for the step: Gershgorin bound of the Dirichlet-form
  // Hessian is 32/h.
  const double eta_max = 1.8 * problem.h() / 32.0;
  double eta = eta_max;

  std::vector<double> grad = problem.gradient(psi);
  problem.project_tangent(psi, grad);

  auto as_grid_function = [&grid](const std::vector<double>& values) {
    std::vector<complex> out(values.begin(), values.end());
    return GridFunction{grid, std::move(out)};
  };

  // Spectral projected gradient: unclamped Barzilai-Borwein steplength
  // safeguarded by a nonmonotone (10-step window) backtracking search.
  // Clamping the step to the Hessian stability bound would degenerate to
  // steepest descent with condition number ~(grid count)^2.
  std::vector<double> window(10, problem.objective(psi));
  double residual = problem.function_norm(grad);

  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    if (residual < options.gradient_tolerance) return as_grid_function(psi);

    double gg = 0.0;
    for (double v : grad) gg += v * v;
    const double window_max = *std::max_element(window.begin(), window.end());

    double step = eta;
    std::vector<double> next;
    ConstraintState before;
    double objective_next = 0.0;
    bool accepted = false;
    for (int attempt = 0; attempt < 60; ++attempt, step *= 0.5) {
      next.assign(psi.size(), 0.0);
      for (size_t j = 0; j < psi.size(); ++j) next[j] = psi[j] - step * grad[j];
      before = problem.measure(next);
      try {
        problem.reproject(next);
      } catch (const convergence_error&) {
        continue;  // wild trial state; shrink the step
      }
      objective_next = problem.objective(next);
      // The rounding allowance keeps the search alive once the predicted
      // decrease per step drops below the ulp of the objective.
      const double allowance = 4e-15 * (1.0 + std::abs(window_max));
      if (objective_next <= window_max - 1e-4 * step * gg + allowance) {
        accepted = true;
        break;
      }
    }
    if (!accepted)
      throw convergence_error("solve_mfi: line search failed", residual);

    std::vector<double> next_grad = problem.gradient(next);
    problem.project_tangent(next, next_grad);

    double ss = 0.0, sy = 0.0;
    for (size_t j = 0; j < psi.size(); ++j) {
      const double s = next[j] - psi[j];
      const double y = next_grad[j] - grad[j];
      ss += s * s;
      sy += s * y;
    }
    eta = (sy > 0.0 && std::isfinite(sy)) ? ss / sy : 2.0 * step;
    eta = std::min(std::max(eta, 1e-3 * eta_max), 1e7 * eta_max);

    psi = std::move(next);
    grad = std::move(next_grad);
    residual = problem.function_norm(grad);
    window[iter % window.size()] = objective_next;

    if (options.trace) {
      char line[160];
      std::snprintf(line, sizeof(line), "%d,%.17g,%.17g,%.17g,%.17g\n", iter,
                    objective_next, before.norm - 1.0,
                    before.mean - constraints.mean_target,
                    before.risk - constraints.risk_target);
      (*options.trace) << line;
    }
  }
  if (residual < options.gradient_tolerance) return as_grid_function(psi);
  throw convergence_error("solve_mfi: projected gradient stalled above tolerance",
                          residual);
}

double euler_lagrange_residual(const GridFunction& psi, double epsilon, double mu,
                               double m) {
  if (!(mu > 0.0)) throw domain_error("mu must be positive");
  const int n = psi.grid.count;
  if (n < 7) throw invalid_grid_error("residual needs at least 7 points");
  const double h = psi.grid.step();
  const double inv12h2 = 1.0 / (12.0 * h * h);
  double acc = 0.0;
  for (int j = 2; j < n - 2; ++j) {
    const complex second = (-psi.values[j - 2] + 16.0 * psi.values[j - 1] -
                            30.0 * psi.values[j] + 16.0 * psi.values[j + 1] -
                            psi.values[j + 2]) * inv12h2;
    const double t = psi.grid.point(j) - m;
    const complex r = -second / (2.0 * mu) +
                      (0.5 * mu * t * t - epsilon) * psi.values[j];
    acc += std::norm(r);
  }
  return std::sqrt(acc * h);
}

DiscreteOperator::DiscreteOperator(const Grid& grid_, double mu_, double m_)
    : grid(grid_), mu(mu_), m(m_) {
  grid.validate();
  if (!(mu > 0.0)) throw domain_error("mu must be positive");
  const int interior = grid.count - 2;
  const double h = grid.step();
  const double t = 1.0 / (2.0 * mu * h * h);

  std::vector<double> potential(interior);
  for (int i = 0; i < interior; ++i) {
    const double dx = grid.point(i + 1) - m;
    potential[i] = 0.5 * mu * dx * dx;
  }

  // Numerov pencil: A = -(1/2mu) Delta + B V, B = I + (h^2/12) Delta.
  // Bisection uses the symmetrized A (the dropped antisymmetric part has
  // no first-order eigenvalue shift, keeping eigenvalues 4th order); the
  // eigenvectors come from the plain operator, whose solutions track the
  // continuum to 4th order pointwise and are Euclidean-orthogonal because
  // B^{-1} Delta is symmetric (B and Delta share the Dirichlet sine basis).
  pencil.a_diag.resize(interior);
  pencil.b_diag.assign(interior, 5.0 / 6.0);
  pencil.a_off.resize(interior - 1);
  pencil.b_off.assign(interior - 1, 1.0 / 12.0);
  pencil.a_lower.resize(interior - 1);
  pencil.a_upper.resize(interior - 1);
  for (int i = 0; i < interior; ++i)
    pencil.a_diag[i] = 2.0 * t + (5.0 / 6.0) * potential[i];
  for (int i = 0; i + 1 < interior; ++i) {
    pencil.a_lower[i] = -t + potential[i] / 12.0;      // element (i+1, i)
    pencil.a_upper[i] = -t + potential[i + 1] / 12.0;  // element (i, i+1)
    pencil.a_off[i] = -t + (potential[i] + potential[i + 1]) / 24.0;
  }
}

std::vector<EigenPair> discrete_spectrum(const Grid& grid, double mu, double m,
                                         int count) {
  if (count < 1) throw domain_error("spectrum: count must be >= 1");
  const DiscreteOperator op(grid, mu, m);
  const int interior = op.pencil.size();
  if (count > interior / 4)
    throw domain_error("spectrum: count too large for the grid");

  const std::vector<double> eigenvalues = op.pencil.lowest_eigenvalues(count);
  const std::vector<double> weights = quadrature_weights(grid);

  std::vector<EigenPair> out;
  std::vector<std::vector<double>> previous;
  for (int k = 0; k < count; ++k) {
    std::vector<double> v = op.pencil.eigenvector(eigenvalues[k], previous);
    previous.push_back(v);

    std::vector<complex> full(grid.count, 0.0);
    for (int i = 0; i < interior; ++i) full[i + 1] = v[i];
    double mass = 0.0;
    for (int j = 0; j < grid.count; ++j) mass += weights[j] * std::norm(full[j]);
    const double scale = 1.0 / std::sqrt(mass);
    for (complex& value : full) value *= scale;

    // Sign convention: the outermost right lobe is positive, matching the
    // positive leading Hermite coefficient.
    double peak = 0.0;
    for (const complex& value : full) peak = std::max(peak, std::abs(value.real()));
    for (int j = grid.count - 1; j >= 0; --j) {
      if (std::abs(full[j].real()) >= 0.1 * peak) {
        if (full[j].real() < 0.0)
          for (complex& value : full) value = -value;
        break;
      }
    }

    out.push_back(EigenPair{eigenvalues[k], GridFunction{grid, std::move(full)}});
  }

  // Grid-coverage contract: the top state must have died out at the ends.
  const GridFunction& top = out.back().psi;
  const double edge_density = std::max(std::norm(top.values[1]),
                                       std::norm(top.values[grid.count - 2]));
  if (edge_density > 1e-8)
    throw domain_coverage_error("spectrum: grid too narrow for the requested states");
  return out;
}

double convexity_witness(const GridFunction& delta_psi) {
  const GridFunction d = spectral_derivative(delta_psi);
  std::vector<complex> integrand(d.values.size());
  for (size_t j = 0; j < integrand.size(); ++j) integrand[j] = std::norm(d.values[j]);
  return 4.0 * integrate_real(GridFunction{delta_psi.grid, std::move(integrand)});
}

}  // namespace mfi
