#include "mfi/fisher.hpp"

#include <cmath>
#include <cstdio>

namespace mfi {

const char* to_string(Image image) {
  return image == Image::physical ? "physical" : "transactional";
}

std::string FisherReport::csv_header() {
  return "fisher,mean,variance,cramer_rao_product,image";
}

namespace {

std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void require_real_density(const GridFunction& f) {
  if (!f.effectively_real())
    throw invalid_density_error("density must be real");
  for (const complex& v : f.values)
    if (v.real() < -1e-12)
      throw invalid_density_error("density has negative values below -1e-12");
}

void require_unit_mass(double mass, const char* what) {
  if (std::abs(mass - 1.0) > 1e-6)
    throw normalization_error(std::string(what) + " is not normalized: mass " +
                              format17(mass));
}

}  // namespace

std::string FisherReport::csv_row() const {
  return format17(fisher) + "," + format17(mean) + "," + format17(variance) + "," +
         format17(cramer_rao_product) + "," + to_string(image);
}

double fisher_of_density(const GridFunction& f, double floor) {
  require_real_density(f);
  require_unit_mass(integrate_real(f), "density");
  const GridFunction df = spectral_derivative(f);
  std::vector<complex> integrand(f.values.size());
  for (size_t j = 0; j < integrand.size(); ++j) {
    const double fj = f.values[j].real();
    // Points under the floor are removable 0/0 spots (nodes) or tail
    // noise; both carry negligible mass.
    integrand[j] = fj < floor ? 0.0 : df.values[j].real() * df.values[j].real() / fj;
  }
  return integrate_real(GridFunction{f.grid, std::move(integrand)});
}

double fisher_of_amplitude(const GridFunction& psi) {
  require_unit_mass(integrate_real(density_of(psi)), "amplitude");
  const GridFunction dpsi = spectral_derivative(psi);
  std::vector<complex> integrand(psi.values.size());
  for (size_t j = 0; j < integrand.size(); ++j)
    integrand[j] = std::norm(dpsi.values[j]);
  return 4.0 * integrate_real(GridFunction{psi.grid, std::move(integrand)});
}

double closed_form_eigen_fisher(int n, double mu) {
  if (n < 0) throw domain_error("eigen index must be >= 0");
  if (!(mu > 0.0)) throw domain_error("mu must be positive");
  return (4.0 * n + 2.0) * mu;
}

Moments moments(const GridFunction& f) {
  require_real_density(f);
  const std::vector<double> w = quadrature_weights(f.grid);
  double norm = 0.0, first = 0.0;
  for (int j = 0; j < f.grid.count; ++j) {
    const double fj = f.values[j].real();
    norm += w[j] * fj;
    first += w[j] * f.grid.point(j) * fj;
  }
  const double mean = first / norm;
  double second = 0.0;
  for (int j = 0; j < f.grid.count; ++j) {
    const double dx = f.grid.point(j) - mean;
    second += w[j] * dx * dx * f.values[j].real();
  }
  return Moments{norm, mean, second / norm};
}

namespace {

// Shared band structure of the Lemma matrices: diagonal 2 eps_j plus the
// |j-k| = 2 band min sqrt((r+1)(r+2)) with sign `band_sign`, all times
// `scale`.
SymMatrix lemma_matrix(int n_max, double scale, double band_sign) {
  if (n_max < 0) throw domain_error("matrix order must be >= 0");
  SymMatrix m(n_max + 1);
  for (int j = 0; j <= n_max; ++j) {
    m.at(j, j) = scale * (2.0 * j + 1.0);
    if (j + 2 <= n_max) {
      const double band = std::sqrt((j + 1.0) * (j + 2.0));
      m.at(j, j + 2) = m.at(j + 2, j) = scale * band_sign * band;
    }
  }
  return m;
}

}  // namespace

SymMatrix risk_matrix_v(int n_max, double mu) {
  if (!(mu > 0.0)) throw domain_error("mu must be positive");
  return lemma_matrix(n_max, 1.0 / (2.0 * mu), +1.0);
}

SymMatrix gradient_matrix_w(int n_max, double mu) {
  if (!(mu > 0.0)) throw domain_error("mu must be positive");
  return lemma_matrix(n_max, 2.0 * mu, -1.0);
}

double cramer_rao_product(const GridFunction& psi) {
  const double fisher = fisher_of_amplitude(psi);
  const Moments mom = moments(density_of(psi));
  return fisher * mom.variance;
}

}  // namespace mfi
