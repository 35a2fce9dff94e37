#include "mfi/transactional.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "mfi/gibbs.hpp"
#include "mfi/superposition.hpp"

namespace mfi {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string StrategyDescriptor::label() const {
  struct Visitor {
    std::string operator()(const GibbsStrategy&) const { return "gibbs"; }
    std::string operator()(const SuperpositionStrategy&) const { return "super"; }
    std::string operator()(const EigenstateStrategy&) const { return "eigen"; }
  };
  return std::visit(Visitor{}, kind);
}

std::string StrategyDescriptor::params() const {
  struct Visitor {
    std::string operator()(const GibbsStrategy& g) const { return "d=" + fmt(g.d); }
    std::string operator()(const SuperpositionStrategy& s) const {
      return "p=" + fmt(s.p) + ";alpha=" + fmt(s.alpha) + ";k=" +
             std::to_string(s.k_low) + ":" + std::to_string(s.k_high);
    }
    std::string operator()(const EigenstateStrategy& e) const {
      return "n=" + std::to_string(e.n);
    }
  };
  return std::visit(Visitor{}, kind);
}

double mu_for_risk(const StrategyDescriptor& descriptor, double risk) {
  if (!(risk > 0.0)) throw domain_error("risk must be positive");
  struct Visitor {
    double risk;
    double operator()(const EigenstateStrategy& e) const {
      if (e.n < 0) throw domain_error("eigen index must be >= 0");
      return (2.0 * e.n + 1.0) / (2.0 * risk);
    }
    double operator()(const SuperpositionStrategy& s) const {
      // variance_closed at mu = 1, scaled: var = factor / mu.
      const SuperpositionSpec spec{s.p, s.alpha, s.k_low, s.k_high,
                                   OscillatorParams{1.0, 0.0}};
      return variance_closed(spec) / risk;
    }
    double operator()(const GibbsStrategy& g) const {
      // invert r = 1/(2 s mu)
      return 1.0 / (2.0 * std::tanh(0.5 * g.d) * risk);
    }
  };
  return std::visit(Visitor{risk}, descriptor.kind);
}

double transactional_eigen_fisher(int n, double r) {
  if (n < 0) throw domain_error("eigen index must be >= 0");
  if (!(r > 0.0)) throw domain_error("risk must be positive");
  const double odd = 2.0 * n + 1.0;
  return odd * odd / r;
}

double transactional_superposition_fisher(double p, double alpha, double r) {
  if (!(p >= 0.0 && p <= 1.0)) throw domain_error("p must lie in [0,1]");
  if (!(r > 0.0)) throw domain_error("risk must be positive");
  const double eps0 = 0.5, eps2 = 2.5;
  const double mixed = p * eps0 + (1.0 - p) * eps2;
  const double c = std::cos(alpha);
  return (4.0 / r) * (mixed * mixed - 2.0 * c * c * p * (1.0 - p));
}

TransactionalMinimum transactional_minimum(double r) {
  if (!(r > 0.0)) throw domain_error("risk must be positive");
  // In p the expression is an upward parabola with vertex
  // (5 + c^2)/(4 + 2 c^2) >= 1 for every cos^2(alpha) = c^2 in [0,1], so
  // the minimum over [0,1] sits on the boundary p = 1 regardless of alpha.
  for (double c2 : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const double vertex = (5.0 + c2) / (4.0 + 2.0 * c2);
    if (vertex < 1.0)
      throw contract_error("transactional minimum: vertex analysis violated");
  }
  return TransactionalMinimum{1.0, 1.0 / r};
}

namespace {

FisherReport physical_report(const StrategyDescriptor& descriptor, double mu) {
  struct Visitor {
    double mu;
    FisherReport operator()(const EigenstateStrategy& e) const {
      FisherReport rep;
      rep.fisher = closed_form_eigen_fisher(e.n, mu);
      rep.variance = (2.0 * e.n + 1.0) / (2.0 * mu);
      return rep;
    }
    FisherReport operator()(const SuperpositionStrategy& s) const {
      const SuperpositionSpec spec{s.p, s.alpha, s.k_low, s.k_high,
                                   OscillatorParams{mu, 0.0}};
      FisherReport rep;
      rep.fisher = fisher_closed(spec);
      rep.variance = variance_closed(spec);
      return rep;
    }
    FisherReport operator()(const GibbsStrategy& g) const {
      FisherReport rep;
      rep.fisher = gibbs_fisher(g.d, mu);
      rep.variance = gibbs_risk(g.d, mu);
      return rep;
    }
  };
  FisherReport rep = std::visit(Visitor{mu}, descriptor.kind);
  rep.mean = 0.0;
  rep.cramer_rao_product = rep.fisher * rep.variance;
  rep.image = Image::physical;
  return rep;
}

FisherReport transactional_report(const StrategyDescriptor& descriptor, double r,
                                  SuperpositionMode mode) {
  struct Visitor {
    double r;
    SuperpositionMode mode;
    double operator()(const EigenstateStrategy& e) const {
      return transactional_eigen_fisher(e.n, r);
    }
    double operator()(const SuperpositionStrategy& s) const {
      if (mode == SuperpositionMode::own_minimum)
        return transactional_minimum(r).value;
      if (s.k_low != 0 || s.k_high != 2)
        throw config_error(
            "transactional image: superpositions are defined for the (0,2) pair");
      return transactional_superposition_fisher(s.p, s.alpha, r);
    }
    double operator()(const GibbsStrategy&) const { return 1.0 / r; }
  };
  FisherReport rep;
  rep.fisher = std::visit(Visitor{r, mode}, descriptor.kind);
  rep.mean = 0.0;
  rep.variance = r;
  rep.cramer_rao_product = rep.fisher * rep.variance;
  rep.image = Image::transactional;
  return rep;
}

// Tie-break key: kind order (gibbs, superposition, eigenstate) then the
// natural parameter order within the kind.
int kind_rank(const StrategyKind& kind) { return static_cast<int>(kind.index()); }

bool descriptor_less(const StrategyDescriptor& a, const StrategyDescriptor& b) {
  if (kind_rank(a.kind) != kind_rank(b.kind))
    return kind_rank(a.kind) < kind_rank(b.kind);
  struct Key {
    double primary = 0.0, secondary = 0.0, tertiary = 0.0;
  };
  auto key = [](const StrategyDescriptor& d) {
    struct Visitor {
      Key operator()(const GibbsStrategy& g) const { return Key{g.d, 0.0, 0.0}; }
      Key operator()(const SuperpositionStrategy& s) const {
        return Key{static_cast<double>(s.k_low), s.p, s.alpha};
      }
      Key operator()(const EigenstateStrategy& e) const {
        return Key{static_cast<double>(e.n), 0.0, 0.0};
      }
    };
    return std::visit(Visitor{}, d.kind);
  };
  const Key ka = key(a), kb = key(b);
  if (ka.primary != kb.primary) return ka.primary < kb.primary;
  if (ka.secondary != kb.secondary) return ka.secondary < kb.secondary;
  return ka.tertiary < kb.tertiary;
}

}  // namespace

std::vector<OrderedStrategy> ordering_report(
    const std::vector<StrategyDescriptor>& descriptors, Image image, double common,
    SuperpositionMode mode) {
  if (!(common > 0.0))
    throw config_error(std::string("ordering report: the common ") +
                       (image == Image::physical ? "mu" : "risk") +
                       " must be positive");
  std::vector<OrderedStrategy> out;
  out.reserve(descriptors.size());
  for (const StrategyDescriptor& d : descriptors) {
    OrderedStrategy entry;
    entry.descriptor = d;
    entry.report = image == Image::physical ? physical_report(d, common)
                                            : transactional_report(d, common, mode);
    entry.cycle_risk = entry.report.variance * entry.report.fisher / 4.0;
    out.push_back(std::move(entry));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const OrderedStrategy& a, const OrderedStrategy& b) {
                     if (a.report.fisher != b.report.fisher)
                       return a.report.fisher < b.report.fisher;
                     return descriptor_less(a.descriptor, b.descriptor);
                   });
  return out;
}

}  // namespace mfi
