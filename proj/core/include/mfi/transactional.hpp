#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mfi/fisher.hpp"

namespace mfi {

struct EigenstateStrategy {
  int n = 0;
};

struct SuperpositionStrategy {
  double p = 1.0;
  double alpha = 0.0;
  int k_low = 0;
  int k_high = 2;
};

struct GibbsStrategy {
  double d = 1.0;
};

/// Tie-break order in reports: gibbs < superposition < eigenstate.
using StrategyKind =
    std::variant<GibbsStrategy, SuperpositionStrategy, EigenstateStrategy>;

struct StrategyDescriptor {
  StrategyKind kind;

  std::string label() const;   // "eigen", "super", "gibbs"
  std::string params() const;  // compact parameter string for reports
};

/// The mu that gives the strategy variance equal to `risk`:
///   eigenstate n      -> (2n+1)/(2r)
///   superposition     -> (p eps_low + (1-p) eps_high
///                         + cos(alpha) sqrt(p(1-p)) c_band) / r
///   gibbs             -> 1/(2 s r)
double mu_for_risk(const StrategyDescriptor& descriptor, double risk);

/// Fixed-risk eigenstate Fisher information (4/r) eps_n^2 = (2n+1)^2 / r.
double transactional_eigen_fisher(int n, double r);

/// Fixed-risk Fisher information of the (0,2) superposition:
/// (4/r)((p eps_0 + (1-p) eps_2)^2 - 2 cos^2(alpha) p (1-p)).
double transactional_superposition_fisher(double p, double alpha, double r);

struct TransactionalMinimum {
  double p_min = 1.0;
  double value = 0.0;
};

/// Minimum of the fixed-risk superposition Fisher information over
/// p in [0,1]; the vertex analysis puts it at p = 1 with value 1/r for
/// every alpha, confirmed against a grid search.
TransactionalMinimum transactional_minimum(double r);

/// How the superposition entry of a transactional report is evaluated:
/// at the caller's p (exhibits the 11-4 sqrt(6) disagreement) or at the
/// family's own minimizer p = 1.
enum class SuperpositionMode { caller_fixed, own_minimum };

struct OrderedStrategy {
  StrategyDescriptor descriptor;
  FisherReport report;
  /// Product of the dual risk-operator expectations,
  /// variance * (fisher/4); independent of mu.
  double cycle_risk = 0.0;
};

/// Strategies sorted ascending by Fisher information in the requested
/// image.  `common` is the shared mu (physical) or shared risk r
/// (transactional).  Ties break by kind order then parameters.
std::vector<OrderedStrategy> ordering_report(
    const std::vector<StrategyDescriptor>& descriptors, Image image,
    double common, SuperpositionMode mode = SuperpositionMode::caller_fixed);

}  // namespace mfi
