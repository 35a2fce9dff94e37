// mfi: Fisher information of oscillator strategies from the command line.
//
// Exit codes: 0 success, 2 invalid arguments or malformed input files,
// 3 numerical contract violation, 4 unwritable output path,
// 5 solver convergence failure.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "mfi/fisher.hpp"
#include "mfi/gibbs.hpp"
#include "mfi/oscillator.hpp"
#include "mfi/strategy_file.hpp"
#include "mfi/superposition.hpp"
#include "mfi/transactional.hpp"
#include "mfi/variational.hpp"
#include "output.hpp"
#include "svg_plot.hpp"

namespace {

using namespace mfi;
using cli::Format;
using cli::format17;
using cli::OutputTable;

struct CommonOptions {
  std::string out;
  std::string format = "table";
  int grid_count = 0;      // 0: library default (MFI_GRID_COUNT or 4096)
  double half_width = 0.0; // 0: derived from the state

  Format parsed_format() const {
    if (format == "csv") return Format::csv;
    if (format == "json") return Format::json;
    if (format == "table") return Format::table;
    throw domain_error("unknown format: " + format);
  }
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--out", common.out, "Write the result to this path instead of stdout");
  cmd->add_option("--format", common.format, "Output format: csv, table or json")
      ->check(CLI::IsMember({"csv", "table", "json"}));
  cmd->add_option("--grid-count", common.grid_count,
                  "Grid sample count (default 4096, env MFI_GRID_COUNT)");
  cmd->add_option("--half-width", common.half_width,
                  "Override the automatic grid half-width");
}

Grid grid_for(const OscillatorParams& params, int n_max, const CommonOptions& common) {
  Grid grid = default_grid_for(params, n_max,
                               common.grid_count > 0 ? common.grid_count : 0);
  if (common.half_width > 0.0) {
    grid = Grid::centered(params.m, common.half_width, grid.count);
    grid.validate();
  }
  return grid;
}

int run_eigen(int n, double mu, double m, const std::string& samples_path,
              const CommonOptions& common) {
  const OscillatorParams params{mu, m};
  const Grid grid = grid_for(params, n, common);
  const GridFunction psi = eigenstate_on_grid(n, params, grid);

  const double closed = closed_form_eigen_fisher(n, mu);
  const double quadrature = fisher_of_amplitude(psi);
  const Moments mom = moments(density_of(psi));
  const double product = quadrature * mom.variance;

  if (std::abs(quadrature - closed) > 1e-6 * closed)
    throw contract_error("quadrature Fisher information drifted from (4n+2) mu: " +
                         format17(quadrature) + " vs " + format17(closed));
  if (product < 1.0 - 1e-9)
    throw contract_error("Cramer-Rao product fell below 1: " + format17(product));

  OutputTable table;
  table.columns = {{"n"}, {"mu"}, {"fisher_closed"}, {"fisher_quadrature"},
                   {"mean"}, {"variance"}, {"cramer_rao_product"}, {"image", false}};
  auto& row = table.add_row();
  row = {std::to_string(n), format17(mu), format17(closed), format17(quadrature),
         format17(mom.mean), format17(mom.variance), format17(product),
         to_string(Image::physical)};
  cli::write_output(common.out, table, common.parsed_format());

  if (!samples_path.empty()) {
    OutputTable samples;
    samples.columns = {{"x"}, {"psi"}};
    for (int j = 0; j < grid.count; ++j) {
      auto& sample_row = samples.add_row();
      sample_row = {format17(grid.point(j)), format17(psi.values[j].real())};
    }
    cli::write_output(samples_path, samples, Format::csv);
  }
  return 0;
}

int run_figure1(double mu, int p_count, const std::string& svg_path,
                const CommonOptions& common) {
  const std::vector<Figure1Row> rows = figure1_scan(mu, p_count);

  OutputTable table;
  table.columns = {{"p"}, {"IF_alpha0_over_4mu"}, {"IF_alphahalfpi_over_4mu"}};
  for (const Figure1Row& r : rows) {
    auto& row = table.add_row();
    row = {format17(r.p), format17(r.fisher_alpha0_over_4mu),
           format17(r.fisher_alpha_half_pi_over_4mu)};
  }
  cli::write_output(common.out, table, common.parsed_format());

  if (!svg_path.empty()) {
    cli::Series lower{"alpha = 0", "#1f77b4", {}, {}};
    cli::Series upper{"alpha = pi/2", "#d62728", {}, {}};
    for (const Figure1Row& r : rows) {
      lower.x.push_back(r.p);
      lower.y.push_back(r.fisher_alpha0_over_4mu);
      upper.x.push_back(r.p);
      upper.y.push_back(r.fisher_alpha_half_pi_over_4mu);
    }
    cli::write_svg_chart(svg_path, "Fisher information of the (0,2) superposition in units 4 mu",
                         {lower, upper});
  }
  return 0;
}

int run_gibbs(std::vector<double> d_values, double beta, double mu,
              const CommonOptions& common) {
  if (beta > 0.0) d_values.push_back(4.0 * beta * mu);
  if (d_values.empty())
    throw domain_error("gibbs: provide at least one --d (or --beta)");

  OutputTable table;
  table.columns = {{"d"}, {"s"}, {"IFG"}, {"rG"}, {"product"}};
  for (double d : d_values) {
    const GibbsEnsemble ensemble(d, GibbsEnsemble::truncation_for_tail(d, 1e-12),
                                 OscillatorParams{mu, 0.0});
    auto& row = table.add_row();
    row = {format17(d), format17(ensemble.s), format17(gibbs_fisher(d, mu)),
           format17(gibbs_risk(d, mu)), format17(gibbs_fisher_risk_product())};
  }
  cli::write_output(common.out, table, common.parsed_format());
  return 0;
}

int run_order(const std::string& spec_path, const std::string& image_name,
              double mu, double risk, bool super_at_own_minimum,
              const CommonOptions& common) {
  const Image image =
      image_name == "physical" ? Image::physical : Image::transactional;
  double common_value = 0.0;
  if (image == Image::physical) {
    if (!(mu > 0.0)) throw config_error("physical image requires a common --mu");
    common_value = mu;
  } else {
    if (!(risk > 0.0)) throw config_error("transactional image requires a common --risk");
    common_value = risk;
  }

  const std::vector<StrategyDescriptor> descriptors = parse_strategy_file(spec_path);
  const auto report = ordering_report(
      descriptors, image, common_value,
      super_at_own_minimum ? SuperpositionMode::own_minimum
                           : SuperpositionMode::caller_fixed);

  OutputTable table;
  table.columns = {{"kind", false}, {"params", false}, {"image", false},
                   {"mu_or_r"}, {"fisher"}, {"risk"}, {"product"}, {"cycle_risk"}};
  for (const OrderedStrategy& entry : report) {
    auto& row = table.add_row();
    row = {entry.descriptor.label(), entry.descriptor.params(),
           to_string(entry.report.image), format17(common_value),
           format17(entry.report.fisher), format17(entry.report.variance),
           format17(entry.report.cramer_rao_product), format17(entry.cycle_risk)};
  }
  cli::write_output(common.out, table, common.parsed_format());
  return 0;
}

int run_solve(double risk, double mean, std::uint64_t seed, int count,
              double tolerance, int max_iterations, const std::string& trace_path,
              const CommonOptions& common) {
  const double mu_eff = 1.0 / (2.0 * risk);
  const OscillatorParams params{mu_eff, mean};
  const Grid grid = grid_for(params, 0, common);

  SolveOptions options;
  options.gradient_tolerance = tolerance;
  options.max_iterations = max_iterations;
  std::ofstream trace;
  if (!trace_path.empty()) {
    trace.open(trace_path);
    if (!trace) throw cli::io_failure("cannot open trace path: " + trace_path);
    trace << "iter,fisher,norm_residual,mean_residual,risk_residual\n";
    options.trace = &trace;
  }

  const ConstraintSet constraints{1.0, mean, risk};
  const GridFunction psi = solve_mfi(constraints, grid, seed, options);

  const double fisher = fisher_of_amplitude(psi);
  const Moments mom = moments(density_of(psi));
  const GridFunction reference = eigenstate_on_grid(0, params, grid);
  const std::vector<double> weights = quadrature_weights(grid);
  double overlap = 0.0;
  for (int j = 0; j < grid.count; ++j)
    overlap += weights[j] * psi.values[j].real() * reference.values[j].real();

  const auto spectrum = discrete_spectrum(grid, mu_eff, mean, count);

  OutputTable table;
  table.columns = {{"risk"}, {"mean"}, {"seed"}, {"fisher"}, {"variance"},
                   {"cramer_rao_product"}, {"overlap_ground"}, {"image", false}};
  for (int k = 0; k < count; ++k)
    table.columns.push_back({"eps" + std::to_string(k)});
  auto& row = table.add_row();
  row = {format17(risk), format17(mom.mean), std::to_string(seed), format17(fisher),
         format17(mom.variance), format17(fisher * mom.variance),
         format17(std::abs(overlap)), to_string(Image::physical)};
  for (const EigenPair& pair : spectrum) row.push_back(format17(pair.epsilon));
  cli::write_output(common.out, table, common.parsed_format());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fisher information of harmonic-oscillator market strategies"};
  app.require_subcommand(1);

  CommonOptions common;

  // eigen
  auto* eigen_cmd = app.add_subcommand("eigen", "Eigenstate Fisher report");
  int eigen_n = 0;
  double eigen_mu = 1.0, eigen_m = 0.0;
  std::string samples_path;
  eigen_cmd->add_option("--n", eigen_n, "Eigenstate index")->required()
      ->check(CLI::Range(0, kMaxEigenIndex));
  eigen_cmd->add_option("--mu", eigen_mu, "Oscillator scale mu")
      ->check(CLI::PositiveNumber);
  eigen_cmd->add_option("--m", eigen_m, "Center (mean log-price)");
  eigen_cmd->add_option("--samples", samples_path, "Write sampled psi_n as CSV");
  add_common(eigen_cmd, common);

  // figure1
  auto* figure_cmd = app.add_subcommand("figure1", "Interference scan of the (0,2) pair");
  double figure_mu = 1.0;
  int p_count = 401;
  std::string svg_path;
  figure_cmd->add_option("--mu", figure_mu, "Oscillator scale mu")
      ->check(CLI::PositiveNumber);
  figure_cmd->add_option("--p-count", p_count, "Number of p samples")
      ->check(CLI::Range(2, 100000000));
  figure_cmd->add_option("--svg", svg_path, "Also write an SVG chart");
  add_common(figure_cmd, common);

  // gibbs
  auto* gibbs_cmd = app.add_subcommand("gibbs", "Gibbs ensemble sweep");
  std::vector<double> d_values;
  double beta = 0.0, gibbs_mu = 1.0;
  gibbs_cmd->add_option("--d", d_values, "Inverse-temperature-like parameter (repeatable)")
      ->check(CLI::PositiveNumber);
  gibbs_cmd->add_option("--beta", beta, "Lagrange multiplier beta; d = 4 beta mu")
      ->check(CLI::PositiveNumber);
  gibbs_cmd->add_option("--mu", gibbs_mu, "Oscillator scale mu")
      ->check(CLI::PositiveNumber);
  add_common(gibbs_cmd, common);

  // order
  auto* order_cmd = app.add_subcommand("order", "Rank strategies from a spec file");
  std::string spec_path, image_name = "physical";
  double order_mu = 0.0, order_risk = 0.0;
  bool super_own = false;
  order_cmd->add_option("--spec", spec_path, "Strategy list file")->required();
  order_cmd->add_option("--image", image_name, "physical or transactional")
      ->check(CLI::IsMember({"physical", "transactional"}));
  order_cmd->add_option("--mu", order_mu, "Common mu (physical image)");
  order_cmd->add_option("--risk", order_risk, "Common risk (transactional image)");
  order_cmd->add_flag("--super-at-own-minimum", super_own,
                      "Evaluate superpositions at their own fixed-risk minimizer p = 1");
  add_common(order_cmd, common);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Constrained minimization of the Fisher functional");
  double solve_risk = 0.5, solve_mean = 0.0, solve_tol = 1e-8;
  std::uint64_t solve_seed = 0;
  int solve_count = 6, solve_max_iter = 50000;
  std::string trace_path;
  solve_cmd->add_option("--risk", solve_risk, "Risk (variance) constraint")->required()
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--mean", solve_mean, "Mean constraint");
  solve_cmd->add_option("--seed", solve_seed, "Seed of the randomized initial bump");
  solve_cmd->add_option("--count", solve_count, "Number of discrete eigenvalues to report")
      ->check(CLI::Range(1, 64));
  solve_cmd->add_option("--tol", solve_tol, "Projected-gradient tolerance")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--max-iter", solve_max_iter, "Iteration budget")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--trace", trace_path, "Write the iteration trace CSV here");
  add_common(solve_cmd, common);

  try {
    app.parse(argc, argv);
    if (eigen_cmd->parsed())
      return run_eigen(eigen_n, eigen_mu, eigen_m, samples_path, common);
    if (figure_cmd->parsed())
      return run_figure1(figure_mu, p_count, svg_path, common);
    if (gibbs_cmd->parsed())
      return run_gibbs(d_values, beta, gibbs_mu, common);
    if (order_cmd->parsed())
      return run_order(spec_path, image_name, order_mu, order_risk, super_own, common);
    if (solve_cmd->parsed())
      return run_solve(solve_risk, solve_mean, solve_seed, solve_count, solve_tol,
                       solve_max_iter, trace_path, common);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const cli::io_failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const convergence_error& e) {
    std::cerr << "error: " << e.what() << " (residual " << format17(e.residual())
              << ")\n";
    return 5;
  } catch (const contract_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const invalid_grid_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
