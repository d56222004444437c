#include "bem/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "bem/assembly.hpp"
#include "bem/error.hpp"

namespace bem {

ErrorStats summarize_errors(std::span<const double> abs_err, std::span<const std::optional<double>> rel_err)
{
  if (abs_err.empty())
    throw Error(ErrorKind::EmptyInput, "error statistics need at least one point");
  if (abs_err.size() != rel_err.size())
    throw Error(ErrorKind::InvalidArgument, "absolute and relative error arrays differ in length");

  ErrorStats s;
  s.n_points = abs_err.size();
  double abs_sum = 0.0;
  double rel_sum = 0.0;
  std::size_t rel_count = 0;
  for (std::size_t i = 0; i < abs_err.size(); ++i) {
    s.max_abs = std::max(s.max_abs, abs_err[i]);
    abs_sum += abs_err[i];
    if (rel_err[i]) {
      s.max_rel = std::max(s.max_rel, *rel_err[i]);
      rel_sum += *rel_err[i];
      ++rel_count;
    }
  }
  s.mean_abs = abs_sum / static_cast<double>(s.n_points);
  s.mean_rel = rel_count > 0 ? rel_sum / static_cast<double>(rel_count) : 0.0;
  s.n_rel_excluded = s.n_points - rel_count;
  return s;
}

ErrorStats error_stats(const FieldReport& report)
{
  std::vector<double> abs_err(report.size());
  std::vector<std::optional<double>> rel_err(report.size());
  for (std::size_t i = 0; i < report.size(); ++i) {
    abs_err[i] = report.abs_err(i);
    rel_err[i] = report.rel_err(i);
  }
  return summarize_errors(abs_err, rel_err);
}

ErrorStats flux_error_stats(const BoundarySolution& solution, const TestProblem& problem)
{
  const auto nodes = solution.mesh.nodes();
  std::vector<double> abs_err(nodes.size());
  std::vector<std::optional<double>> rel_err(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double exact = problem.q(nodes[i]);
    abs_err[i] = std::abs(solution.q_nodes[i] - exact);
    if (std::abs(exact) >= relative_error_threshold)
      rel_err[i] = abs_err[i] / std::abs(exact);
  }
  return summarize_errors(abs_err, rel_err);
}

namespace {

double round_to_ms(double seconds) { return std::round(seconds * 1000.0) / 1000.0; }

} // namespace

PipelineResult run_pipeline(const TestProblem& problem, int boundary_nodes, const InteriorGrid& grid,
                            const QuadratureRule& rule)
{
  const auto start = std::chrono::steady_clock::now();

  const BoundaryMesh mesh = discretize_circle(boundary_nodes);
  const BemSystem system = assemble(mesh, problem, rule);
  BoundarySolution solution = solve_flux(system);
  FieldReport report = evaluate_field(solution, grid, problem, rule);

  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  PipelineResult result{boundary_nodes, std::move(solution), std::move(report), {}, {},
                        row_identity_residual(system), round_to_ms(elapsed.count())};
  result.interior = error_stats(result.report);
  result.flux = flux_error_stats(result.solution, problem);
  return result;
}

std::vector<ConvergenceRow> convergence_study(const TestProblem& problem, std::span<const int> n_list, int m,
                                              const QuadratureRule& rule)
{
  const InteriorGrid grid = interior_grid(m);
  std::vector<int> ns(n_list.begin(), n_list.end());
  std::sort(ns.begin(), ns.end());

  std::vector<ConvergenceRow> rows;
  rows.reserve(ns.size());
  for (int n : ns) {
    ConvergenceRow row;
    row.n = n;
    try {
      const PipelineResult r = run_pipeline(problem, n, grid, rule);
      row.stats = r.interior;
      row.wall_time_s = r.wall_time_s;
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::optional<double>> empirical_orders(std::span<const ConvergenceRow> rows)
{
  std::vector<std::optional<double>> orders;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const ConvergenceRow& a = rows[i];
    const ConvergenceRow& b = rows[i + 1];
    if (a.stats && b.stats && a.stats->max_abs > 0.0 && b.stats->max_abs > 0.0 && b.n != a.n)
      orders.push_back(std::log(a.stats->max_abs / b.stats->max_abs)
                       / std::log(static_cast<double>(b.n) / a.n));
    else
      orders.push_back(std::nullopt);
  }
  return orders;
}

} // namespace bem
