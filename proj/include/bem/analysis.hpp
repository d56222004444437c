#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bem/problems.hpp"
#include "bem/quadrature.hpp"
#include "bem/solver.hpp"

namespace bem {

/// Max and mean of absolute and relative errors. Relative statistics cover
/// only points whose exact value is at least relative_error_threshold in
/// magnitude; when every point is excluded they are reported as zero.
struct ErrorStats {
  double max_abs = 0.0;
  double max_rel = 0.0;
  double mean_abs = 0.0;
  double mean_rel = 0.0;
  std::size_t n_points = 0;
  std::size_t n_rel_excluded = 0;
};

/// Aggregate parallel arrays of absolute and (optional) relative errors.
ErrorStats summarize_errors(std::span<const double> abs_err, std::span<const std::optional<double>> rel_err);

ErrorStats error_stats(const FieldReport& report);

/// Statistics of |q_bem - q_exact| over the boundary nodes.
ErrorStats flux_error_stats(const BoundarySolution& solution, const TestProblem& problem);

/// Everything one solve-and-evaluate run produces.
struct PipelineResult {
  int boundary_nodes = 0;
  BoundarySolution solution;
  FieldReport report;
  ErrorStats interior;
  ErrorStats flux;
  double row_identity = 0.0;
  double wall_time_s = 0.0; // assembly + solve + interior evaluation
};

PipelineResult run_pipeline(const TestProblem& problem, int boundary_nodes, const InteriorGrid& grid,
                            const QuadratureRule& rule);

struct ConvergenceRow {
  int n = 0;
  std::optional<ErrorStats> stats; // empty when the row failed
  double wall_time_s = 0.0;
  std::string error;
};

/// One row per boundary resolution, sorted by n, all on the same m x m grid.
/// A failing row records its error and the study continues.
std::vector<ConvergenceRow> convergence_study(const TestProblem& problem, std::span<const int> n_list, int m,
                                              const QuadratureRule& rule);

/// log(e_i / e_{i+1}) / log(n_{i+1} / n_i) for consecutive successful rows of
/// max_abs; entry i pairs row i with row i + 1.
std::vector<std::optional<double>> empirical_orders(std::span<const ConvergenceRow> rows);

} // namespace bem
