#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "bem/analysis.hpp"

namespace bem::cli {

enum class Mode { Solve, Convergence };

struct RunConfig {
  int problem_id = 1;
  int boundary_nodes = 30;
  int interior_grid = 11;
  int quad_order = 8;
  Mode mode = Mode::Solve;
  std::vector<int> n_list;
  std::filesystem::path output_dir = "./out";
};

/// Throws Error(InvalidArgument) on out-of-range fields.
void validate(const RunConfig& config);

/// Machine-readable summary of a run. `convergence` is only consulted in
/// convergence mode.
nlohmann::json report_json(const RunConfig& config, const TestProblem& problem, const PipelineResult& result,
                           const std::vector<ConvergenceRow>& convergence);

/// Runs the configured pipeline and writes boundary_flux.csv, interior.csv,
/// report.json (and convergence.csv in convergence mode) into output_dir.
/// Returns 0 on success, 1 on any solver error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses flags and dispatches to run(). Usage errors return 2 before any
/// file is written.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace bem::cli
