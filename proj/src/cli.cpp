#include "bem/cli.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bem/error.hpp"
#include "bem/output.hpp"

namespace bem::cli {

namespace {

std::string_view mode_name(Mode mode) { return mode == Mode::Solve ? "solve" : "convergence"; }

nlohmann::json stats_json(const ErrorStats& s)
{
  return {{"max_abs", s.max_abs},     {"max_rel", s.max_rel},   {"mean_abs", s.mean_abs},
          {"mean_rel", s.mean_rel},   {"n_points", s.n_points}, {"n_rel_excluded", s.n_rel_excluded}};
}

int largest_n(const RunConfig& config)
{
  int n = 0;
  for (int v : config.n_list)
    n = std::max(n, v);
  return n;
}

} // namespace

void validate(const RunConfig& config)
{
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::InvalidArgument, msg); };
  if (config.problem_id < 1 || config.problem_id > problem_count)
    fail("--problem must be in 1..5");
  if (config.interior_grid < 2)
    fail("--interior-grid must be >= 2");
  if (config.quad_order < 1 || config.quad_order > QuadratureRule::max_order)
    fail("--quad-order must be in 1..64");
  if (config.mode == Mode::Solve && config.boundary_nodes < 3)
    fail("--boundary-nodes must be >= 3");
  if (config.mode == Mode::Convergence) {
    if (config.n_list.empty())
      fail("--n-list is required in convergence mode");
    for (int n : config.n_list)
      if (n < 3)
        fail("every --n-list entry must be >= 3");
  }
}

nlohmann::json report_json(const RunConfig& config, const TestProblem& problem, const PipelineResult& result,
                           const std::vector<ConvergenceRow>& convergence)
{
  nlohmann::json j;
  j["config"] = {{"problem", config.problem_id},
                 {"boundary_nodes", config.boundary_nodes},
                 {"interior_grid", config.interior_grid},
                 {"quad_order", config.quad_order},
                 {"mode", mode_name(config.mode)},
                 {"n_list", config.n_list},
                 {"output_dir", config.output_dir.string()}};
  j["problem"] = {{"id", problem.id}, {"expression", problem.expression}};
  j["boundary_nodes"] = result.boundary_nodes;

  nlohmann::json rows = nlohmann::json::array();
  nlohmann::json near = nlohmann::json::array();
  const FieldReport& report = result.report;
  for (std::size_t i = 0; i < report.size(); ++i) {
    const auto rel = report.rel_err(i);
    rows.push_back({{"k", i + 1},
                    {"x", report.point(i).x},
                    {"y", report.point(i).y},
                    {"u_bem", report.u_bem(i)},
                    {"u_exact", report.u_exact(i)},
                    {"abs_err", report.abs_err(i)},
                    {"rel_err", rel ? nlohmann::json(*rel) : nlohmann::json(nullptr)},
                    {"near_boundary", report.near_boundary(i)}});
    if (report.near_boundary(i))
      near.push_back(i + 1);
  }
  j["interior"] = {{"stats", stats_json(result.interior)}, {"rows", rows}};
  j["flux"] = {{"stats", stats_json(result.flux)}};
  j["n_rel_excluded"] = result.interior.n_rel_excluded;
  j["near_boundary"] = {{"count", near.size()}, {"points", near}};
  j["solve"] = {{"smallest_pivot", result.solution.smallest_pivot},
                {"relative_residual", result.solution.relative_residual},
                {"row_identity_residual", result.row_identity}};
  j["wall_time_s"] = result.wall_time_s;

  if (config.mode == Mode::Convergence) {
    nlohmann::json table = nlohmann::json::array();
    const auto orders = empirical_orders(convergence);
    for (std::size_t i = 0; i < convergence.size(); ++i) {
      const ConvergenceRow& row = convergence[i];
      nlohmann::json entry = {{"n", row.n}, {"wall_time_s", row.wall_time_s}};
      entry["stats"] = row.stats ? stats_json(*row.stats) : nlohmann::json(nullptr);
      if (!row.error.empty())
        entry["error"] = row.error;
      entry["empirical_order"] = i < orders.size() && orders[i] ? nlohmann::json(*orders[i]) : nlohmann::json(nullptr);
      table.push_back(std::move(entry));
    }
    j["convergence"] = std::move(table);
  }
  return j;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
  try {
    validate(config);
    const TestProblem problem = get_problem(config.problem_id);
    const QuadratureRule rule = gauss_legendre(config.quad_order);
    const InteriorGrid grid = interior_grid(config.interior_grid);

    std::vector<ConvergenceRow> convergence;
    bool rows_failed = false;
    if (config.mode == Mode::Convergence) {
      convergence = convergence_study(problem, config.n_list, config.interior_grid, rule);
      for (const ConvergenceRow& row : convergence) {
        if (!row.error.empty()) {
          err << "n = " << row.n << ": " << row.error << '\n';
          rows_failed = true;
        }
      }
    }

    // Detailed tables come from the finest resolution in convergence mode.
    const int n = config.mode == Mode::Convergence ? largest_n(config) : config.boundary_nodes;
    const PipelineResult result = run_pipeline(problem, n, grid, rule);

    std::filesystem::create_directories(config.output_dir);
    write_file_atomic(config.output_dir / "boundary_flux.csv", boundary_flux_csv(result.solution, problem));
    write_file_atomic(config.output_dir / "interior.csv", interior_csv(result.report));
    if (config.mode == Mode::Convergence)
      write_file_atomic(config.output_dir / "convergence.csv", convergence_csv(convergence));
    write_file_atomic(config.output_dir / "report.json",
                      report_json(config, problem, result, convergence).dump(2) + "\n");

    if (const std::size_t near = result.report.near_boundary_count(); near > 0)
      err << "warning: " << near << " interior points lie within half an element of the boundary\n";

    const ErrorStats& s = result.interior;
    out << "problem " << problem.id << " (" << problem.expression << "), n = " << n << ", "
        << result.report.size() << " interior points\n";
    out << std::setprecision(6) << "  max abs error   " << s.max_abs << "\n  max rel error   " << s.max_rel
        << "\n  mean abs error  " << s.mean_abs << "\n  mean rel error  " << s.mean_rel << '\n';
    out << std::setprecision(3) << std::fixed << "  wall time       " << result.wall_time_s << " s\n"
        << std::defaultfloat;
    if (config.mode == Mode::Convergence) {
      const auto orders = empirical_orders(convergence);
      for (std::size_t i = 0; i < convergence.size(); ++i) {
        const ConvergenceRow& row = convergence[i];
        out << "  n = " << std::setw(5) << row.n;
        if (row.stats)
          out << "  max_abs " << std::setprecision(6) << row.stats->max_abs;
        else
          out << "  failed";
        if (i < orders.size() && orders[i])
          out << "  order " << std::setprecision(3) << *orders[i];
        out << '\n';
      }
    }
    return rows_failed ? 1 : 0;
  } catch (const SolveError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Boundary element solver for the Dirichlet problem for Laplace's equation on the unit disk"};
  RunConfig config;
  std::string mode = "solve";
  std::string output_dir = config.output_dir.string();

  app.add_option("--problem", config.problem_id, "Exact test solution, 1..5")->required()->check(CLI::Range(1, 5));
  auto* nodes = app.add_option("--boundary-nodes", config.boundary_nodes, "Number of boundary nodes n")
                    ->check(CLI::Range(3, 1 << 20));
  app.add_option("--interior-grid", config.interior_grid, "Nodes per axis m of the interior grid")
      ->check(CLI::Range(2, 1 << 20))
      ->capture_default_str();
  app.add_option("--quad-order", config.quad_order, "Gauss-Legendre points per element")
      ->check(CLI::Range(1, QuadratureRule::max_order))
      ->capture_default_str();
  app.add_option("--mode", mode, "solve or convergence")
      ->check(CLI::IsMember({"solve", "convergence"}))
      ->capture_default_str();
  auto* n_list = app.add_option("--n-list", config.n_list, "Comma-separated boundary resolutions")
                     ->delimiter(',')
                     ->check(CLI::Range(3, 1 << 20));
  app.add_option("--output-dir", output_dir, "Directory for CSV and JSON output")->capture_default_str();

  try {
    app.parse(argc, argv);
    config.mode = mode == "solve" ? Mode::Solve : Mode::Convergence;
    config.output_dir = output_dir;
    if (config.mode == Mode::Solve && nodes->count() == 0)
      throw CLI::RequiredError("--boundary-nodes is required in solve mode");
    if (config.mode == Mode::Convergence && n_list->count() == 0)
      throw CLI::RequiredError("--n-list is required in convergence mode");
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  return run(config, out, err);
}

} // namespace bem::cli
