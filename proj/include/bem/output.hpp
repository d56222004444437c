#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "bem/analysis.hpp"
#include "bem/problems.hpp"
#include "bem/solver.hpp"

namespace bem {

/// Shortest decimal string that round-trips to the same double.
std::string format_number(double value);

// CSV tables: header row, comma separated, LF line endings. Node and point
// numbering is one-based.

/// node,x,y,theta,q_bem,q_exact,abs_err
std::string boundary_flux_csv(const BoundarySolution& solution, const TestProblem& problem);

/// k,x,y,u_bem,u_exact,abs_err,rel_err (rel_err empty where excluded)
std::string interior_csv(const FieldReport& report);

/// n,max_abs,max_rel,mean_abs,mean_rel,wall_time_s (stats empty for failed rows)
std::string convergence_csv(std::span<const ConvergenceRow> rows);

/// Writes to a sibling temporary file and renames it over the target.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

} // namespace bem
