#include "bem/output.hpp"

#include <charconv>
#include <fstream>
#include <numbers>
#include <sstream>
#include <system_error>

#include "bem/error.hpp"

namespace bem {

std::string format_number(double value)
{
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{})
    throw Error(ErrorKind::InvalidArgument, "could not format number");
  return std::string(buf, end);
}

std::string boundary_flux_csv(const BoundarySolution& solution, const TestProblem& problem)
{
  std::ostringstream os;
  os << "node,x,y,theta,q_bem,q_exact,abs_err\n";
  const auto nodes = solution.mesh.nodes();
  const double n = static_cast<double>(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Point2 p = nodes[i];
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(i + 1) / n;
    const double exact = problem.q(p);
    os << i + 1 << ',' << format_number(p.x) << ',' << format_number(p.y) << ',' << format_number(theta)
       << ',' << format_number(solution.q_nodes[i]) << ',' << format_number(exact) << ','
       << format_number(std::abs(solution.q_nodes[i] - exact)) << '\n';
  }
  return os.str();
}

std::string interior_csv(const FieldReport& report)
{
  std::ostringstream os;
  os << "k,x,y,u_bem,u_exact,abs_err,rel_err\n";
  for (std::size_t i = 0; i < report.size(); ++i) {
    const Point2 p = report.point(i);
    os << i + 1 << ',' << format_number(p.x) << ',' << format_number(p.y) << ','
       << format_number(report.u_bem(i)) << ',' << format_number(report.u_exact(i)) << ','
       << format_number(report.abs_err(i)) << ',';
    if (const auto rel = report.rel_err(i))
      os << format_number(*rel);
    os << '\n';
  }
  return os.str();
}

std::string convergence_csv(std::span<const ConvergenceRow> rows)
{
  std::ostringstream os;
  os << "n,max_abs,max_rel,mean_abs,mean_rel,wall_time_s\n";
  for (const ConvergenceRow& row : rows) {
    os << row.n << ',';
    if (row.stats)
      os << format_number(row.stats->max_abs) << ',' << format_number(row.stats->max_rel) << ','
         << format_number(row.stats->mean_abs) << ',' << format_number(row.stats->mean_rel) << ','
         << format_number(row.wall_time_s);
    else
      os << ",,,,";
    os << '\n';
  }
  return os.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content)
{
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw Error(ErrorKind::InvalidArgument, "cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out)
      throw Error(ErrorKind::InvalidArgument, "failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorKind::InvalidArgument, "cannot move output into place at " + path.string());
  }
}

} // namespace bem
