// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bem/analysis.hpp"
#include "bem/cli.hpp"
#include "bem/kernels.hpp"
#include "oracles.hpp"

using namespace bem;
namespace fs = std::filesystem;

namespace {

constexpr double pi = std::numbers::pi;

int failures = 0;

void report(int id, bool ok, const std::string& detail)
{
  std::printf("criterion %d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  if (!ok)
    ++failures;
}

std::string fmt(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const QuadratureRule& rule8()
{
  static const QuadratureRule rule = gauss_legendre(8);
  return rule;
}

BoundarySolution solve(const TestProblem& p, int n)
{
  return solve_flux(assemble(discretize_circle(n), p, rule8()));
}

std::size_t find_point(const FieldReport& r, Point2 p)
{
  for (std::size_t i = 0; i < r.size(); ++i)
    if (distance(r.point(i), p) < 1e-12)
      return i;
  throw std::runtime_error("grid point not found");
}

void table_one()
{
  const auto start = std::chrono::steady_clock::now();
  const PipelineResult r = run_pipeline(get_problem(1), 30, interior_grid(11), rule8());
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const ErrorStats& s = r.interior;

  struct Row {
    const char* name;
    double value, bound, reference;
  };
  const Row rows[] = {{"max_abs", s.max_abs, 0.004, 0.00285358},
                      {"max_rel", s.max_rel, 0.010, 0.00792662},
                      {"mean_abs", s.mean_abs, 0.0018, 0.00119869},
                      {"mean_rel", s.mean_rel, 0.0024, 0.00161062}};
  bool ok = seconds < 2.0;
  std::string detail;
  for (const Row& row : rows) {
    ok = ok && row.value <= row.bound && row.value >= 0.2 * row.reference;
    detail += std::string(row.name) + "=" + fmt(row.value) + " ";
  }
  report(1, ok, detail + "time=" + fmt(seconds) + "s");
}

void spot_values()
{
  const TestProblem p = get_problem(1);
  const FieldReport r = evaluate_field(solve(p, 30), interior_grid(11), p, rule8());
  const double bottom = r.u_bem(find_point(r, {0, -0.8}));
  const double origin = r.u_bem(find_point(r, {0, 0}));
  const double diag = r.u_bem(find_point(r, {-0.4, -0.4}));

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double sx : {-0.4, 0.4}) {
    for (double sy : {-0.8, 0.8}) {
      const double e = r.abs_err(find_point(r, {sx, sy}));
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
  }
  const bool ok = bottom >= 0.356 && bottom <= 0.366 && std::abs(origin - 1.0) <= 1e-6 &&
                  std::abs(diag - 1.0) <= 1e-6 && hi - lo <= 1e-12;
  report(2, ok,
         "u(0,-0.8)=" + fmt(bottom) + " |u(0,0)-1|=" + fmt(std::abs(origin - 1.0)) +
             " |u(-0.4,-0.4)-1|=" + fmt(std::abs(diag - 1.0)) + " corner spread=" + fmt(hi - lo));
}

void grid_cardinality()
{
  const std::size_t a = interior_grid(11).points.size();
  const std::size_t b = interior_grid(3).points.size();
  report(3, a == 69 && b == 1, "m=11 -> " + std::to_string(a) + ", m=3 -> " + std::to_string(b));
}

void constant_potential()
{
  const TestProblem one = constant_problem();
  const BoundarySolution s = solve(one, 30);
  const double q = max_abs(s.q_nodes);
  const FieldReport r = evaluate_field(s, interior_grid(11), one, rule8());
  double dev = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i)
    dev = std::max(dev, std::abs(r.u_bem(i) - 1.0));

  bool ok = q <= 1e-2 && dev <= 5e-3;
  std::string identities;
  double previous = std::numeric_limits<double>::infinity();
  for (int n : {15, 30, 60, 120}) {
    const double residual = row_identity_residual(assemble(discretize_circle(n), one, rule8()));
    ok = ok && residual <= 5e-3 && residual < previous;
    previous = residual;
    identities += " " + fmt(residual);
  }
  report(4, ok, "max|q|=" + fmt(q) + " interior dev=" + fmt(dev) + " row identity (n=15,30,60,120):" + identities);
}

void singular_oracle()
{
  double worst_singular = 0.0;
  for (double length : {0.01, 0.1, 2 * std::sin(pi / 30), 1.0, 2.0}) {
    const SingularPair pair = singular_g_pair(length);
    worst_singular = std::max({worst_singular, std::abs(pair.near - oracle::g_singular_at_start(length, false)),
                               std::abs(pair.far - oracle::g_singular_at_start(length, true))});
  }

  const BoundaryMesh mesh = discretize_circle(8);
  double worst_regular = 0.0;
  for (std::size_t e = 0; e < mesh.size(); ++e) {
    const oracle::Segment seg{mesh.node(e), mesh.node(mesh.next(e))};
    for (std::size_t k = 0; k < mesh.size(); ++k) {
      if (k == e || k == mesh.next(e))
        continue;
      const CollocationContributions c = collocation_contributions(mesh, e, k, rule8());
      worst_regular = std::max({worst_regular, std::abs(c.g.start - oracle::g_regular(seg, mesh.node(k), false)),
                                std::abs(c.g.end - oracle::g_regular(seg, mesh.node(k), true)),
                                std::abs(c.h.start - oracle::h_regular(seg, mesh.node(k), false)),
                                std::abs(c.h.end - oracle::h_regular(seg, mesh.node(k), true))});
    }
  }
  report(5, worst_singular <= 1e-12 && worst_regular <= 1e-9,
         "singular max diff=" + fmt(worst_singular) + " regular max diff=" + fmt(worst_regular));
}

void convergence()
{
  const std::vector<int> ns{15, 30, 60, 120};
  const auto rows = convergence_study(get_problem(1), ns, 11, rule8());
  bool ok = rows.size() == ns.size();
  std::string detail = "max_abs:";
  double previous = std::numeric_limits<double>::infinity();
  for (const ConvergenceRow& row : rows) {
    if (!row.stats) {
      ok = false;
      detail += " n=" + std::to_string(row.n) + " failed";
      continue;
    }
    ok = ok && row.stats->max_abs < previous;
    previous = row.stats->max_abs;
    detail += " " + fmt(row.stats->max_abs);
  }
  detail += " orders:";
  for (const auto& o : empirical_orders(rows))
    detail += " " + (o ? fmt(*o) : std::string("n/a"));
  report(6, ok, detail);
}

void kernels()
{
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  constexpr double h = 1e-6;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    Point2 field, source;
    do {
      field = {coord(rng), coord(rng)};
      source = {coord(rng), coord(rng)};
    } while (distance(field, source) < 0.1);
    const Point2 f = fundamental_flux(field, source);
    const double dx = (fundamental_solution(field + Point2{h, 0}, source) -
                       fundamental_solution(field - Point2{h, 0}, source)) / (2 * h);
    const double dy = (fundamental_solution(field + Point2{0, h}, source) -
                       fundamental_solution(field - Point2{0, h}, source)) / (2 * h);
    worst = std::max(worst, norm(Point2{dx, dy} - f) / norm(f));
  }

  const Point2 source{0.25, -0.5};
  double worst_circle = 0.0;
  for (double rho : {1e-3, 0.5, 10.0}) {
    constexpr int samples = 256;
    double sum = 0.0;
    for (int i = 0; i < samples; ++i) {
      const double angle = 2 * pi * i / samples;
      const Point2 dir{std::cos(angle), std::sin(angle)};
      sum += normal_flux(source + rho * dir, source, dir);
    }
    worst_circle = std::max(worst_circle, std::abs(sum * 2 * pi * rho / samples + 1.0));
  }
  report(7, worst <= 1e-6 && worst_circle <= 1e-10,
         "gradient rel err=" + fmt(worst) + " circle flux err=" + fmt(worst_circle));
}

void all_problems()
{
  bool ok = true;
  std::string detail;
  for (int id = 1; id <= problem_count; ++id) {
    try {
      const TestProblem p = get_problem(id);
      const PipelineResult r = run_pipeline(p, 30, interior_grid(11), rule8());
      const auto [lo, hi] = std::minmax_element(r.solution.u_nodes.begin(), r.solution.u_nodes.end());
      const double slack = 5e-3 * (*hi - *lo);
      bool finite = std::isfinite(r.interior.max_abs) && std::isfinite(r.interior.mean_abs);
      bool bounded = true;
      for (std::size_t i = 0; i < r.report.size(); ++i) {
        finite = finite && std::isfinite(r.report.u_bem(i));
        bounded = bounded && r.report.u_bem(i) >= *lo - slack && r.report.u_bem(i) <= *hi + slack;
      }
      ok = ok && finite && bounded;
      detail += " p" + std::to_string(id) + ":max_abs=" + fmt(r.interior.max_abs) + (bounded ? "" : "(max principle violated)");
    } catch (const std::exception& e) {
      ok = false;
      detail += " p" + std::to_string(id) + ":" + e.what();
    }
  }
  report(8, ok, detail);
}

std::string slurp(const fs::path& path)
{
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void determinism()
{
  const fs::path base = fs::temp_directory_path() / "bem_acceptance";
  fs::remove_all(base);
  std::ostringstream sink;
  bool ok = true;
  for (const char* run : {"a", "b"}) {
    const std::string dir = (base / run).string();
    const char* argv[] = {"bem_disk",        "--problem", "1",  "--boundary-nodes", "30", "--interior-grid",
                          "11",              "--quad-order", "8", "--output-dir", dir.c_str()};
    ok = ok && cli::main(static_cast<int>(std::size(argv)), argv, sink, sink) == 0;
  }
  for (const char* name : {"boundary_flux.csv", "interior.csv"}) {
    const std::string a = slurp(base / "a" / name);
    ok = ok && !a.empty() && a == slurp(base / "b" / name);
  }
  fs::remove_all(base);
  report(9, ok, "boundary_flux.csv and interior.csv compared byte for byte");
}

} // namespace

int main()
{
  table_one();
  spot_values();
  grid_cardinality();
  constant_potential();
  singular_oracle();
  convergence();
  kernels();
  all_problems();
  determinism();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
