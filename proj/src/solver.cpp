#include "bem/solver.hpp"

#include <algorithm>
#include <cmath>

#include "bem/dense_matrix.hpp"
#include "bem/error.hpp"

namespace bem {

BoundarySolution solve_flux(const BemSystem& system)
{
  const std::vector<double> rhs = right_hand_side(system);
  const LuFactorization lu(system.g);
  std::vector<double> q = lu.solve(rhs);

  std::vector<double> residual = multiply(system.g, q);
  for (std::size_t i = 0; i < residual.size(); ++i)
    residual[i] -= rhs[i];
  const double rhs_norm = max_abs(rhs);
  const double res_norm = max_abs(residual);

  if (!std::all_of(q.begin(), q.end(), [](double v) { return std::isfinite(v); }))
    throw SolveError(lu.smallest_pivot(), 0);

  return {system.mesh, system.u_nodes, std::move(q), lu.smallest_pivot(),
          rhs_norm > 0.0 ? res_norm / rhs_norm : res_norm};
}

InteriorValue evaluate_interior(const BoundarySolution& solution, Point2 point, const QuadratureRule& rule)
{
  if (!(point.x * point.x + point.y * point.y < 1.0))
    throw Error(ErrorKind::OutOfDomain, "interior evaluation point must lie strictly inside the unit disk");

  const BoundaryMesh& mesh = solution.mesh;
  double value = 0.0;
  double half_length = 0.0;

  for (std::size_t e = 0; e < mesh.size(); ++e) {
    const std::size_t e2 = mesh.next(e);
    const ElementPair g = element_g_contributions(mesh, e, point, rule);
    const ElementPair h = element_h_contributions(mesh, e, point, rule);
    value += g.start * solution.q_nodes[e] + g.end * solution.q_nodes[e2];
    value -= h.start * solution.u_nodes[e] + h.end * solution.u_nodes[e2];
    half_length = std::max(half_length, element_jacobian(mesh, e));
  }
  return {value, 1.0 - norm(point) < half_length};
}

void FieldReport::add(Point2 point, double u_bem, double u_exact, bool near_boundary)
{
  points_.push_back(point);
  u_bem_.push_back(u_bem);
  u_exact_.push_back(u_exact);
  near_boundary_.push_back(near_boundary ? 1 : 0);
}

double FieldReport::abs_err(std::size_t i) const { return std::abs(u_bem(i) - u_exact(i)); }

std::optional<double> FieldReport::rel_err(std::size_t i) const
{
  const double exact = u_exact(i);
  if (std::abs(exact) < relative_error_threshold)
    return std::nullopt;
  return std::abs((u_bem(i) - exact) / exact);
}

std::size_t FieldReport::near_boundary_count() const
{
  return static_cast<std::size_t>(std::count(near_boundary_.begin(), near_boundary_.end(), 1));
}

FieldReport evaluate_field(const BoundarySolution& solution, const InteriorGrid& grid,
                           const TestProblem& problem, const QuadratureRule& rule)
{
  FieldReport report;
  for (const Point2& p : grid.points) {
    const InteriorValue v = evaluate_interior(solution, p, rule);
    report.add(p, v.value, problem.u(p), v.near_boundary);
  }
  return report;
}

} // namespace bem
