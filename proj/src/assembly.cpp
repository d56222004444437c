#include "bem/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bem/error.hpp"
#include "bem/kernels.hpp"

namespace bem {

double free_term(int n)
{
  if (n < 3)
    throw Error(ErrorKind::InvalidArgument, "free term needs n >= 3, got " + std::to_string(n));
  return static_cast<double>(n - 2) / (2.0 * n);
}

ElementPair element_h_contributions(const BoundaryMesh& mesh, std::size_t element, Point2 source,
                                    const QuadratureRule& rule)
{
  if (source == mesh.node(element) || source == mesh.node(mesh.next(element)))
    throw Error(ErrorKind::Domain, "source lies on an endpoint of element " + std::to_string(element));

  const Point2 normal = element_normal(mesh, element);
  const double jac = element_jacobian(mesh, element);
  ElementPair out;
  out.start = jac * integrate(rule, [&](double t) {
                return normal_flux(element_point(mesh, element, t), source, normal) * basis_start(t);
              });
  out.end = jac * integrate(rule, [&](double t) {
              return normal_flux(element_point(mesh, element, t), source, normal) * basis_end(t);
            });
  return out;
}

ElementPair element_g_contributions(const BoundaryMesh& mesh, std::size_t element, Point2 source,
                                    const QuadratureRule& rule)
{
  constexpr double snap = 1e-12;
  const Point2 a = mesh.node(element);
  const Point2 b = mesh.node(mesh.next(element));

  if (distance(source, a) <= snap || distance(source, b) <= snap) {
    const SingularPair s = singular_g_pair(distance(a, b));
    if (distance(source, a) <= snap)
      return {s.near, s.far};
    return {s.far, s.near};
  }

  const double jac = element_jacobian(mesh, element);
  ElementPair out;
  out.start = jac * integrate(rule, [&](double t) {
                return fundamental_solution(element_point(mesh, element, t), source) * basis_start(t);
              });
  out.end = jac * integrate(rule, [&](double t) {
              return fundamental_solution(element_point(mesh, element, t), source) * basis_end(t);
            });
  return out;
}

CollocationContributions collocation_contributions(const BoundaryMesh& mesh, std::size_t element,
                                                   std::size_t node, const QuadratureRule& rule)
{
  const Point2 source = mesh.node(node);
  CollocationContributions out;

  if (node == element || node == mesh.next(element)) {
    out.singular = true;
    const SingularPair s = singular_g_pair(2.0 * element_jacobian(mesh, element));
    out.g = node == element ? ElementPair{s.near, s.far} : ElementPair{s.far, s.near};
    return out;
  }

  out.h = element_h_contributions(mesh, element, source, rule);
  out.g = element_g_contributions(mesh, element, source, rule);
  return out;
}

BemSystem assemble(const BoundaryMesh& mesh, const TestProblem& problem, const QuadratureRule& rule)
{
  if (!mesh.is_uniform_circle())
    throw Error(ErrorKind::UnsupportedMesh,
                "assembly requires the uniform circle discretization (closed-form free term)");

  const std::size_t n = mesh.size();
  BemSystem system{mesh, DenseMatrix(n, n), DenseMatrix(n, n), free_term(static_cast<int>(n)), {}};

  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t e = 0; e < n; ++e) {
      const CollocationContributions c = collocation_contributions(mesh, e, k, rule);
      const std::size_t e2 = mesh.next(e);
      system.h(k, e) += c.h.start;
      system.h(k, e2) += c.h.end;
      system.g(k, e) += c.g.start;
      system.g(k, e2) += c.g.end;
    }
  }

  system.u_nodes.reserve(n);
  for (const Point2& p : mesh.nodes())
    system.u_nodes.push_back(problem.u(p));

  if (!system.h.all_finite() || !system.g.all_finite())
    throw Error(ErrorKind::Integration, "assembled influence matrices contain non-finite entries");
  return system;
}

std::vector<double> right_hand_side(const BemSystem& system)
{
  std::vector<double> rhs = multiply(system.h, system.u_nodes);
  for (std::size_t k = 0; k < rhs.size(); ++k)
    rhs[k] += system.free_term * system.u_nodes[k];
  return rhs;
}

double row_identity_residual(const BemSystem& system)
{
  double worst = 0.0;
  for (std::size_t k = 0; k < system.h.rows(); ++k) {
    double sum = system.free_term;
    for (double v : system.h.row(k))
      sum += v;
    worst = std::max(worst, std::abs(sum));
  }
  return worst;
}

} // namespace bem
