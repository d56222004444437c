#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bem/assembly.hpp"
#include "bem/geometry.hpp"
#include "bem/problems.hpp"
#include "bem/quadrature.hpp"

namespace bem {

struct BoundarySolution {
  BoundaryMesh mesh;
  std::vector<double> u_nodes; // prescribed Dirichlet data
  std::vector<double> q_nodes; // solved outward normal flux
  double smallest_pivot = 0.0;
  double relative_residual = 0.0; // |G q - rhs|_inf / |rhs|_inf
};

/// Solves G q = c u + H u by LU with partial pivoting. Throws SolveError
/// when a pivot falls below 1e-12.
BoundarySolution solve_flux(const BemSystem& system);

struct InteriorValue {
  double value = 0.0;
  bool near_boundary = false; // 1 - |p| below half an element length
};

/// Interior representation formula (free term 1). The point must lie
/// strictly inside the unit disk.
InteriorValue evaluate_interior(const BoundarySolution& solution, Point2 point, const QuadratureRule& rule);

/// |u_exact| below this is excluded from relative errors.
inline constexpr double relative_error_threshold = 1e-12;

class FieldReport {
public:
  void add(Point2 point, double u_bem, double u_exact, bool near_boundary);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

  Point2 point(std::size_t i) const { return points_.at(i); }
  double u_bem(std::size_t i) const { return u_bem_.at(i); }
  double u_exact(std::size_t i) const { return u_exact_.at(i); }
  bool near_boundary(std::size_t i) const { return near_boundary_.at(i) != 0; }

  double abs_err(std::size_t i) const;
  std::optional<double> rel_err(std::size_t i) const;

  std::size_t near_boundary_count() const;

private:
  std::vector<Point2> points_;
  std::vector<double> u_bem_;
  std::vector<double> u_exact_;
  std::vector<char> near_boundary_;
};

FieldReport evaluate_field(const BoundarySolution& solution, const InteriorGrid& grid,
                           const TestProblem& problem, const QuadratureRule& rule);

} // namespace bem
