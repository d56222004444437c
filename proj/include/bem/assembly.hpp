#pragma once

#include <cstddef>
#include <vector>

#include "bem/dense_matrix.hpp"
#include "bem/geometry.hpp"
#include "bem/problems.hpp"
#include "bem/quadrature.hpp"

namespace bem {

/// Boundary free-term coefficient for the uniform inscribed n-gon: the
/// interior angle (n - 2) pi / n divided by 2 pi.
double free_term(int n);

/// An element's two additive contributions, to the column of its first
/// node and to the column of its second node.
struct ElementPair {
  double start = 0.0;
  double end = 0.0;
};

/// Integrals of dw/dn times each shape function over element i, for a
/// source that is not an endpoint of the element.
ElementPair element_h_contributions(const BoundaryMesh& mesh, std::size_t element, Point2 source,
                                    const QuadratureRule& rule);

/// Integrals of w times each shape function over element i. When the source
/// is an endpoint (within 1e-12) the closed-form singular pair is used.
ElementPair element_g_contributions(const BoundaryMesh& mesh, std::size_t element, Point2 source,
                                    const QuadratureRule& rule);

struct CollocationContributions {
  ElementPair h;
  ElementPair g;
  bool singular = false; // collocation node is an endpoint of the element
};

/// Contributions of one element to the row of boundary collocation node k.
/// Singularity is decided by index, not geometry; on a singular element the
/// H pair is exactly zero because dw/dn vanishes along the source's own chord.
CollocationContributions collocation_contributions(const BoundaryMesh& mesh, std::size_t element,
                                                   std::size_t node, const QuadratureRule& rule);

/// Dense collocation system c u + H u = G q on the boundary nodes.
struct BemSystem {
  BoundaryMesh mesh;
  DenseMatrix h;
  DenseMatrix g;
  double free_term = 0.0;
  std::vector<double> u_nodes;

  std::size_t size() const noexcept { return u_nodes.size(); }
};

/// Requires a uniform circle mesh; other meshes raise UnsupportedMesh since the
/// free term is only known in closed form there.
BemSystem assemble(const BoundaryMesh& mesh, const TestProblem& problem, const QuadratureRule& rule);

/// c u + H u.
std::vector<double> right_hand_side(const BemSystem& system);

/// max_k |c + sum_j H[k, j]|; zero in exact arithmetic for the n-gon.
double row_identity_residual(const BemSystem& system);

} // namespace bem
