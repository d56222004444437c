#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace bem {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend Point2 operator-(Point2 p) { return {-p.x, -p.y}; }
  friend bool operator==(Point2 a, Point2 b) = default;
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

/// Closed polygon with counterclockwise node ordering. Element i joins
/// node i and node (i + 1) mod N; elements, normals and Jacobians are
/// derived on demand from the nodes.
class BoundaryMesh {
public:
  /// Validates N >= 3, finite distinct nodes and counterclockwise traversal.
  explicit BoundaryMesh(std::vector<Point2> nodes);

  std::size_t size() const noexcept { return nodes_.size(); }
  std::span<const Point2> nodes() const noexcept { return nodes_; }
  Point2 node(std::size_t i) const { return nodes_.at(i); }

  /// Index of the second endpoint of element i, with wraparound.
  std::size_t next(std::size_t i) const noexcept { return (i + 1) % nodes_.size(); }

  double signed_area() const;

  /// True when node i sits at angle 2*pi*(i+1)/N on the unit circle, i.e.
  /// the mesh is exactly what discretize_circle(N) produces (within tol).
  bool is_uniform_circle(double tol = 1e-12) const;

private:
  std::vector<Point2> nodes_;
};

/// Uniform inscribed N-gon. Zero-based node i lies at angle 2*pi*(i+1)/n, so
/// the last node is (1, 0).
BoundaryMesh discretize_circle(int n);

/// Affine map of t in [-1, 1] onto the chord of element i.
Point2 element_point(const BoundaryMesh& mesh, std::size_t element, double t);

/// Unit normal (dy, -dx)/L of element i; outward for counterclockwise meshes.
Point2 element_normal(const BoundaryMesh& mesh, std::size_t element);

/// Half the chord length, the arc-length factor ds/dt.
double element_jacobian(const BoundaryMesh& mesh, std::size_t element);

struct InteriorGrid {
  std::vector<Point2> points;
  int source_grid_size = 0;
};

/// Nodes of the m x m grid on [-1, 1]^2 lying strictly inside the unit disk,
/// ordered with the y index outer and the x index inner.
InteriorGrid interior_grid(int m);

} // namespace bem
