#include "bem/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "bem/error.hpp"

namespace bem {

BoundaryMesh::BoundaryMesh(std::vector<Point2> nodes) : nodes_(std::move(nodes))
{
  if (nodes_.size() < 3)
    throw Error(ErrorKind::InvalidMesh,
                "a closed boundary needs at least 3 nodes, got " + std::to_string(nodes_.size()));

  for (const Point2& p : nodes_)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw Error(ErrorKind::InvalidMesh, "node coordinates must be finite");

  std::vector<Point2> sorted = nodes_;
  std::sort(sorted.begin(), sorted.end(),
            [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::InvalidMesh, "boundary nodes must be distinct");

  if (!(signed_area() > 0.0))
    throw Error(ErrorKind::InvalidMesh, "boundary must be traversed counterclockwise");
}

double BoundaryMesh::signed_area() const
{
  // shoelace
  double twice = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Point2 a = nodes_[i];
    const Point2 b = nodes_[next(i)];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

bool BoundaryMesh::is_uniform_circle(double tol) const
{
  const double n = static_cast<double>(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>((i + 1) % nodes_.size()) / n;
    if (distance(nodes_[i], {std::cos(angle), std::sin(angle)}) > tol)
      return false;
  }
  return true;
}

BoundaryMesh discretize_circle(int n)
{
  if (n < 3)
    throw Error(ErrorKind::InvalidMesh, "circle discretization needs n >= 3, got " + std::to_string(n));

  std::vector<Point2> nodes;
  nodes.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    // node n sits at angle 2 pi; reduce so it is exactly (1, 0)
    const double angle = 2.0 * std::numbers::pi * (i % n) / n;
    nodes.push_back({std::cos(angle), std::sin(angle)});
  }
  return BoundaryMesh(std::move(nodes));
}

namespace {

void check_element(const BoundaryMesh& mesh, std::size_t element)
{
  if (element >= mesh.size())
    throw Error(ErrorKind::Domain, "element index " + std::to_string(element) + " out of range");
}

} // namespace

Point2 element_point(const BoundaryMesh& mesh, std::size_t element, double t)
{
  check_element(mesh, element);
  if (!(t >= -1.0 && t <= 1.0))
    throw Error(ErrorKind::Domain, "element parameter must lie in [-1, 1], got " + std::to_string(t));

  const Point2 a = mesh.node(element);
  const Point2 b = mesh.node(mesh.next(element));
  if (t == -1.0)
    return a;
  if (t == 1.0)
    return b;
  return {0.5 * t * (b.x - a.x) + 0.5 * (a.x + b.x), 0.5 * t * (b.y - a.y) + 0.5 * (a.y + b.y)};
}

Point2 element_normal(const BoundaryMesh& mesh, std::size_t element)
{
  check_element(mesh, element);
  const Point2 a = mesh.node(element);
  const Point2 b = mesh.node(mesh.next(element));
  const double length = distance(a, b);
  if (!(length > 0.0))
    throw Error(ErrorKind::DegenerateElement, "element " + std::to_string(element) + " has zero length");
  return {(b.y - a.y) / length, (a.x - b.x) / length};
}

double element_jacobian(const BoundaryMesh& mesh, std::size_t element)
{
  check_element(mesh, element);
  const double length = distance(mesh.node(element), mesh.node(mesh.next(element)));
  if (!(length > 0.0))
    throw Error(ErrorKind::DegenerateElement, "element " + std::to_string(element) + " has zero length");
  return 0.5 * length;
}

InteriorGrid interior_grid(int m)
{
  if (m < 2)
    throw Error(ErrorKind::InvalidGrid, "interior grid needs m >= 2, got " + std::to_string(m));

  // (2i - (m-1)) / (m-1) equals i*h - 1 with h = 2/(m-1), but is correctly
  // rounded, so the point set is exactly symmetric about both axes.
  const double span = static_cast<double>(m - 1);
  auto coord = [span](int i) { return (2.0 * i - span) / span; };

  InteriorGrid grid;
  grid.source_grid_size = m;
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      const Point2 p{coord(i), coord(j)};
      if (p.x * p.x + p.y * p.y < 1.0)
        grid.points.push_back(p);
    }
  }
  return grid;
}

} // namespace bem
