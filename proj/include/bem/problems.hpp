#pragma once

#include <functional>
#include <string>

#include "bem/geometry.hpp"

namespace bem {

/// An exact harmonic solution together with its hand-coded gradient.
struct TestProblem {
  int id = 0;
  std::string expression;
  std::function<double(Point2)> u;
  std::function<Point2(Point2)> grad_u;

  /// Outward normal flux on the unit circle, grad_u(p) . p.
  double q(Point2 p) const { return dot(grad_u(p), p); }
};

inline constexpr int problem_count = 5;

/// One of the five catalogued problems, id in 1..5.
TestProblem get_problem(int id);

/// u == value everywhere (id 0). Used for constant-potential identity checks.
TestProblem constant_problem(double value = 1.0);

} // namespace bem
