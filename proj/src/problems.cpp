#include "bem/problems.hpp"

#include <cmath>
#include <numbers>

#include "bem/error.hpp"

namespace bem {

namespace {

using std::cos, std::sin, std::cosh, std::sinh, std::exp;
constexpr double pi = std::numbers::pi;

TestProblem quadratic()
{
  return {1, "1 + x^2 - y^2",
          [](Point2 p) { return 1.0 + p.x * p.x - p.y * p.y; },
          [](Point2 p) { return Point2{2.0 * p.x, -2.0 * p.y}; }};
}

TestProblem exp_cos()
{
  return {2, "e^y cos(x)",
          [](Point2 p) { return exp(p.y) * cos(p.x); },
          [](Point2 p) { return Point2{-exp(p.y) * sin(p.x), exp(p.y) * cos(p.x)}; }};
}

TestProblem sin_sinh()
{
  return {3, "1 + sin(pi x) sinh(pi y)",
          [](Point2 p) { return 1.0 + sin(pi * p.x) * sinh(pi * p.y); },
          [](Point2 p) {
            return Point2{pi * cos(pi * p.x) * sinh(pi * p.y), pi * sin(pi * p.x) * cosh(pi * p.y)};
          }};
}

// cosh(4 pi) ~ 1.4e5 times sinh(2 pi (y - 2)) gives values up to ~3e13.
TestProblem large_dynamic_range()
{
  static const double a = 3.0 * cosh(4.0 * pi);
  static const double b = 1.0 / sinh(6.0 * pi);
  return {4, "1 - 3 cosh(4 pi) sin(2 pi x) sinh(2 pi (y - 2)) + csch(6 pi) sin(3 pi x) sinh(3 pi y)",
          [](Point2 p) {
            return 1.0 - a * sin(2 * pi * p.x) * sinh(2 * pi * (p.y - 2))
                   + b * sin(3 * pi * p.x) * sinh(3 * pi * p.y);
          },
          [](Point2 p) {
            const double ux = -a * 2 * pi * cos(2 * pi * p.x) * sinh(2 * pi * (p.y - 2))
                              + b * 3 * pi * cos(3 * pi * p.x) * sinh(3 * pi * p.y);
            const double uy = -a * 2 * pi * sin(2 * pi * p.x) * cosh(2 * pi * (p.y - 2))
                              + b * 3 * pi * sin(3 * pi * p.x) * cosh(3 * pi * p.y);
            return Point2{ux, uy};
          }};
}

TestProblem mixed_exponentials()
{
  return {5, "pi e^y cos(x - pi/7) + e^(1 - pi x) cos(pi y - pi/2) + e^(5x)/100 cos(5y - pi/2)",
          [](Point2 p) {
            return pi * exp(p.y) * cos(p.x - pi / 7) + exp(1 - pi * p.x) * cos(pi * p.y - pi / 2)
                   + exp(5 * p.x) / 100 * cos(5 * p.y - pi / 2);
          },
          [](Point2 p) {
            const double ux = -pi * exp(p.y) * sin(p.x - pi / 7)
                              - pi * exp(1 - pi * p.x) * cos(pi * p.y - pi / 2)
                              + 5 * exp(5 * p.x) / 100 * cos(5 * p.y - pi / 2);
            const double uy = pi * exp(p.y) * cos(p.x - pi / 7)
                              - pi * exp(1 - pi * p.x) * sin(pi * p.y - pi / 2)
                              - 5 * exp(5 * p.x) / 100 * sin(5 * p.y - pi / 2);
            return Point2{ux, uy};
          }};
}

} // namespace

TestProblem get_problem(int id)
{
  switch (id) {
  case 1: return quadratic();
  case 2: return exp_cos();
  case 3: return sin_sinh();
  case 4: return large_dynamic_range();
  case 5: return mixed_exponentials();
  default:
    throw Error(ErrorKind::UnknownProblem, "problem id must be in 1.." + std::to_string(problem_count)
                                               + ", got " + std::to_string(id));
  }
}

TestProblem constant_problem(double value)
{
  return {0, "constant", [value](Point2) { return value; }, [](Point2) { return Point2{0.0, 0.0}; }};
}

} // namespace bem
