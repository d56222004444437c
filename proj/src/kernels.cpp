#include "bem/kernels.hpp"

#include <cmath>
#include <numbers>

#include "bem/error.hpp"

namespace bem {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void check_distinct(Point2 field, Point2 source)
{
  if (field == source)
    throw Error(ErrorKind::SingularKernel, "field point coincides with source point");
}

} // namespace

double fundamental_solution(Point2 field, Point2 source)
{
  check_distinct(field, source);
  return -std::log(distance(field, source)) / two_pi;
}

Point2 fundamental_flux(Point2 field, Point2 source)
{
  check_distinct(field, source);
  const Point2 d = field - source;
  const double r2 = dot(d, d);
  return (-1.0 / (two_pi * r2)) * d;
}

double normal_flux(Point2 field, Point2 source, Point2 normal)
{
  if (std::abs(norm(normal) - 1.0) > 1e-12)
    throw Error(ErrorKind::InvalidArgument, "normal vector must have unit length");
  return dot(fundamental_flux(field, source), normal);
}

} // namespace bem
