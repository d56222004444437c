#pragma once

#include "bem/geometry.hpp"

namespace bem {

// Free-space Green's function of the 2D Laplacian, w = -ln(r) / (2 pi).
// All three functions take the field point first and throw
// ErrorKind::SingularKernel when field == source.

double fundamental_solution(Point2 field, Point2 source);

/// Gradient of w with respect to the field point: -(field - source) / (2 pi r^2).
Point2 fundamental_flux(Point2 field, Point2 source);

/// dw/dn at the field point for a unit normal (checked to 1e-12).
double normal_flux(Point2 field, Point2 source, Point2 normal);

} // namespace bem
