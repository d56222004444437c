#pragma once

// Brute-force reference integrals used by the tests. Nothing here calls into
// the library's quadrature or kernel code: the Gauss rule is the closed-form
// 5-point rule and the kernels are written out inline.

#include <array>
#include <cmath>
#include <numbers>

#include "bem/geometry.hpp"

namespace oracle {

inline constexpr double pi = std::numbers::pi;

struct Gauss5 {
  std::array<double, 5> x;
  std::array<double, 5> w;
};

inline const Gauss5& gauss5()
{
  static const Gauss5 rule = [] {
    const double a = std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
    const double b = std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
    const double wa = (322.0 + 13.0 * std::sqrt(70.0)) / 900.0;
    const double wb = (322.0 - 13.0 * std::sqrt(70.0)) / 900.0;
    return Gauss5{{-b, -a, 0.0, a, b}, {wb, wa, 128.0 / 225.0, wa, wb}};
  }();
  return rule;
}

/// Composite 5-point Gauss on [lo, hi] with `panels` equal panels.
template <class F>
double composite(F&& f, double lo, double hi, long panels)
{
  const Gauss5& g = gauss5();
  const double h = (hi - lo) / static_cast<double>(panels);
  double sum = 0.0;
  for (long p = 0; p < panels; ++p) {
    const double mid = lo + (static_cast<double>(p) + 0.5) * h;
    double panel = 0.0;
    for (int i = 0; i < 5; ++i)
      panel += g.w[static_cast<std::size_t>(i)] * f(mid + 0.5 * h * g.x[static_cast<std::size_t>(i)]);
    sum += 0.5 * h * panel;
  }
  return sum;
}

/// int_0^L f(s) ds for f with an integrable singularity at s = 0, using
/// subintervals [L 2^{-j-1}, L 2^{-j}], j = 0..60, each split into 8 panels.
/// The neglected piece [0, L 2^{-61}] is below 1e-16 for log singularities.
template <class F>
double geometric(F&& f, double length)
{
  double sum = 0.0;
  for (int j = 0; j <= 60; ++j) {
    const double hi = std::ldexp(length, -j);
    const double lo = 0.5 * hi;
    sum += composite(f, lo, hi, 8);
  }
  return sum;
}

inline double log_kernel(bem::Point2 field, bem::Point2 source)
{
  return -std::log(std::hypot(field.x - source.x, field.y - source.y)) / (2.0 * pi);
}

inline double flux_kernel(bem::Point2 field, bem::Point2 source, bem::Point2 normal)
{
  const double dx = field.x - source.x, dy = field.y - source.y;
  return -(dx * normal.x + dy * normal.y) / (2.0 * pi * (dx * dx + dy * dy));
}

/// Straight element a -> b parameterized by arc length s in [0, L].
struct Segment {
  bem::Point2 a, b;

  double length() const { return std::hypot(b.x - a.x, b.y - a.y); }
  bem::Point2 at(double s) const
  {
    const double f = s / length();
    return {a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)};
  }
  bem::Point2 normal() const
  {
    const double l = length();
    return {(b.y - a.y) / l, (a.x - b.x) / l};
  }
};

/// int over the segment of kernel * (1 - s/L) [weight_end = false] or
/// kernel * s/L [weight_end = true], regular source.
template <class K>
double segment_integral(const Segment& seg, K&& kernel, bool weight_end, long panels)
{
  const double l = seg.length();
  return composite(
      [&](double s) {
        const double phi = weight_end ? s / l : 1.0 - s / l;
        return kernel(seg.at(s)) * phi;
      },
      0.0, l, panels);
}

inline constexpr long regular_panels = 1L << 14;

inline double g_regular(const Segment& seg, bem::Point2 source, bool weight_end)
{
  return segment_integral(seg, [&](bem::Point2 p) { return log_kernel(p, source); }, weight_end,
                          regular_panels);
}

inline double h_regular(const Segment& seg, bem::Point2 source, bool weight_end)
{
  const bem::Point2 n = seg.normal();
  return segment_integral(seg, [&](bem::Point2 p) { return flux_kernel(p, source, n); }, weight_end,
                          regular_panels);
}

/// Single-layer integral over a segment whose first endpoint is the source.
/// weight_end = false weights with the shape function that is 1 at the source.
inline double g_singular_at_start(double length, bool weight_end)
{
  return geometric(
      [&](double s) {
        const double phi = weight_end ? s / length : 1.0 - s / length;
        return -std::log(s) / (2.0 * pi) * phi;
      },
      length);
}

} // namespace oracle
