#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "bem/error.hpp"

namespace bem {

// Linear shape functions on the reference element t in [-1, 1].
// basis_start is 1 at the element's first node, basis_end at its second.
inline double basis_start(double t) { return 0.5 * (1.0 - t); }
inline double basis_end(double t) { return 0.5 * (1.0 + t); }

/// Gauss-Legendre rule on [-1, 1].
class QuadratureRule {
public:
  static constexpr int max_order = 64;

  int order() const noexcept { return static_cast<int>(points_.size()); }
  std::span<const double> points() const noexcept { return points_; }
  std::span<const double> weights() const noexcept { return weights_; }

private:
  friend QuadratureRule gauss_legendre(int k);
  QuadratureRule(std::vector<double> points, std::vector<double> weights);

  std::vector<double> points_;
  std::vector<double> weights_;
};

/// k-point rule (1 <= k <= 64), nodes ascending, computed by Newton
/// iteration on P_k. Exact for polynomials of degree <= 2k - 1.
QuadratureRule gauss_legendre(int k);

/// Sum of w_i f(t_i). Throws IntegrationError on a non-finite sample.
template <class F>
double integrate(const QuadratureRule& rule, F&& f)
{
  const auto t = rule.points();
  const auto w = rule.weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double value = f(t[i]);
    if (!std::isfinite(value))
      throw IntegrationError(t[i], value);
    sum += w[i] * value;
  }
  return sum;
}

struct LogMoments {
  double zeroth; // int_0^L ln s ds
  double first;  // int_0^L s ln s ds
};

/// Closed-form log moments on [0, L], L > 0.
LogMoments singular_log_moments(double length);

/// Weakly singular single-layer integrals over a straight element of length L
/// whose endpoint is the collocation node:
///   near = int_0^L w(s) (1 - s/L) ds,  far = int_0^L w(s) (s/L) ds,
/// with w(s) = -ln(s) / (2 pi). "near" belongs to the shape function that
/// peaks at the singular node.
struct SingularPair {
  double near;
  double far;
};

SingularPair singular_g_pair(double length);

} // namespace bem
