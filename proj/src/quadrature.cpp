#include "bem/quadrature.hpp"

#include <numbers>
#include <string>

namespace bem {

QuadratureRule::QuadratureRule(std::vector<double> points, std::vector<double> weights)
    : points_(std::move(points)), weights_(std::move(weights))
{
}

namespace {

struct LegendrePair {
  double value;    // P_k(x)
  double previous; // P_{k-1}(x)
};

LegendrePair legendre(int k, double x)
{
  double p0 = 1.0, p1 = x;
  for (int j = 2; j <= k; ++j) {
    const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  return {p1, p0};
}

double legendre_derivative(int k, double x, LegendrePair p)
{
  return k * (x * p.value - p.previous) / (x * x - 1.0);
}

} // namespace

QuadratureRule gauss_legendre(int k)
{
  if (k < 1 || k > QuadratureRule::max_order)
    throw Error(ErrorKind::UnsupportedOrder, "Gauss-Legendre order must be in 1.."
                                                 + std::to_string(QuadratureRule::max_order)
                                                 + ", got " + std::to_string(k));

  const auto n = static_cast<std::size_t>(k);
  std::vector<double> points(n), weights(n);

  // Roots are symmetric about 0; solve for the upper half and mirror.
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (k + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const LegendrePair p = legendre(k, x);
      const double dx = p.value / legendre_derivative(k, x, p);
      x -= dx;
      if (std::abs(dx) <= 1e-16)
        break;
    }
    if (n % 2 == 1 && i == n / 2)
      x = 0.0;

    const double dp = legendre_derivative(k, x, legendre(k, x));
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    points[n - 1 - i] = x;
    points[i] = -x;
    weights[n - 1 - i] = w;
    weights[i] = w;
  }

  return QuadratureRule(std::move(points), std::move(weights));
}

namespace {

void check_length(double length)
{
  if (!(length > 0.0) || !std::isfinite(length))
    throw Error(ErrorKind::Domain, "element length must be positive, got " + std::to_string(length));
}

} // namespace

LogMoments singular_log_moments(double length)
{
  check_length(length);
  const double log_l = std::log(length);
  return {length * (log_l - 1.0), 0.5 * length * length * (log_l - 0.5)};
}

SingularPair singular_g_pair(double length)
{
  const LogMoments m = singular_log_moments(length);
  const double scale = -1.0 / (2.0 * std::numbers::pi);
  return {scale * (m.zeroth - m.first / length), scale * (m.first / length)};
}

} // namespace bem
