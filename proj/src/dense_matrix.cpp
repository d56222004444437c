#include "bem/dense_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "bem/error.hpp"

namespace bem {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double value)
    : rows_(rows), cols_(cols), data_(rows * cols, value)
{
}

bool DenseMatrix::all_finite() const
{
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

std::vector<double> multiply(const DenseMatrix& a, std::span<const double> x)
{
  if (x.size() != a.cols())
    throw Error(ErrorKind::InvalidArgument, "matrix-vector dimension mismatch");
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto row = a.row(r);
    double sum = 0.0;
    for (std::size_t c = 0; c < row.size(); ++c)
      sum += row[c] * x[c];
    y[r] = sum;
  }
  return y;
}

double max_abs(std::span<const double> v)
{
  double m = 0.0;
  for (double x : v)
    m = std::max(m, std::abs(x));
  return m;
}

LuFactorization::LuFactorization(DenseMatrix a, double pivot_tolerance)
    : lu_(std::move(a)), perm_(lu_.rows())
{
  if (lu_.rows() != lu_.cols() || lu_.rows() == 0)
    throw Error(ErrorKind::InvalidArgument, "LU factorization needs a non-empty square matrix");

  const std::size_t n = lu_.rows();
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  smallest_pivot_ = std::numeric_limits<double>::infinity();

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu_(i, k)) > std::abs(lu_(pivot_row, k)))
        pivot_row = i;

    const double pivot = std::abs(lu_(pivot_row, k));
    smallest_pivot_ = std::min(smallest_pivot_, pivot);
    if (!(pivot >= pivot_tolerance))
      throw SolveError(pivot, k);

    if (pivot_row != k) {
      std::swap(perm_[k], perm_[pivot_row]);
      for (std::size_t j = 0; j < n; ++j)
        std::swap(lu_(k, j), lu_(pivot_row, j));
    }

    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = lu_(i, k) / lu_(k, k);
      lu_(i, k) = m;
      for (std::size_t j = k + 1; j < n; ++j)
        lu_(i, j) -= m * lu_(k, j);
    }
  }
}

std::vector<double> LuFactorization::solve(std::span<const double> b) const
{
  const std::size_t n = lu_.rows();
  if (b.size() != n)
    throw Error(ErrorKind::InvalidArgument, "right-hand side has wrong length");

  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = b[perm_[i]];
    for (std::size_t j = 0; j < i; ++j)
      sum -= lu_(i, j) * x[j];
    x[i] = sum;
  }
  for (std::size_t i = n; i-- > 0;) {
    double sum = x[i];
    for (std::size_t j = i + 1; j < n; ++j)
      sum -= lu_(i, j) * x[j];
    x[i] = sum / lu_(i, i);
  }
  return x;
}

} // namespace bem
