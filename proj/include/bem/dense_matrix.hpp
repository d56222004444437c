#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bem {

/// Row-major dense matrix.
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double value = 0.0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> data() const noexcept { return data_; }

  bool all_finite() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

std::vector<double> multiply(const DenseMatrix& a, std::span<const double> x);

double max_abs(std::span<const double> v);

/// LU factorization with partial (row) pivoting, PA = LU.
class LuFactorization {
public:
  static constexpr double default_pivot_tolerance = 1e-12;

  /// Throws SolveError if any pivot magnitude falls below pivot_tolerance.
  explicit LuFactorization(DenseMatrix a, double pivot_tolerance = default_pivot_tolerance);

  std::vector<double> solve(std::span<const double> b) const;

  double smallest_pivot() const noexcept { return smallest_pivot_; }

private:
  DenseMatrix lu_;
  std::vector<std::size_t> perm_;
  double smallest_pivot_ = 0.0;
};

} // namespace bem
