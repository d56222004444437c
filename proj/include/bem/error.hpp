#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bem {

enum class ErrorKind {
  InvalidMesh,
  InvalidGrid,
  Domain,
  DegenerateElement,
  SingularKernel,
  UnknownProblem,
  UnsupportedOrder,
  Integration,
  UnsupportedMesh,
  SolveFailure,
  OutOfDomain,
  EmptyInput,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Base error for everything the library throws. The kind lets callers
// branch without string matching.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

// Raised when a quadrature rule sees a non-finite integrand value.
class IntegrationError : public Error {
public:
  IntegrationError(double point, double value);

  double point() const noexcept { return point_; }
  double value() const noexcept { return value_; }

private:
  double point_;
  double value_;
};

// Raised by the LU factorization; carries the smallest pivot magnitude seen.
class SolveError : public Error {
public:
  SolveError(double smallest_pivot, std::size_t column);

  double smallest_pivot() const noexcept { return smallest_pivot_; }
  std::size_t column() const noexcept { return column_; }

private:
  double smallest_pivot_;
  std::size_t column_;
};

} // namespace bem
