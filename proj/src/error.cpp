#include "bem/error.hpp"

#include <sstream>

namespace bem {

std::string_view to_string(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::InvalidMesh: return "invalid mesh";
  case ErrorKind::InvalidGrid: return "invalid grid";
  case ErrorKind::Domain: return "domain error";
  case ErrorKind::DegenerateElement: return "degenerate element";
  case ErrorKind::SingularKernel: return "singular kernel";
  case ErrorKind::UnknownProblem: return "unknown problem";
  case ErrorKind::UnsupportedOrder: return "unsupported order";
  case ErrorKind::Integration: return "integration error";
  case ErrorKind::UnsupportedMesh: return "unsupported mesh";
  case ErrorKind::SolveFailure: return "solve failure";
  case ErrorKind::OutOfDomain: return "out of domain";
  case ErrorKind::EmptyInput: return "empty input";
  case ErrorKind::InvalidArgument: return "invalid argument";
  }
  return "unknown error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

namespace {

std::string integration_message(double point, double value)
{
  std::ostringstream os;
  os.precision(17);
  os << "integrand is " << value << " at t = " << point;
  return os.str();
}

std::string solve_message(double pivot, std::size_t column)
{
  std::ostringstream os;
  os.precision(17);
  os << "matrix is singular to working precision; smallest pivot " << pivot
     << " in column " << column;
  return os.str();
}

} // namespace

IntegrationError::IntegrationError(double point, double value)
    : Error(ErrorKind::Integration, integration_message(point, value)), point_(point), value_(value)
{
}

SolveError::SolveError(double smallest_pivot, std::size_t column)
    : Error(ErrorKind::SolveFailure, solve_message(smallest_pivot, column)),
      smallest_pivot_(smallest_pivot),
      column_(column)
{
}

} // namespace bem
