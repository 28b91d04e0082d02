#include "cayley/errors.hpp"

namespace cayley {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::NotEquivariant: return "NotEquivariant";
    case ErrorCode::ClusterAmbiguity: return "ClusterAmbiguity";
    case ErrorCode::NotASubalgebra: return "NotASubalgebra";
    case ErrorCode::IncompatibleAlgebras: return "IncompatibleAlgebras";
    case ErrorCode::NotProportional: return "NotProportional";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotInSpin: return "NotInSpin";
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::SingularShift: return "SingularShift";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

MathError::MathError(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace cayley
