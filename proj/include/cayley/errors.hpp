#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cayley {

/// Failure categories for mathematical preconditions. The CLI maps every
/// MathError to exit code 3.
enum class ErrorCode {
  SingularMatrix,
  ConvergenceFailure,
  DegenerateInput,
  DegenerateForm,
  NotEquivariant,
  ClusterAmbiguity,
  NotASubalgebra,
  IncompatibleAlgebras,
  NotProportional,
  DimensionMismatch,
  NotInSpin,
  NotSkew,
  SingularShift,
  Unsupported,
};

std::string_view to_string(ErrorCode code);

class MathError : public std::runtime_error {
 public:
  MathError(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed user input (files, expressions, descriptors). Exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cayley
