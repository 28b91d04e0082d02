#pragma once

#include <string>

#include <json.hpp>

#include "cayley/clifford.hpp"
#include "cayley/degree.hpp"
#include "cayley/matrix.hpp"
#include "cayley/representation.hpp"

namespace cayley::io {

using Json = nlohmann::ordered_json;

/// {"n", "re", "im"}, row-major; "im" optional on input.
Json matrix_to_json(const ComplexMatrix& m);
/// Throws ParseError on malformed input.
ComplexMatrix matrix_from_json(const Json& j);

/// {"coords_re", "coords_im"}.
Json algebra_vector_to_json(const AlgebraVector& x);
AlgebraVector algebra_vector_from_json(const Json& j);

/// {"n", "coeffs_re", "coeffs_im"} in bitmask order.
Json clifford_to_json(const CliffordElement& u);
CliffordElement clifford_from_json(const Json& j);

/// Complex scalars as [re, im].
Json complex_to_json(Complex z);
Json polynomial_to_json(const Polynomial& p);

/// {"polynomial", "roots", "count", "elements", ...}.
Json fiber_report_to_json(const FiberReport& report);

/// {"family", "n", "m"?, "basis"?}. Custom families need "basis".
Representation representation_from_json(const Json& j);

/// Reads and parses a JSON file; ParseError on I/O or syntax failure.
Json read_json_file(const std::string& path);

/// Parses "diag(a, b, ...)", "identity N", or a JSON matrix literal. A bare
/// "I" or "identity" means identity(default_n). Entries accept complex forms
/// like 2, -0.5, 2i, 1+2i, 3-4.5i.
ComplexMatrix parse_matrix_expression(const std::string& text, int default_n = 0);

/// Parses a complex scalar in the shorthand syntax.
Complex parse_complex(const std::string& text);

}  // namespace cayley::io
