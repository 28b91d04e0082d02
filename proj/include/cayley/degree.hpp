#pragma once

#include <string>
#include <vector>

#include "cayley/clifford.hpp"
#include "cayley/matrix.hpp"
#include "cayley/random.hpp"

namespace cayley {

enum class FiberFamily { sl, spin };

std::string_view to_string(FiberFamily family);
/// Throws ParseError on an unknown name.
FiberFamily fiber_family_from_string(std::string_view name);

struct FiberElement {
  Complex root;
  /// SL: A = X + t I.  Spin: T(a) = (1 - X/t)(1 + X/t)^{-1}.
  ComplexMatrix matrix;
  /// Spin only: the two preimages ±g in the double cover.
  std::vector<CliffordElement> lifts;
  /// Largest consistency defect of the element. SL: Phi mismatch and |det - 1|.
  /// Spin: orthogonality, det, square law and lift checks, scaled by ||T||^2.
  double residual = 0.0;
};

struct FiberReport {
  FiberFamily family = FiberFamily::sl;
  int n = 0;
  ComplexMatrix target;
  Polynomial polynomial;
  /// All roots of the polynomial, with multiplicity.
  std::vector<Complex> roots;
  std::vector<FiberElement> elements;
  /// Number of distinct admissible roots that produced an element.
  int count = 0;
  /// Whether the target passed the centralizer-dimension regularity test.
  bool regular = false;
  std::vector<std::string> notes;
};

/// Coefficients p_j of the fiber polynomial, ascending:
///   sl:   det(t + X) - 1
///   spin: det(t + X) - 2^n t^{n-2}
/// Built by sampling det(t + X) on n + 1 points of a circle and inverting
/// the discrete Fourier transform.
Polynomial minimal_poly_coeffs(FiberFamily family, const ComplexMatrix& x);

/// Throws DegenerateInput unless tr X ≈ 0.
FiberReport sl_fiber(const ComplexMatrix& x);

/// Fiber over the single n x n nilpotent Jordan block.
FiberReport sl_principal_nilpotent_fiber(int n);

/// Throws NotSkew unless X is skew. With `lift`, each element carries ±g
/// with g = (t / 2^{n/2}) exterior_exp(-2 tau^{-1}(X / t)).
FiberReport spin_fiber(const ComplexMatrix& x, bool lift = true);

/// Real Gaussian entries, trace removed.
ComplexMatrix random_trace_free(int n, Rng& rng);
/// Real Gaussian entries, skew part.
ComplexMatrix random_skew(int n, Rng& rng);

}  // namespace cayley
