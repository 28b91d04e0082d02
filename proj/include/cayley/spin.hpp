#pragma once

#include "cayley/clifford.hpp"
#include "cayley/random.hpp"

namespace cayley {

/// An even Clifford element g with g alpha(g) = 1 and g V alpha(g) = V.
class SpinElement {
 public:
  /// Validates membership; throws NotInSpin with the offending residual.
  /// Residuals are measured relative to max(1, ||g||^2).
  static SpinElement from(CliffordElement g, double tol = 1e-8);

  const CliffordElement& value() const { return value_; }
  int n() const { return value_.n(); }
  SpinElement operator-() const;

 private:
  explicit SpinElement(CliffordElement g) : value_(std::move(g)) {}
  CliffordElement value_;
};

/// exp(u) for u in degree 2, via the action of exp(gamma(u)) on 1.
SpinElement spin_exp(const CliffordElement& u);
/// Same, forming the full 2^n x 2^n matrix exponential.
SpinElement spin_exp_reference(const CliffordElement& u);

/// T(g): column j holds the degree-1 coefficients of g z_j alpha(g).
ComplexMatrix vector_action(const SpinElement& g);
/// Validates `g` first.
ComplexMatrix vector_action(const CliffordElement& g);

/// tau(u) x = -2 iota(x) u, i.e. tau(u) = 2 (U - U^T) with U_ab = u_ab, a < b.
/// Throws DegenerateInput if u has components outside degree 2.
ComplexMatrix tau(const CliffordElement& u);
/// Inverse of tau on skew matrices; throws NotSkew.
CliffordElement tau_inv(const ComplexMatrix& s);

/// (1 - b)(1 + b)^{-1}; throws SingularShift when the reciprocal condition
/// of 1 + b falls below rtol.
ComplexMatrix cayley_gamma(const ComplexMatrix& b, double rtol = kDefaultRtol);

/// sum_k u^{∧k} / k! for degree-2 u.
CliffordElement exterior_exp(const CliffordElement& u);

struct SpinCayley {
  CliffordElement pr2;
  Complex pr0;
};

/// Cayley map of the spin representation: the degree-2 part of g.
SpinCayley spin_cayley(const SpinElement& g);

/// -2 pr0(g) tau^{-1}(Gamma(T(g))).
CliffordElement spin_cayley_closed_form(const SpinElement& g);

/// Matrix of w -> g w alpha(g) on the whole algebra (2^n x 2^n).
ComplexMatrix conjugation_matrix(const SpinElement& g);

/// Random complex degree-2 element with ||tau(u)||_F uniform in [lo, hi].
CliffordElement random_bivector(int n, Rng& rng, double lo = 0.5, double hi = 2.5);

/// spin_exp of a random bivector, resampled until |det(1 + T(g))| / 2^n is
/// at least 1e-3 so the Cayley transform of T(g) is well conditioned.
SpinElement sample_spin(int n, Rng& rng);

}  // namespace cayley
