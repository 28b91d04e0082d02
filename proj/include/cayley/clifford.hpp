#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cayley/kernels.hpp"
#include "cayley/matrix.hpp"

namespace cayley {

using kernels::Mask;

/// Element of the Clifford algebra of C^n with orthonormal basis z_1..z_n,
/// identified with the exterior algebra. Coefficient I is the coefficient of
/// z_I = z_{i1} ... z_{ik} (increasing order); bit i-1 of I marks i in I.
class CliffordElement {
 public:
  CliffordElement() = default;
  explicit CliffordElement(int n);
  /// Throws DimensionMismatch unless coeffs.size() == 2^n.
  CliffordElement(int n, std::vector<Complex> coeffs);

  static CliffordElement scalar(int n, Complex c);
  static CliffordElement blade(int n, Mask mask, Complex c = 1.0);
  /// sum_i x_i z_i.
  static CliffordElement vector(int n, const ComplexVector& x);

  int n() const { return n_; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  std::vector<Complex>& coeffs() { return coeffs_; }
  Complex operator[](Mask mask) const { return coeffs_[mask]; }
  Complex& operator[](Mask mask) { return coeffs_[mask]; }

  /// Euclidean norm of the coefficient vector.
  double norm() const;

  CliffordElement& operator+=(const CliffordElement& other);
  CliffordElement& operator-=(const CliffordElement& other);
  CliffordElement& operator*=(Complex c);

 private:
  int n_ = 0;
  std::vector<Complex> coeffs_;
};

CliffordElement operator+(CliffordElement a, const CliffordElement& b);
CliffordElement operator-(CliffordElement a, const CliffordElement& b);
CliffordElement operator-(CliffordElement a);
CliffordElement operator*(Complex c, CliffordElement a);
/// Clifford product.
CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);

/// Throws DimensionMismatch when n differs.
CliffordElement clifford_mul(const CliffordElement& u, const CliffordElement& v);
CliffordElement exterior_mul(const CliffordElement& u, const CliffordElement& v);
/// uv - vu.
CliffordElement clifford_commutator(const CliffordElement& u, const CliffordElement& v);

/// Principal antiautomorphism: (-1)^{k(k-1)/2} on degree k.
CliffordElement alpha(const CliffordElement& u);
/// Parity automorphism: (-1)^k on degree k.
CliffordElement kappa(const CliffordElement& u);
/// Degree-k part.
CliffordElement pr(const CliffordElement& u, int k);
Complex pr0(const CliffordElement& u);
/// Norm of the part outside degree k.
double off_degree_norm(const CliffordElement& u, int k);
/// Norm of the odd-degree part.
double odd_norm(const CliffordElement& u);

/// Contraction by a vector x (degree-1 element): the odd derivation with
/// iota(x) y = (x, y) for vectors y.
CliffordElement iota(const CliffordElement& x, const CliffordElement& u);
/// Exterior multiplication x ∧ u.
CliffordElement epsilon(const CliffordElement& x, const CliffordElement& u);

/// Coefficients of the degree-1 part as a vector in C^n.
ComplexVector vector_part(const CliffordElement& u);

/// Orthonormal pairing sum_I u_I w_I.
Complex pairing(const CliffordElement& u, const CliffordElement& w);

/// Left multiplication by u in the z_I basis (2^n x 2^n).
ComplexMatrix gamma_matrix(const CliffordElement& u);

struct VolumeIdempotents {
  CliffordElement mu;
  CliffordElement e_plus;
  CliffordElement e_minus;
};

/// mu = i^{n(n-1)/2} z_{1..n} (so mu^2 = 1), e_± = (1 ± mu) / 2.
VolumeIdempotents volume_idempotents(int n);

}  // namespace cayley
