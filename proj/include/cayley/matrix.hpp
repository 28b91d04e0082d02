#pragma once

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace cayley {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kDefaultRtol = 1e-9;
inline constexpr double kDefaultClusterTol = 1e-6;
inline constexpr double kRootDedupTol = 1e-7;

bool all_finite(const ComplexMatrix& a);

/// Throws DegenerateInput if `a` is not square or carries NaN/Inf.
void require_square(const ComplexMatrix& a, std::string_view what);

ComplexMatrix identity(Eigen::Index n);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// tr(a b) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||a - b||_F / max(1, ||b||_F).
double relative_residual(const ComplexMatrix& a, const ComplexMatrix& b);

/// Dense polynomial with complex coefficients in ascending degree.
class Polynomial {
 public:
  Polynomial() = default;

  /// Leading coefficients with |c| <= strip_tol * max|c| are dropped.
  explicit Polynomial(std::vector<Complex> coeffs, double strip_tol = 1e-14);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex leading() const;
  double max_abs_coeff() const;

  Complex operator()(Complex t) const;
  Polynomial derivative() const;

 private:
  std::vector<Complex> coeffs_;
};

/// Spectral projectors onto generalized eigenspaces, one per eigenvalue
/// cluster. Sum of projectors is the identity; sum of eigenvalue*projector is
/// the semisimple part.
struct SpectralDecomposition {
  std::vector<Complex> eigenvalues;
  std::vector<ComplexMatrix> projectors;
  std::vector<int> multiplicities;

  ComplexMatrix semisimple() const;
};

/// Solves A X = B with partial pivoting. Throws SingularMatrix when the
/// reciprocal condition estimate falls below rtol.
ComplexMatrix solve_linear(const ComplexMatrix& a, const ComplexMatrix& b,
                           double rtol = kDefaultRtol);

Complex determinant(const ComplexMatrix& a);

/// Raw eigenvalues (with multiplicity) from a complex Schur reduction.
std::vector<Complex> eigenvalues(const ComplexMatrix& a);

/// Eigenvalues are grouped by single linkage at distance
/// cluster_tol * (1 + ||A||_F). Projectors come from contour integrals of the
/// resolvent, so defective clusters are handled without eigenvectors.
SpectralDecomposition spectral(const ComplexMatrix& a,
                               double cluster_tol = kDefaultClusterTol);

/// All roots with multiplicity (companion eigenvalues, Newton polished).
std::vector<Complex> poly_roots(const Polynomial& p);

struct RootCluster {
  Complex value;
  int multiplicity = 0;
};

/// Greedy merge of roots closer than `tol`; cluster value is the mean.
std::vector<RootCluster> dedup_roots(std::span<const Complex> roots,
                                     double tol = kRootDedupTol);

/// Scaling and squaring with a Taylor kernel.
ComplexMatrix matrix_exp(const ComplexMatrix& a);

/// exp(A) v by stepping a truncated Taylor series; never forms exp(A).
ComplexVector expm_action(const ComplexMatrix& a, const ComplexVector& v);

/// Number of singular values <= rel_tol * sigma_max.
int numeric_kernel_dim(const ComplexMatrix& a, double rel_tol = 1e-7);

}  // namespace cayley
