#include "cayley/jordan.hpp"

#include <algorithm>
#include <cmath>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

void require_invertible(const ComplexMatrix& g) {
  require_square(g, "group element");
  const double scale = std::pow(std::max(1.0, g.norm()), static_cast<double>(g.rows()));
  if (std::abs(determinant(g)) < 1e-12 * scale) {
    throw MathError(ErrorCode::SingularMatrix, "group element is not invertible");
  }
}

}  // namespace

MultiplicativeJordan multiplicative_jordan(const ComplexMatrix& g, double cluster_tol) {
  require_invertible(g);
  const SpectralDecomposition sd = spectral(g, cluster_tol);
  MultiplicativeJordan out;
  out.semisimple = sd.semisimple();
  out.unipotent = solve_linear(out.semisimple, g);
  return out;
}

MultiplicativeJordan multiplicative_jordan(const GroupElement& g, double cluster_tol) {
  return multiplicative_jordan(g.matrix, cluster_tol);
}

AdditiveJordan additive_jordan(const ComplexMatrix& x, double cluster_tol) {
  require_square(x, "algebra element");
  const SpectralDecomposition sd = spectral(x, cluster_tol);
  AdditiveJordan out;
  out.semisimple = sd.semisimple();
  out.nilpotent = x - out.semisimple;
  return out;
}

AdditiveJordan additive_jordan(const Representation& rep, const AlgebraVector& x, double cluster_tol) {
  return additive_jordan(rep.materialize(x), cluster_tol);
}

EhuDecomposition ehu_decomposition(const ComplexMatrix& g, double cluster_tol) {
  require_invertible(g);
  const SpectralDecomposition sd = spectral(g, cluster_tol);
  const auto n = g.rows();
  EhuDecomposition out;
  out.elliptic = ComplexMatrix::Zero(n, n);
  out.hyperbolic = ComplexMatrix::Zero(n, n);
  ComplexMatrix semisimple = ComplexMatrix::Zero(n, n);
  for (std::size_t k = 0; k < sd.eigenvalues.size(); ++k) {
    const Complex lambda = sd.eigenvalues[k];
    const double modulus = std::abs(lambda);
    out.elliptic += (lambda / modulus) * sd.projectors[k];
    out.hyperbolic += modulus * sd.projectors[k];
    semisimple += lambda * sd.projectors[k];
  }
  out.unipotent = solve_linear(semisimple, g);
  return out;
}

EhuDecomposition ehu_decomposition(const GroupElement& g, double cluster_tol) {
  return ehu_decomposition(g.matrix, cluster_tol);
}

double nilpotency_residual(const ComplexMatrix& x) {
  require_square(x, "matrix");
  ComplexMatrix power = identity(x.rows());
  for (Eigen::Index k = 0; k < x.rows(); ++k) power = (power * x).eval();
  const double scale = std::pow(std::max(1.0, x.norm()), static_cast<double>(x.rows()));
  return power.norm() / scale;
}

double spectral_radius_residual(const ComplexMatrix& x) {
  double radius = 0.0;
  for (const Complex& lambda : eigenvalues(x)) radius = std::max(radius, std::abs(lambda));
  return radius / std::max(1.0, x.norm());
}

}  // namespace cayley
