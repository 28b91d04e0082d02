#include "cayley/spin.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

void require_bivector(const CliffordElement& u, const char* what) {
  if (off_degree_norm(u, 2) > 1e-12 * std::max(1.0, u.norm())) {
    throw MathError(ErrorCode::DegenerateInput, std::string(what) + " expects a pure degree-2 element");
  }
}

ComplexVector unit_scalar(int n) {
  ComplexVector e = ComplexVector::Zero(Eigen::Index{1} << n);
  e(0) = 1.0;
  return e;
}

CliffordElement from_vector(int n, const ComplexVector& v) {
  return CliffordElement(n, std::vector<Complex>(v.data(), v.data() + v.size()));
}

}  // namespace

SpinElement SpinElement::from(CliffordElement g, double tol) {
  const double scale = std::max(1.0, g.norm() * g.norm());
  const double odd = odd_norm(g);
  if (odd > 1e-10 * std::sqrt(scale)) {
    throw MathError(ErrorCode::NotInSpin, "element has odd-degree part of norm " + std::to_string(odd));
  }
  const CliffordElement ga = alpha(g);
  CliffordElement unit_defect = clifford_mul(g, ga);
  unit_defect[0] -= 1.0;
  const double r = unit_defect.norm() / scale;
  if (r > tol) throw MathError(ErrorCode::NotInSpin, "g alpha(g) != 1 (residual " + std::to_string(r) + ")");
  for (int i = 0; i < g.n(); ++i) {
    const CliffordElement image = clifford_mul(clifford_mul(g, CliffordElement::blade(g.n(), Mask{1} << i)), ga);
    const double off = off_degree_norm(image, 1) / scale;
    if (off > tol) {
      throw MathError(ErrorCode::NotInSpin, "g z_" + std::to_string(i + 1) + " alpha(g) leaves V (residual " +
                                                std::to_string(off) + ")");
    }
  }
  return SpinElement(std::move(g));
}

SpinElement SpinElement::operator-() const { return SpinElement(-value_); }

SpinElement spin_exp(const CliffordElement& u) {
  require_bivector(u, "spin_exp");
  const ComplexVector v = expm_action(gamma_matrix(u), unit_scalar(u.n()));
  return SpinElement::from(from_vector(u.n(), v));
}

SpinElement spin_exp_reference(const CliffordElement& u) {
  require_bivector(u, "spin_exp");
  const ComplexMatrix e = matrix_exp(gamma_matrix(u));
  return SpinElement::from(from_vector(u.n(), e.col(0)));
}

ComplexMatrix vector_action(const SpinElement& g) {
  const int n = g.n();
  const CliffordElement ga = alpha(g.value());
  ComplexMatrix t(n, n);
  for (int j = 0; j < n; ++j) {
    const CliffordElement image =
        clifford_mul(clifford_mul(g.value(), CliffordElement::blade(n, Mask{1} << j)), ga);
    t.col(j) = vector_part(image);
  }
  return t;
}

ComplexMatrix vector_action(const CliffordElement& g) { return vector_action(SpinElement::from(g)); }

ComplexMatrix tau(const CliffordElement& u) {
  require_bivector(u, "tau");
  const int n = u.n();
  ComplexMatrix s = ComplexMatrix::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const Complex c = u[(Mask{1} << a) | (Mask{1} << b)];
      s(a, b) += 2.0 * c;
      s(b, a) -= 2.0 * c;
    }
  return s;
}

CliffordElement tau_inv(const ComplexMatrix& s) {
  require_square(s, "tau_inv argument");
  const double skew_defect = (s + s.transpose()).norm();
  if (skew_defect > 1e-10 * std::max(1.0, s.norm())) {
    throw MathError(ErrorCode::NotSkew, "matrix is not skew-symmetric (defect " + std::to_string(skew_defect) + ")");
  }
  const int n = static_cast<int>(s.rows());
  CliffordElement u(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) u[(Mask{1} << a) | (Mask{1} << b)] = 0.5 * s(a, b);
  return u;
}

ComplexMatrix cayley_gamma(const ComplexMatrix& b, double rtol) {
  require_square(b, "Cayley transform argument");
  const ComplexMatrix one = identity(b.rows());
  try {
    // 1 - b and (1 + b)^{-1} commute.
    return solve_linear(one + b, one - b, rtol);
  } catch (const MathError& e) {
    if (e.code() != ErrorCode::SingularMatrix) throw;
    throw MathError(ErrorCode::SingularShift, "1 + b is singular; element lies outside the Cayley chart");
  }
}

CliffordElement exterior_exp(const CliffordElement& u) {
  require_bivector(u, "exterior_exp");
  CliffordElement sum = CliffordElement::scalar(u.n(), 1.0);
  CliffordElement term = sum;
  for (int k = 1; 2 * k <= u.n(); ++k) {
    term = (1.0 / k) * exterior_mul(term, u);
    sum += term;
  }
  return sum;
}

SpinCayley spin_cayley(const SpinElement& g) { return {pr(g.value(), 2), pr0(g.value())}; }

CliffordElement spin_cayley_closed_form(const SpinElement& g) {
  return (-2.0 * pr0(g.value())) * tau_inv(cayley_gamma(vector_action(g)));
}

ComplexMatrix conjugation_matrix(const SpinElement& g) {
  const int n = g.n();
  const std::size_t dim = std::size_t{1} << n;
  const CliffordElement ga = alpha(g.value());
  ComplexMatrix right(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    const CliffordElement col = clifford_mul(CliffordElement::blade(n, static_cast<Mask>(j)), ga);
    for (std::size_t i = 0; i < dim; ++i) right(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = col.coeffs()[i];
  }
  return gamma_matrix(g.value()) * right;
}

CliffordElement random_bivector(int n, Rng& rng, double lo, double hi) {
  CliffordElement u(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) u[(Mask{1} << a) | (Mask{1} << b)] = rng.complex_normal();
  const double size = tau(u).norm();
  const double target = rng.uniform(lo, hi);
  return (target / std::max(size, 1e-300)) * u;
}

SpinElement sample_spin(int n, Rng& rng) {
  const double floor = 1e-3 * std::ldexp(1.0, n);
  for (int attempt = 0; attempt < 100; ++attempt) {
    SpinElement g = spin_exp(random_bivector(n, rng));
    const ComplexMatrix t = vector_action(g);
    if (std::abs(determinant(identity(n) + t)) >= floor) return g;
  }
  throw MathError(ErrorCode::ConvergenceFailure, "could not sample a spin element in the Cayley chart");
}

}  // namespace cayley
