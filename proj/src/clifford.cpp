#include "cayley/clifford.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

constexpr int kMaxGenerators = 20;

std::size_t dim_of(int n) {
  if (n < 0 || n > kMaxGenerators) {
    throw MathError(ErrorCode::DegenerateInput, "Clifford generator count out of range: " + std::to_string(n));
  }
  return std::size_t{1} << n;
}

void require_same_n(const CliffordElement& a, const CliffordElement& b) {
  if (a.n() != b.n()) {
    throw MathError(ErrorCode::DimensionMismatch, "Clifford elements over different dimensions (" +
                                                      std::to_string(a.n()) + " vs " + std::to_string(b.n()) + ")");
  }
}

int grade(std::size_t mask) { return std::popcount(mask); }

template <typename SignFn>
CliffordElement map_by_grade(const CliffordElement& u, SignFn sign) {
  CliffordElement out = u;
  for (std::size_t i = 0; i < out.size(); ++i) out.coeffs()[i] *= sign(grade(i));
  return out;
}

void require_vector(const CliffordElement& x, const char* what) {
  if (off_degree_norm(x, 1) > 1e-12 * std::max(1.0, x.norm())) {
    throw MathError(ErrorCode::DegenerateInput, std::string(what) + " expects a degree-1 element");
  }
}

}  // namespace

CliffordElement::CliffordElement(int n) : n_(n), coeffs_(dim_of(n), Complex{}) {}

CliffordElement::CliffordElement(int n, std::vector<Complex> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != dim_of(n)) {
    throw MathError(ErrorCode::DimensionMismatch, "Clifford element over " + std::to_string(n) +
                                                      " generators needs " + std::to_string(dim_of(n)) +
                                                      " coefficients");
  }
}

CliffordElement CliffordElement::scalar(int n, Complex c) {
  CliffordElement out(n);
  out.coeffs_[0] = c;
  return out;
}

CliffordElement CliffordElement::blade(int n, Mask mask, Complex c) {
  CliffordElement out(n);
  if (mask >= out.size()) throw MathError(ErrorCode::DegenerateInput, "blade index out of range");
  out.coeffs_[mask] = c;
  return out;
}

CliffordElement CliffordElement::vector(int n, const ComplexVector& x) {
  if (x.size() != n) throw MathError(ErrorCode::DimensionMismatch, "vector length differs from n");
  CliffordElement out(n);
  for (int i = 0; i < n; ++i) out.coeffs_[std::size_t{1} << i] = x(i);
  return out;
}

double CliffordElement::norm() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& other) {
  require_same_n(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& other) {
  require_same_n(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CliffordElement& CliffordElement::operator*=(Complex c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
CliffordElement operator-(CliffordElement a) { return a *= -1.0; }
CliffordElement operator*(Complex c, CliffordElement a) { return a *= c; }
CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) { return clifford_mul(a, b); }

CliffordElement clifford_mul(const CliffordElement& u, const CliffordElement& v) {
  require_same_n(u, v);
  CliffordElement out(u.n());
  kernels::clifford_product(u.n(), u.coeffs(), v.coeffs(), out.coeffs());
  return out;
}

CliffordElement exterior_mul(const CliffordElement& u, const CliffordElement& v) {
  require_same_n(u, v);
  CliffordElement out(u.n());
  kernels::exterior_product(u.n(), u.coeffs(), v.coeffs(), out.coeffs());
  return out;
}

CliffordElement clifford_commutator(const CliffordElement& u, const CliffordElement& v) {
  return clifford_mul(u, v) - clifford_mul(v, u);
}

CliffordElement alpha(const CliffordElement& u) {
  return map_by_grade(u, [](int k) { return ((k * (k - 1) / 2) % 2) ? -1.0 : 1.0; });
}

CliffordElement kappa(const CliffordElement& u) {
  return map_by_grade(u, [](int k) { return (k % 2) ? -1.0 : 1.0; });
}

CliffordElement pr(const CliffordElement& u, int k) {
  return map_by_grade(u, [k](int g) { return g == k ? 1.0 : 0.0; });
}

Complex pr0(const CliffordElement& u) { return u.coeffs().empty() ? Complex{} : u.coeffs()[0]; }

double off_degree_norm(const CliffordElement& u, int k) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (grade(i) != k) s += std::norm(u.coeffs()[i]);
  return std::sqrt(s);
}

double odd_norm(const CliffordElement& u) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (grade(i) % 2) s += std::norm(u.coeffs()[i]);
  return std::sqrt(s);
}

CliffordElement iota(const CliffordElement& x, const CliffordElement& u) {
  require_same_n(x, u);
  require_vector(x, "iota");
  CliffordElement out(u.n());
  for (int i = 0; i < u.n(); ++i) {
    const Mask bit = Mask{1} << i;
    const Complex xi = x[bit];
    if (xi == Complex{}) continue;
    for (std::size_t m = 0; m < u.size(); ++m) {
      const auto mask = static_cast<Mask>(m);
      if (!(mask & bit) || u[mask] == Complex{}) continue;
      // Sign from moving z_i to the front of z_I.
      const double sign = (std::popcount(mask & (bit - 1)) % 2) ? -1.0 : 1.0;
      out[mask ^ bit] += sign * xi * u[mask];
    }
  }
  return out;
}

CliffordElement epsilon(const CliffordElement& x, const CliffordElement& u) {
  require_vector(x, "epsilon");
  return exterior_mul(pr(x, 1), u);
}

ComplexVector vector_part(const CliffordElement& u) {
  ComplexVector v(u.n());
  for (int i = 0; i < u.n(); ++i) v(i) = u[Mask{1} << i];
  return v;
}

Complex pairing(const CliffordElement& u, const CliffordElement& w) {
  require_same_n(u, w);
  Complex s{};
  for (std::size_t i = 0; i < u.size(); ++i) s += u.coeffs()[i] * w.coeffs()[i];
  return s;
}

ComplexMatrix gamma_matrix(const CliffordElement& u) {
  return kernels::left_multiplication(u.n(), u.coeffs());
}

VolumeIdempotents volume_idempotents(int n) {
  if (n < 1) throw MathError(ErrorCode::DegenerateInput, "volume element needs n >= 1");
  const int quarter_turns = (n * (n - 1) / 2) % 4;
  static const Complex kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Mask top = static_cast<Mask>((std::size_t{1} << n) - 1);
  VolumeIdempotents out;
  out.mu = CliffordElement::blade(n, top, kPowers[quarter_turns]);
  const CliffordElement one = CliffordElement::scalar(n, 1.0);
  out.e_plus = 0.5 * (one + out.mu);
  out.e_minus = 0.5 * (one - out.mu);
  return out;
}

}  // namespace cayley
