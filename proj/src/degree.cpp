#include "cayley/degree.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cayley/catalog.hpp"
#include "cayley/errors.hpp"
#include "cayley/representation.hpp"
#include "cayley/spin.hpp"

namespace cayley {

std::string_view to_string(FiberFamily family) {
  return family == FiberFamily::sl ? "sl" : "spin";
}

FiberFamily fiber_family_from_string(std::string_view name) {
  if (name == "sl") return FiberFamily::sl;
  if (name == "spin") return FiberFamily::spin;
  throw ParseError("unknown fiber family '" + std::string(name) + "'");
}

namespace {

// Coefficients of det(t + X) by sampling on a circle of radius r.
std::vector<Complex> shifted_det_coeffs(const ComplexMatrix& x) {
  const auto n = static_cast<int>(x.rows());
  const int nodes = n + 1;
  const double r = std::max(1.0, x.norm() / std::sqrt(static_cast<double>(n)));
  std::vector<Complex> values(static_cast<std::size_t>(nodes));
  for (int k = 0; k < nodes; ++k) {
    const Complex t = std::polar(r, 2.0 * std::numbers::pi * k / nodes);
    ComplexMatrix shifted = x;
    shifted.diagonal().array() += t;
    values[static_cast<std::size_t>(k)] = determinant(shifted);
  }
  std::vector<Complex> coeffs(static_cast<std::size_t>(nodes));
  for (int j = 0; j < nodes; ++j) {
    Complex acc{};
    for (int k = 0; k < nodes; ++k) {
      acc += values[static_cast<std::size_t>(k)] * std::polar(1.0, -2.0 * std::numbers::pi * j * k / nodes);
    }
    coeffs[static_cast<std::size_t>(j)] = acc / (static_cast<double>(nodes) * std::pow(r, j));
  }
  return coeffs;
}

std::vector<Complex> distinct_roots(const std::vector<Complex>& roots, bool drop_zero,
                                    std::vector<std::string>& notes) {
  std::vector<Complex> out;
  for (const auto& c : dedup_roots(roots)) {
    if (drop_zero && std::abs(c.value) <= 1e-8) {
      notes.push_back("root at 0 skipped");
      continue;
    }
    if (c.multiplicity > 1) {
      notes.push_back("repeated root of multiplicity " + std::to_string(c.multiplicity));
    }
    out.push_back(c.value);
  }
  return out;
}

}  // namespace

Polynomial minimal_poly_coeffs(FiberFamily family, const ComplexMatrix& x) {
  require_square(x, "fiber target");
  const auto n = static_cast<int>(x.rows());
  std::vector<Complex> coeffs = shifted_det_coeffs(x);
  if (family == FiberFamily::sl) {
    coeffs[0] -= 1.0;
  } else {
    if (n < 2) throw MathError(ErrorCode::DegenerateInput, "spin fiber needs n >= 2");
    coeffs[static_cast<std::size_t>(n - 2)] -= std::ldexp(1.0, n);
  }
  return Polynomial(std::move(coeffs));
}

FiberReport sl_fiber(const ComplexMatrix& x) {
  require_square(x, "fiber target");
  const auto n = static_cast<int>(x.rows());
  if (std::abs(x.trace()) > 1e-9 * std::max(1.0, x.norm())) {
    throw MathError(ErrorCode::DegenerateInput, "sl fiber target must be trace-free");
  }
  const Representation rep = make_sl(n);

  FiberReport report;
  report.family = FiberFamily::sl;
  report.n = n;
  report.target = x;
  report.polynomial = minimal_poly_coeffs(FiberFamily::sl, x);
  report.regular = centralizer_dim(rep, rep.project(x)) == n - 1;

  const auto& p = report.polynomial.coeffs();
  if (std::abs(p.back() - 1.0) > 1e-9 || std::abs(p[static_cast<std::size_t>(n - 1)] - x.trace()) > 1e-8) {
    report.notes.push_back("leading coefficients deviate from (tr X, 1)");
  }

  report.roots = poly_roots(report.polynomial);
  for (const Complex t : distinct_roots(report.roots, false, report.notes)) {
    FiberElement e;
    e.root = t;
    e.matrix = x;
    e.matrix.diagonal().array() += t;
    const ComplexMatrix image = rep.materialize(cayley(rep, GroupElement{e.matrix, "fiber", 0}));
    const double det_defect = std::abs(determinant(e.matrix) - 1.0);
    e.residual = std::max(relative_residual(image, x), det_defect);
    report.elements.push_back(std::move(e));
  }
  report.count = static_cast<int>(report.elements.size());
  return report;
}

FiberReport sl_principal_nilpotent_fiber(int n) {
  if (n < 2) throw MathError(ErrorCode::DegenerateInput, "principal nilpotent fiber needs n >= 2");
  ComplexMatrix x = ComplexMatrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) x(i, i + 1) = 1.0;
  return sl_fiber(x);
}

FiberReport spin_fiber(const ComplexMatrix& x, bool lift) {
  require_square(x, "fiber target");
  const auto n = static_cast<int>(x.rows());
  if ((x + x.transpose()).norm() > 1e-10 * std::max(1.0, x.norm())) {
    throw MathError(ErrorCode::NotSkew, "spin fiber target must be skew-symmetric");
  }
  const Representation rep = make_so(n);

  FiberReport report;
  report.family = FiberFamily::spin;
  report.n = n;
  report.target = x;
  report.polynomial = minimal_poly_coeffs(FiberFamily::spin, x);
  report.regular = centralizer_dim(rep, rep.project(x)) == n / 2;
  report.roots = poly_roots(report.polynomial);

  const ComplexMatrix one = identity(n);
  const double half_power = std::pow(2.0, 0.5 * n);
  // Every lift g has pr2(g) = -2^{1 - n/2} tau^{-1}(X); tau of that is the
  // expected image.
  const ComplexMatrix expected = (-2.0 / half_power) * x;

  for (const Complex t : distinct_roots(report.roots, true, report.notes)) {
    FiberElement e;
    e.root = t;
    try {
      // det(1 + X/t) = 2^n / t^2 at a root, so the shift is invertible even
      // when a small eigenvalue of X makes it badly conditioned.
      e.matrix = cayley_gamma(x / t, 1e-14);
    } catch (const MathError& err) {
      if (err.code() != ErrorCode::SingularShift) throw;
      report.notes.push_back("1 + X/t singular at a root; skipped");
      continue;
    }
    // T^{-1} = T^T, so ||T||^2 bounds the condition number; a root near an
    // eigenvalue of X gives a legitimately huge T.
    const double cond = std::max(1.0, e.matrix.squaredNorm());
    const double orth = (e.matrix.transpose() * e.matrix - one).norm() / cond;
    const double det_t = std::abs(determinant(e.matrix) - 1.0) / cond;
    const Complex det_shift = determinant(one + e.matrix);
    const double square = std::abs(det_shift - t * t) / std::max(1.0, std::norm(t));
    e.residual = std::max({orth, det_t, square});

    if (lift) {
      const CliffordElement w = tau_inv(x / t);
      CliffordElement g = (t / half_power) * exterior_exp(-2.0 * w);
      const SpinElement spin = SpinElement::from(g, 1e-6);
      // Both sides carry the forward error of the Cayley transform, ~eps cond.
      const double cover = (vector_action(spin) - e.matrix).norm() / cond;
      const double image = relative_residual(tau(spin_cayley(spin).pr2), expected);
      e.residual = std::max({e.residual, cover, image});
      e.lifts.push_back(g);
      e.lifts.push_back(-g);
    }
    report.elements.push_back(std::move(e));
  }
  report.count = static_cast<int>(report.elements.size());
  return report;
}

ComplexMatrix random_trace_free(int n, Rng& rng) {
  ComplexMatrix x(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) x(i, j) = rng.normal();
  const Complex mean = x.trace() / static_cast<double>(n);
  x.diagonal().array() -= mean;
  return x;
}

ComplexMatrix random_skew(int n, Rng& rng) {
  ComplexMatrix x = ComplexMatrix::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const double v = rng.normal();
      x(a, b) = v;
      x(b, a) = -v;
    }
  return x;
}

}  // namespace cayley
