#include "cayley/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "cayley/degree.hpp"
#include "cayley/errors.hpp"
#include "cayley/jordan.hpp"
#include "cayley/spin.hpp"

namespace cayley::checks {

namespace {

double vec_residual(const ComplexVector& a, const ComplexVector& b) {
  return (a - b).norm() / std::max(1.0, b.norm());
}

GroupElement sample(const Representation& rep, SampleKind kind, Rng& rng) {
  return realize(rep, sample_recipe(rep, kind, rng));
}

ComplexMatrix inverse(const ComplexMatrix& g) { return solve_linear(g, identity(g.rows())); }

ComplexVector phi(const Representation& rep, const ComplexMatrix& g) {
  return cayley(rep, GroupElement{g}).coords;
}

// g = b D (I + N) b^{-1} with repeated eigenvalues in D and N a nilpotent
// supported on the repeated blocks.
struct JordanSample {
  ComplexMatrix g;
  ComplexMatrix conj;
  ComplexMatrix diag;
  ComplexMatrix nil;
};

JordanSample jordan_sample(int n, Rng& rng, bool with_unipotent = true) {
  if (n != 3 && n != 4) throw MathError(ErrorCode::Unsupported, "Jordan samples exist for n = 3, 4");
  const Representation rep = make_sl(n);
  JordanSample s;
  std::vector<Complex> d;
  s.nil = ComplexMatrix::Zero(n, n);
  auto nonzero = [&rng]() {
    Complex x;
    do x = rng.complex_normal(); while (std::abs(x) < 0.3);
    return x;
  };
  for (;;) {
    const Complex a = std::exp(0.4 * rng.complex_normal());
    if (n == 3) {
      d = {a, a, 1.0 / (a * a)};
    } else if (rng.uniform(0.0, 1.0) < 0.5) {
      d = {a, a, 1.0 / a, 1.0 / a};
    } else {
      const Complex c = std::exp(0.4 * rng.complex_normal());
      d = {a, a, c, 1.0 / (a * a * c)};
    }
    // Distinct clusters must be well separated.
    double gap = 1e9;
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = i + 1; j < d.size(); ++j)
        if (d[i] != d[j]) gap = std::min(gap, std::abs(d[i] - d[j]));
    if (gap > 0.2) break;
  }
  s.diag = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) s.diag(i, i) = d[static_cast<std::size_t>(i)];
  if (with_unipotent) {
    s.nil(0, 1) = nonzero();
    if (n == 4 && d[2] == d[3]) s.nil(2, 3) = nonzero();
  }
  s.conj = matrix_exp(rep.materialize(sample_algebra(rep, rng, 0.2, 0.6)));
  s.g = s.conj * s.diag * (identity(n) + s.nil) * inverse(s.conj);
  return s;
}

CliffordElement random_clifford(int n, Rng& rng) {
  CliffordElement u(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(u.size()));
  for (auto& c : u.coeffs()) c = scale * rng.complex_normal();
  return u;
}

CliffordElement random_vector(int n, Rng& rng) {
  ComplexVector x(n);
  for (int i = 0; i < n; ++i) x(i) = rng.complex_normal();
  return CliffordElement::vector(n, x);
}

// Cartan span in coordinates; returns the component of c outside it.
double outside_span(const std::vector<ComplexVector>& span, const ComplexVector& c) {
  ComplexMatrix basis(c.size(), static_cast<Eigen::Index>(span.size()));
  for (std::size_t k = 0; k < span.size(); ++k) basis.col(static_cast<Eigen::Index>(k)) = span[k];
  const ComplexVector fit = basis.colPivHouseholderQr().solve(c);
  return (c - basis * fit).norm() / std::max(1.0, c.norm());
}

Complex sl2_ratio(const Representation& rep) {
  static const Representation reference = make_sl2_irrep(1);
  return dynkin_ratio(rep, reference).ratio;
}

}  // namespace

// -- closed forms -----------------------------------------------------------

double sl_projection(int n, Rng& rng) {
  const Representation rep = make_sl(n);
  const ComplexMatrix a = sample(rep, SampleKind::generic, rng).matrix;
  ComplexMatrix expected = a;
  expected.diagonal().array() -= a.trace() / static_cast<double>(n);
  return relative_residual(rep.materialize(phi(rep, a)), expected);
}

double so_projection(int n, Rng& rng) {
  const Representation rep = make_so(n);
  const ComplexMatrix a = sample(rep, SampleKind::generic, rng).matrix;
  const ComplexMatrix expected = 0.5 * (a - a.transpose());
  return relative_residual(rep.materialize(phi(rep, a)), expected);
}

double psi_half_trace(Rng& rng) {
  const Representation rep = make_sl(2);
  const GroupElement a = sample(rep, SampleKind::generic, rng);
  const Complex expected = 0.5 * a.matrix.trace();
  return std::abs(psi(rep, a) - expected) / std::max(1.0, std::abs(expected));
}

double psi_inverse_trace(int n, Rng& rng) {
  const Representation rep = make_sl(n);
  const GroupElement a = sample(rep, SampleKind::generic, rng);
  const Complex expected = inverse(a.matrix).trace() / static_cast<double>(n);
  return std::abs(psi(rep, a) - expected) / std::max(1.0, std::abs(expected));
}

double psi_identity(const Representation& rep) {
  return std::abs(psi(rep, identity_element(rep)) - 1.0);
}

double jacobian_identity(const Representation& rep) {
  return (cayley_jacobian(rep, identity_element(rep)) - identity(rep.g_dim())).norm();
}

double sl2_irrep_series(int m, Rng& rng) {
  const Representation rep = make_sl2_irrep(m);
  const Complex a = std::exp(Complex(0.6 * rng.normal(), rng.uniform(-std::numbers::pi, std::numbers::pi)));
  ComplexMatrix g = ComplexMatrix::Zero(m + 1, m + 1);
  Complex sum = 0.0;
  for (int p = 0; p <= m; ++p) {
    const Complex w = std::pow(a, m - 2 * p);
    g(p, p) = w;
    sum += static_cast<double>(m - 2 * p) * w;
  }
  const double md = m;
  const Complex expected = 3.0 / (md * md * md + 3.0 * md * md + 2.0 * md) * sum;
  return std::abs(phi(rep, g)(0) - expected) / std::max(1.0, std::abs(expected));
}

// -- rep-model --------------------------------------------------------------

double equivariance(const Representation& rep, Rng& rng) {
  const GroupElement b = sample(rep, SampleKind::generic, rng);
  const GroupElement g = sample(rep, SampleKind::generic, rng);
  const ComplexMatrix conj = b.matrix * g.matrix * inverse(b.matrix);
  const ComplexVector lhs = phi(rep, conj);
  const ComplexVector rhs = adjoint_matrix(rep, b) * phi(rep, g.matrix);
  return vec_residual(lhs, rhs);
}

double cartan_stability(const Representation& rep, Rng& rng) {
  const GroupElement h = sample(rep, SampleKind::cartan, rng);
  return outside_span(rep.metadata().cartan, phi(rep, h.matrix));
}

double psi_basis_independence(const Representation& rep, Rng& rng) {
  const int d = rep.g_dim();
  ComplexMatrix change = identity(d) + 0.3 * rng.complex_gaussian(d, d) / std::sqrt(static_cast<double>(d));
  const Representation other = change_basis(rep, change);
  const ElementRecipe recipe = sample_recipe(rep, SampleKind::generic, rng);
  const GroupElement g = realize(rep, recipe);
  const Complex p = psi(rep, g);
  return std::abs(psi(other, g) - p) / std::max(1.0, std::abs(p));
}

double jacobian_finite_difference(const Representation& rep, Rng& rng) {
  const GroupElement g = sample(rep, SampleKind::generic, rng);
  const ComplexVector h = sample_algebra(rep, rng);
  const double eps = 1e-6;
  const ComplexMatrix x = rep.materialize(h);
  const ComplexVector plus = phi(rep, g.matrix * matrix_exp(eps * x));
  const ComplexVector minus = phi(rep, g.matrix * matrix_exp(-eps * x));
  const ComplexVector fd = (plus - minus) / (2.0 * eps);
  return vec_residual(cayley_jacobian(rep, g) * h, fd);
}

double centralizer_equality(const Representation& rep, Rng& rng) {
  static constexpr SampleKind kKinds[] = {SampleKind::generic, SampleKind::cartan, SampleKind::hyperbolic,
                                          SampleKind::elliptic};
  const SampleKind kind = kKinds[rng.uniform_int(0, 3)];
  const GroupElement g = sample(rep, kind, rng);
  if (std::abs(psi(rep, g)) <= 1e-6) return 0.0;
  const int group_side = centralizer_dim(rep, g);
  const int algebra_side = centralizer_dim(rep, cayley(rep, g));
  return std::abs(group_side - algebra_side);
}

// -- Jordan -----------------------------------------------------------------

double jordan_semisimple(int n, Rng& rng) {
  const Representation rep = make_sl(n);
  const JordanSample s = jordan_sample(n, rng);
  const MultiplicativeJordan mj = multiplicative_jordan(s.g);
  const ComplexMatrix lhs = rep.materialize(phi(rep, mj.semisimple));
  const ComplexMatrix rhs = additive_jordan(rep.materialize(phi(rep, s.g))).semisimple;
  return relative_residual(lhs, rhs);
}

double jordan_commute(int n, Rng& rng) {
  const JordanSample s = jordan_sample(n, rng);
  const MultiplicativeJordan mj = multiplicative_jordan(s.g);
  const double scale = std::max(1.0, s.g.norm() * s.g.norm());
  const double commute = commutator(mj.semisimple, mj.unipotent).norm() / scale;
  const double rebuild = relative_residual(mj.semisimple * mj.unipotent, s.g);
  const ComplexMatrix expected = s.conj * s.diag * inverse(s.conj);
  const double oracle = relative_residual(mj.semisimple, expected);
  return std::max({commute, rebuild, oracle});
}

double ehu_recombine(int n, Rng& rng) {
  const JordanSample s = jordan_sample(n, rng);
  const EhuDecomposition d = ehu_decomposition(s.g);
  const double scale = std::max(1.0, s.g.norm() * s.g.norm());
  const double rebuild = relative_residual(d.elliptic * d.hyperbolic * d.unipotent, s.g);
  const double commute = std::max({commutator(d.elliptic, d.hyperbolic).norm(),
                                   commutator(d.elliptic, d.unipotent).norm(),
                                   commutator(d.hyperbolic, d.unipotent).norm()}) /
                         scale;
  ComplexMatrix phase = s.diag;
  for (int i = 0; i < n; ++i) phase(i, i) /= std::abs(phase(i, i));
  const double oracle = relative_residual(d.elliptic, s.conj * phase * inverse(s.conj));
  return std::max({rebuild, commute, oracle});
}

double phi_b_nilpotent(int n, Rng& rng) {
  const Representation rep = make_sl(n);
  const JordanSample s = jordan_sample(n, rng);
  const ComplexMatrix inv = inverse(s.conj);
  const ComplexMatrix b = s.conj * s.diag * inv;
  const ComplexMatrix w = s.conj * (identity(n) + s.nil) * inv;
  const ComplexMatrix diff = rep.materialize(phi(rep, b * w) - phi(rep, b));
  return nilpotency_residual(diff);
}

double regular_element(Rng& rng) {
  const Representation rep = make_sl(3);
  const bool principal = rng.uniform(0.0, 1.0) < 0.5;
  const JordanSample s = jordan_sample(3, rng, principal);
  const bool regular = centralizer_dim(rep, GroupElement{s.g}) == group_rank(rep);
  return regular == principal ? 0.0 : 1.0;
}

// -- unipotent --------------------------------------------------------------

double unipotent_image_nilpotent(const Representation& rep, Rng& rng) {
  const GroupElement u = sample(rep, SampleKind::unipotent, rng);
  return spectral_radius_residual(rep.materialize(cayley(rep, u)));
}

double principal_nilpotent_fiber(int n) {
  const FiberReport report = sl_principal_nilpotent_fiber(n);
  double worst = 0.0;
  for (const auto& e : report.elements) worst = std::max(worst, e.residual);
  return std::abs(report.count - n) + (worst > 1e-9 ? 1.0 : 0.0);
}

// -- hyperbolic -------------------------------------------------------------

double hyperbolic_psi(const Representation& rep, Rng& rng) {
  const GroupElement g = sample(rep, SampleKind::hyperbolic, rng);
  return std::max(0.0, 1e-6 - std::abs(psi(rep, g)));
}

double singular_trace_free(int n, Rng& rng) {
  const Representation rep = make_sl(n);
  const GroupElement a = sample(rep, SampleKind::trace_free, rng);
  return std::abs(psi(rep, GroupElement{inverse(a.matrix)}));
}

double hyperbolic_fiber_unique(int n, Rng& rng) {
  const Representation rep = make_sl(n);
  const GroupElement h = sample(rep, SampleKind::hyperbolic, rng);
  const FiberReport report = sl_fiber(rep.materialize(cayley(rep, h)));
  int hyperbolic = 0;
  double match = 1.0;
  for (const auto& e : report.elements) {
    bool positive = true;
    for (const Complex& lambda : eigenvalues(e.matrix)) {
      if (std::abs(lambda.imag()) > 1e-8 * (1.0 + std::abs(lambda)) || lambda.real() <= 0.0) positive = false;
    }
    if (positive) {
      ++hyperbolic;
      match = std::min(match, relative_residual(e.matrix, h.matrix));
    }
  }
  return std::abs(hyperbolic - 1) + (match > 1e-6 ? 1.0 : 0.0);
}

// -- restriction ------------------------------------------------------------

double restriction_cartan_sl3(Rng& rng) {
  const Representation rep = make_sl(3);
  const int indices[] = {0, 1};
  const Representation sub = restrict_to_subalgebra(rep, indices);
  const GroupElement h = sample(rep, SampleKind::cartan, rng);
  const ComplexVector full = phi(rep, h.matrix);
  const ComplexVector part = phi(sub, h.matrix);
  return ((full.head(2) - part).norm() + full.tail(full.size() - 2).norm()) / std::max(1.0, full.norm());
}

double restriction_so4_ideals(Rng& rng, int ideal) {
  const Representation so4 = make_so(4);
  // Basis order J12, J13, J14, J23, J24, J34.
  ComplexMatrix change = ComplexMatrix::Zero(6, 6);
  const int pairs[3][2] = {{0, 5}, {1, 4}, {2, 3}};
  const double signs[3] = {1.0, -1.0, 1.0};
  for (int k = 0; k < 3; ++k) {
    change(pairs[k][0], k) = 1.0;
    change(pairs[k][1], k) = signs[k];
    change(pairs[k][0], k + 3) = 1.0;
    change(pairs[k][1], k + 3) = -signs[k];
  }
  const Representation rep = change_basis(so4, change);
  const int offset = ideal == 0 ? 0 : 3;
  const int indices[] = {offset, offset + 1, offset + 2};
  const Representation sub = restrict_to_subalgebra(rep, indices);

  ComplexVector coords = ComplexVector::Zero(6);
  coords.segment(offset, 3) = sample_algebra(sub, rng);
  const ComplexMatrix g = matrix_exp(rep.materialize(coords));
  const ComplexVector full = phi(rep, g);
  const ComplexVector part = phi(sub, g);
  ComplexVector expected = ComplexVector::Zero(6);
  expected.segment(offset, 3) = part;
  return vec_residual(full, expected);
}

double restriction_full_index(const Representation& rep, Rng& rng) {
  std::vector<int> all(static_cast<std::size_t>(rep.g_dim()));
  std::iota(all.begin(), all.end(), 0);
  const Representation sub = restrict_to_subalgebra(rep, all);
  const GroupElement g = sample(rep, SampleKind::generic, rng);
  const double gram = (sub.gram() - rep.gram()).norm() / std::max(1.0, rep.gram().norm());
  return std::max(gram, vec_residual(phi(sub, g.matrix), phi(rep, g.matrix)));
}

// -- combinators ------------------------------------------------------------

double direct_sum_identity(int m1, int m2, Rng& rng) {
  const Representation r1 = make_sl2_irrep(m1);
  const Representation r2 = make_sl2_irrep(m2);
  const Representation sum = direct_sum(r1, r2);
  const ElementRecipe recipe = sample_recipe(r1, SampleKind::generic, rng);
  const Complex j1 = sl2_ratio(r1);
  const Complex j2 = sl2_ratio(r2);
  const ComplexVector expected =
      (j1 * phi(r1, realize(r1, recipe).matrix) + j2 * phi(r2, realize(r2, recipe).matrix)) / (j1 + j2);
  return vec_residual(phi(sum, realize(sum, recipe).matrix), expected);
}

double tensor_identity(int m1, int m2, Rng& rng) {
  const Representation r1 = make_sl2_irrep(m1);
  const Representation r2 = make_sl2_irrep(m2);
  const Representation prod = tensor(r1, r2);
  const ElementRecipe recipe = sample_recipe(r1, SampleKind::generic, rng);
  const ComplexMatrix g1 = realize(r1, recipe).matrix;
  const ComplexMatrix g2 = realize(r2, recipe).matrix;
  const Complex j1 = sl2_ratio(r1);
  const Complex j2 = sl2_ratio(r2);
  const Complex j12 = sl2_ratio(prod);
  const ComplexVector expected = (j1 * g2.trace() * phi(r1, g1) + g1.trace() * j2 * phi(r2, g2)) / j12;
  return vec_residual(phi(prod, realize(prod, recipe).matrix), expected);
}

double tensor_power_identity(int m, int k, Rng& rng) {
  const Representation r = make_sl2_irrep(m);
  const Representation power = tensor_power(r, k);
  const ElementRecipe recipe = sample_recipe(r, SampleKind::generic, rng);
  const ComplexMatrix g = realize(r, recipe).matrix;
  const Complex factor = std::pow(g.trace() / static_cast<double>(r.v_dim()), k - 1);
  return vec_residual(phi(power, realize(power, recipe).matrix), factor * phi(r, g));
}

double dual_identity(int m, Rng& rng) {
  const Representation r = make_sl2_irrep(m);
  const Representation d = dual(r);
  const ElementRecipe recipe = sample_recipe(r, SampleKind::generic, rng);
  const ComplexVector expected = -phi(r, inverse(realize(r, recipe).matrix));
  return vec_residual(phi(d, realize(d, recipe).matrix), expected);
}

double gram_additivity(int m1, int m2) {
  const Representation r1 = make_sl2_irrep(m1);
  const Representation r2 = make_sl2_irrep(m2);
  const ComplexMatrix g = direct_sum(r1, r2).gram();
  return (g - r1.gram() - r2.gram()).norm() / std::max(1.0, g.norm());
}

double gram_tensor_rule(int m1, int m2) {
  const Representation r1 = make_sl2_irrep(m1);
  const Representation r2 = make_sl2_irrep(m2);
  const ComplexMatrix g = tensor(r1, r2).gram();
  const ComplexMatrix expected = static_cast<double>(r2.v_dim()) * r1.gram() + static_cast<double>(r1.v_dim()) * r2.gram();
  return (g - expected).norm() / std::max(1.0, g.norm());
}

double dynkin_casimir_ratio(int m) {
  const Representation r = make_sl2_irrep(m);
  const double md = m;
  const double power_sum = md * (md + 1.0) * (md + 2.0) / 6.0;
  const double vs_standard = std::abs(sl2_ratio(r).real() - power_sum) / power_sum;
  const Representation adjoint = make_adjoint(make_sl2_irrep(1));
  const double casimir = sl2_casimir_index(m);
  const double vs_adjoint = std::abs(dynkin_ratio(r, adjoint).ratio - casimir) / casimir;
  return vs_standard + vs_adjoint;
}

// -- Clifford ---------------------------------------------------------------

double clifford_associativity(int n, Rng& rng) {
  const CliffordElement u = random_clifford(n, rng);
  const CliffordElement v = random_clifford(n, rng);
  const CliffordElement w = random_clifford(n, rng);
  const double scale = std::max(1.0, u.norm() * v.norm() * w.norm());
  const double cl = ((u * v) * w - u * (v * w)).norm() / scale;
  const double ex = (exterior_mul(exterior_mul(u, v), w) - exterior_mul(u, exterior_mul(v, w))).norm() / scale;
  return std::max(cl, ex);
}

double gamma_homomorphism(int n, Rng& rng) {
  const CliffordElement u = random_clifford(n, rng);
  const CliffordElement v = random_clifford(n, rng);
  const ComplexMatrix rhs = gamma_matrix(u) * gamma_matrix(v);
  return relative_residual(gamma_matrix(u * v), rhs);
}

double trace_law(int n, Rng& rng) {
  const CliffordElement w = random_clifford(n, rng);
  const double dim = std::ldexp(1.0, n);
  double worst = std::abs(pr0(w) - gamma_matrix(w).trace() / dim);
  const auto mask = static_cast<Mask>(rng.uniform_int(0, static_cast<int>(dim) - 1));
  const CliffordElement blade = CliffordElement::blade(n, mask);
  worst = std::max(worst, std::abs(pr0(blade) - gamma_matrix(blade).trace() / dim));
  return worst;
}

double pairing_law(int n, Rng& rng) {
  const CliffordElement u = random_clifford(n, rng);
  const CliffordElement w = random_clifford(n, rng);
  return std::abs(pr0(u * w) - pairing(u, alpha(w))) / std::max(1.0, u.norm() * w.norm());
}

double ei_anticommutator(int n, Rng& rng) {
  const CliffordElement x = random_vector(n, rng);
  const CliffordElement y = random_vector(n, rng);
  const CliffordElement w = random_clifford(n, rng);
  const CliffordElement lhs = epsilon(x, iota(y, w)) + iota(y, epsilon(x, w));
  const CliffordElement rhs = pairing(x, y) * w;
  return (lhs - rhs).norm() / std::max(1.0, rhs.norm());
}

double theta_trace(int n, Rng& rng) {
  const SpinElement g = sample_spin(n, rng);
  const Complex expected = determinant(identity(n) + vector_action(g));
  return std::abs(conjugation_matrix(g).trace() - expected) / std::max(1.0, std::abs(expected));
}

double tau_differential(int n, Rng& rng) {
  const CliffordElement u = random_bivector(n, rng);
  const double eps = 1e-5;
  const ComplexMatrix plus = vector_action(spin_exp(eps * u));
  const ComplexMatrix minus = vector_action(spin_exp(-eps * u));
  return relative_residual((plus - minus) / (2.0 * eps), tau(u));
}

// -- Spin Cayley map ----------------------------------------------------------

double square_law(int n, Rng& rng) {
  const SpinElement g = sample_spin(n, rng);
  const Complex det = determinant(identity(n) + vector_action(g));
  const Complex c = pr0(g.value());
  return std::abs(std::ldexp(1.0, n) * c * c - det) / std::max(1.0, std::abs(det));
}

double commutation_identity(int n, Rng& rng) {
  const CliffordElement w = random_bivector(n, rng);
  const CliffordElement x = random_vector(n, rng);
  const CliffordElement e = exterior_exp(2.0 * w);
  const CliffordElement bracket = clifford_commutator(w, x);
  const CliffordElement lhs = e * (x - bracket);
  const CliffordElement rhs = (x + bracket) * e;
  return (lhs - rhs).norm() / std::max(1.0, rhs.norm());
}

double factorization(int n, Rng& rng) {
  const SpinElement g = sample_spin(n, rng);
  const CliffordElement w = tau_inv(cayley_gamma(vector_action(g)));
  const CliffordElement rebuilt = pr0(g.value()) * exterior_exp(-2.0 * w);
  return (g.value() - rebuilt).norm() / std::max(1.0, g.value().norm());
}

double closed_form_spin(int n, Rng& rng) {
  const SpinElement g = sample_spin(n, rng);
  const CliffordElement image = spin_cayley(g).pr2;
  return (image - spin_cayley_closed_form(g)).norm() / std::max(1.0, image.norm());
}

double double_cover_sign(int n, Rng& rng) {
  const SpinElement g = sample_spin(n, rng);
  const SpinElement h = -g;
  const double sign = std::abs(pr0(h.value()) + pr0(g.value()));
  return sign + relative_residual(vector_action(h), vector_action(g));
}

double vector_action_orthogonal(int n, Rng& rng) {
  const SpinElement g = sample_spin(n, rng);
  const ComplexMatrix t = vector_action(g);
  const double scale = std::max(1.0, t.squaredNorm() / n);
  return (t.transpose() * t - identity(n)).norm() / scale + std::abs(determinant(t) - 1.0);
}

// -- degree -------------------------------------------------------------------

double sl_degree(int n, Rng& rng) {
  return std::abs(sl_fiber(random_trace_free(n, rng)).count - n);
}

double spin_degree(int n, Rng& rng) {
  const int expected = n % 2 == 0 ? n : n - 1;
  return std::abs(spin_fiber(random_skew(n, rng), false).count - expected);
}

double odd_zero_root(int n, Rng& rng) {
  const FiberReport report = spin_fiber(random_skew(n, rng), false);
  const auto zeros = std::count_if(report.roots.begin(), report.roots.end(),
                                   [](const Complex& t) { return std::abs(t) <= 1e-8; });
  return std::abs(static_cast<double>(zeros) - 1.0);
}

double fiber_correctness(int n, Rng& rng) {
  double worst = 0.0;
  for (const auto& e : sl_fiber(random_trace_free(n, rng)).elements) worst = std::max(worst, e.residual);
  for (const auto& e : spin_fiber(random_skew(n, rng), true).elements) worst = std::max(worst, e.residual);
  return worst;
}

// -- inequality ----------------------------------------------------------------

double convexity_inequality(Rng& rng) {
  const int n = rng.uniform_int(2, 16);
  const double scale = rng.uniform(0.05, 3.0);
  std::vector<double> r(static_cast<std::size_t>(n));
  for (auto& x : r) x = scale * rng.normal();
  const double mean = std::accumulate(r.begin(), r.end(), 0.0) / n;
  for (auto& x : r) x -= mean;
  double lhs = 0.0;
  double squares = 0.0;
  for (const double x : r) {
    lhs += x * std::exp(x);
    squares += x * x;
  }
  return std::max(0.0, squares / (2.0 * n) - lhs);
}

}  // namespace cayley::checks
