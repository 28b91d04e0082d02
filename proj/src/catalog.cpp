#include "cayley/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

ComplexMatrix unit(int n, int i, int j) {
  ComplexMatrix e = ComplexMatrix::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

ComplexVector basis_vector(int dim, int i, Complex value = 1.0) {
  ComplexVector v = ComplexVector::Zero(dim);
  v(i) = value;
  return v;
}

void require_at_least(int value, int lo, const char* what) {
  if (value < lo) {
    throw MathError(ErrorCode::DegenerateInput,
                    std::string(what) + " must be at least " + std::to_string(lo));
  }
}

// Raising generators: eigenvectors of ad(h) with positive eigenvalue for a
// regular h in the span of the Cartan generators.
std::vector<ComplexVector> positive_root_vectors(const Representation& rep,
                                                 const std::vector<ComplexVector>& cartan) {
  ComplexVector h = ComplexVector::Zero(rep.g_dim());
  for (std::size_t k = 0; k < cartan.size(); ++k) {
    const double w = 1.0 + 1.41421356 * static_cast<double>(k) + 0.3 * static_cast<double>(k * k);
    h += w * cartan[k];
  }
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(ad_matrix(rep, AlgebraVector{h}));
  if (solver.info() != Eigen::Success) {
    throw MathError(ErrorCode::ConvergenceFailure, "root decomposition did not converge");
  }
  std::vector<std::pair<double, ComplexVector>> roots;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double value = solver.eigenvalues()(i).real();
    if (value <= 1e-6) continue;
    ComplexVector v = solver.eigenvectors().col(i);
    Eigen::Index top = 0;
    v.cwiseAbs().maxCoeff(&top);
    v /= v(top);
    // Drop roundoff so the stored generators are clean.
    for (Eigen::Index k = 0; k < v.size(); ++k) {
      if (std::abs(v(k).real()) < 1e-13) v(k).real(0.0);
      if (std::abs(v(k).imag()) < 1e-13) v(k).imag(0.0);
    }
    roots.emplace_back(value, std::move(v));
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ComplexVector> out;
  for (auto& r : roots) out.push_back(std::move(r.second));
  return out;
}

}  // namespace

Representation make_sl(int n) {
  require_at_least(n, 2, "sl(n): n");
  std::vector<ComplexMatrix> basis;
  for (int i = 0; i + 1 < n; ++i) basis.push_back(unit(n, i, i) - unit(n, i + 1, i + 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) basis.push_back(unit(n, i, j));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) basis.push_back(unit(n, j, i));

  const int dim = n * n - 1;
  RepMetadata meta;
  meta.spec = {Family::sl, n, 0};
  meta.rank = n - 1;
  for (int i = 0; i + 1 < n; ++i) meta.cartan.push_back(basis_vector(dim, i));
  for (int k = 0; k < n * (n - 1) / 2; ++k) meta.positive.push_back(basis_vector(dim, n - 1 + k));
  return Representation("sl(" + std::to_string(n) + ")", std::move(basis), std::move(meta));
}

Representation make_gl(int n) {
  require_at_least(n, 1, "gl(n): n");
  std::vector<ComplexMatrix> basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) basis.push_back(unit(n, i, j));

  const int dim = n * n;
  RepMetadata meta;
  meta.spec = {Family::gl, n, 0};
  meta.rank = n;
  for (int i = 0; i < n; ++i) meta.cartan.push_back(basis_vector(dim, i * n + i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) meta.positive.push_back(basis_vector(dim, i * n + j));
  return Representation("gl(" + std::to_string(n) + ")", std::move(basis), std::move(meta));
}

Representation make_so(int n) {
  require_at_least(n, 2, "so(n): n");
  std::vector<ComplexMatrix> basis;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      basis.push_back(unit(n, a, b) - unit(n, b, a));
      pairs.emplace_back(a, b);
    }

  const int dim = n * (n - 1) / 2;
  RepMetadata meta;
  meta.spec = {Family::so, n, 0};
  meta.rank = n / 2;
  // i J_{2k, 2k+1} has spectrum {+1, -1, 0...}.
  for (int k = 0; 2 * k + 1 < n; ++k) {
    const auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(2 * k, 2 * k + 1));
    meta.cartan.push_back(basis_vector(dim, static_cast<int>(it - pairs.begin()), Complex(0.0, 1.0)));
  }
  Representation rep("so(" + std::to_string(n) + ")", std::move(basis), meta);
  meta.positive = positive_root_vectors(rep, meta.cartan);
  return Representation(rep.name(), rep.basis(), std::move(meta));
}

Representation make_sl2_irrep(int m) {
  require_at_least(m, 1, "sl2 irrep: m");
  const int d = m + 1;
  ComplexMatrix h = ComplexMatrix::Zero(d, d);
  ComplexMatrix e = ComplexMatrix::Zero(d, d);
  ComplexMatrix f = ComplexMatrix::Zero(d, d);
  for (int p = 0; p <= m; ++p) {
    h(p, p) = static_cast<double>(m - 2 * p);
    if (p > 0) e(p - 1, p) = static_cast<double>(p);
    if (p < m) f(p + 1, p) = static_cast<double>(m - p);
  }
  RepMetadata meta;
  meta.spec = {Family::sl2_irrep, 2, m};
  meta.rank = 1;
  meta.cartan.push_back(basis_vector(3, 0));
  meta.positive.push_back(basis_vector(3, 1));
  return Representation("sl2_irrep(" + std::to_string(m) + ")", {h, e, f}, std::move(meta));
}

Representation make_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::sl: return make_sl(spec.n);
    case Family::gl: return make_gl(spec.n);
    case Family::so: return make_so(spec.n);
    case Family::sl2_irrep: return make_sl2_irrep(spec.m);
    case Family::custom: break;
  }
  throw MathError(ErrorCode::Unsupported, "custom representations need an explicit basis");
}

Representation make_adjoint(const Representation& rep) {
  auto consts = rep.structure_constants();
  RepMetadata meta = rep.metadata();
  meta.spec.family = Family::custom;
  return Representation("ad(" + rep.name() + ")", std::move(consts), std::move(meta));
}

void require_same_algebra(const Representation& a, const Representation& b) {
  if (a.g_dim() != b.g_dim()) {
    throw MathError(ErrorCode::IncompatibleAlgebras, "algebras have different dimensions");
  }
  const auto ca = a.structure_constants();
  const auto cb = b.structure_constants();
  double scale = 1.0;
  double diff = 0.0;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    scale = std::max(scale, ca[i].cwiseAbs().maxCoeff());
    diff = std::max(diff, (ca[i] - cb[i]).cwiseAbs().maxCoeff());
  }
  if (diff > 1e-8 * scale) {
    throw MathError(ErrorCode::IncompatibleAlgebras,
                    "structure constants differ (max deviation " + std::to_string(diff) + ")");
  }
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

namespace {

RepMetadata derived_metadata(const Representation& rep) {
  RepMetadata meta = rep.metadata();
  meta.spec.family = Family::custom;
  return meta;
}

}  // namespace

Representation direct_sum(const Representation& a, const Representation& b) {
  require_same_algebra(a, b);
  const int va = a.v_dim();
  const int vb = b.v_dim();
  std::vector<ComplexMatrix> basis;
  for (int i = 0; i < a.g_dim(); ++i) {
    ComplexMatrix m = ComplexMatrix::Zero(va + vb, va + vb);
    m.topLeftCorner(va, va) = a.basis(i);
    m.bottomRightCorner(vb, vb) = b.basis(i);
    basis.push_back(std::move(m));
  }
  return Representation(a.name() + "+" + b.name(), std::move(basis), derived_metadata(a));
}

Representation tensor(const Representation& a, const Representation& b) {
  require_same_algebra(a, b);
  const ComplexMatrix ia = identity(a.v_dim());
  const ComplexMatrix ib = identity(b.v_dim());
  std::vector<ComplexMatrix> basis;
  for (int i = 0; i < a.g_dim(); ++i) basis.push_back(kron(a.basis(i), ib) + kron(ia, b.basis(i)));
  return Representation(a.name() + "*" + b.name(), std::move(basis), derived_metadata(a));
}

Representation dual(const Representation& rep) {
  std::vector<ComplexMatrix> basis;
  for (const auto& b : rep.basis()) basis.push_back(-b.transpose());
  return Representation(rep.name() + "^T", std::move(basis), derived_metadata(rep));
}

Representation tensor_power(const Representation& rep, int k) {
  require_at_least(k, 1, "tensor power");
  Representation out = rep;
  for (int i = 1; i < k; ++i) out = tensor(out, rep);
  return out;
}

DynkinFit dynkin_ratio(const Representation& rep, const Representation& reference) {
  if (rep.g_dim() != reference.g_dim()) {
    throw MathError(ErrorCode::IncompatibleAlgebras, "algebras have different dimensions");
  }
  const ComplexMatrix& g = rep.gram();
  const ComplexMatrix& r = reference.gram();
  const Complex j = (r.adjoint() * g).trace() / r.squaredNorm();
  DynkinFit fit;
  fit.ratio = j.real();
  fit.residual = (g - j * r).norm() / std::max(g.norm(), 1e-300);
  if (fit.residual > 1e-6 || std::abs(j.imag()) > 1e-6 * std::max(1.0, std::abs(j))) {
    throw MathError(ErrorCode::NotProportional,
                    "trace forms are not proportional (residual " + std::to_string(fit.residual) + ")");
  }
  return fit;
}

double sl2_casimir_index(int m) {
  require_at_least(m, 1, "sl2 irrep: m");
  // Killing form of sl(2) from its adjoint representation; alpha(H) = 2.
  const Representation adjoint = make_adjoint(make_sl2_irrep(1));
  const double killing_hh = adjoint.gram()(0, 0).real();
  const double alpha_sq = 4.0 / killing_hh;
  const double lambda = 0.5 * m;  // lambda = (m/2) alpha, rho = alpha/2
  const double casimir = lambda * (lambda + 1.0) * alpha_sq;
  return static_cast<double>(m + 1) / 3.0 * casimir;
}

// ---------------------------------------------------------------------------

std::string_view to_string(SampleKind kind) {
  switch (kind) {
    case SampleKind::generic: return "generic";
    case SampleKind::hyperbolic: return "hyperbolic";
    case SampleKind::elliptic: return "elliptic";
    case SampleKind::unipotent: return "unipotent";
    case SampleKind::cartan: return "cartan";
    case SampleKind::trace_free: return "trace_free";
  }
  return "generic";
}

SampleKind sample_kind_from_string(std::string_view name) {
  for (auto kind : {SampleKind::generic, SampleKind::hyperbolic, SampleKind::elliptic,
                    SampleKind::unipotent, SampleKind::cartan, SampleKind::trace_free}) {
    if (name == to_string(kind)) return kind;
  }
  throw ParseError("unknown sample kind '" + std::string(name) + "'");
}

ComplexVector sample_algebra(const Representation& rep, Rng& rng, double lo, double hi) {
  ComplexVector c(rep.g_dim());
  for (int i = 0; i < rep.g_dim(); ++i) c(i) = rng.complex_normal();
  const double target = rng.uniform(lo, hi);
  return c * (target / std::max(c.norm(), 1e-300));
}

namespace {

const std::vector<ComplexVector>& require_cartan(const Representation& rep) {
  if (rep.metadata().cartan.empty()) {
    throw MathError(ErrorCode::Unsupported, rep.name() + " has no Cartan metadata");
  }
  return rep.metadata().cartan;
}

ComplexVector trace_free_diagonal(const Representation& rep, Rng& rng) {
  const int n = rep.metadata().spec.n;
  // Monic, no t^{n-1} term (trace 0), constant (-1)^n (determinant 1).
  std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1, Complex(0.0));
  coeffs[0] = (n % 2 == 0) ? 1.0 : -1.0;
  for (int k = 1; k + 1 < n; ++k) coeffs[static_cast<std::size_t>(k)] = rng.complex_normal();
  coeffs[static_cast<std::size_t>(n)] = 1.0;
  const auto roots = poly_roots(Polynomial(coeffs));

  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  Complex total = 0.0;
  for (int i = 0; i < n; ++i) {
    h(i, i) = std::log(roots[static_cast<std::size_t>(i)]);
    total += h(i, i);
  }
  // Sum of logs is 2 pi i k; shift one branch so exp(h) stays in SL(n).
  h(n - 1, n - 1) -= total;
  return rep.project(h).coords;
}

}  // namespace

ElementRecipe sample_recipe(const Representation& rep, SampleKind kind, Rng& rng) {
  ElementRecipe recipe;
  recipe.kind = kind;
  const int dim = rep.g_dim();
  switch (kind) {
    case SampleKind::generic:
      recipe.factors.push_back(sample_algebra(rep, rng));
      break;
    case SampleKind::hyperbolic:
    case SampleKind::elliptic: {
      const auto& cartan = require_cartan(rep);
      const ComplexVector b = sample_algebra(rep, rng, 0.2, 0.6);
      const Complex phase = kind == SampleKind::hyperbolic ? Complex(1.0) : Complex(0.0, 1.0);
      ComplexVector h = ComplexVector::Zero(dim);
      for (const auto& c : cartan) h += (0.6 * rng.normal()) * phase * c;
      recipe.factors = {b, h, -b};
      break;
    }
    case SampleKind::cartan: {
      const auto& cartan = require_cartan(rep);
      ComplexVector h = ComplexVector::Zero(dim);
      for (const auto& c : cartan) h += 0.5 * rng.complex_normal() * c;
      recipe.factors.push_back(h);
      break;
    }
    case SampleKind::unipotent: {
      if (rep.metadata().positive.empty()) {
        throw MathError(ErrorCode::Unsupported, rep.name() + " has no nilpotent generators");
      }
      ComplexVector x = ComplexVector::Zero(dim);
      for (const auto& p : rep.metadata().positive) x += 0.7 * rng.complex_normal() * p;
      recipe.factors.push_back(x);
      break;
    }
    case SampleKind::trace_free: {
      if (rep.metadata().spec.family != Family::sl) {
        throw MathError(ErrorCode::Unsupported, "trace_free sampling needs the standard sl(n)");
      }
      const ComplexVector b = sample_algebra(rep, rng, 0.2, 0.6);
      recipe.factors = {b, trace_free_diagonal(rep, rng), -b};
      break;
    }
  }
  return recipe;
}

GroupElement realize(const Representation& rep, const ElementRecipe& recipe) {
  GroupElement g{identity(rep.v_dim()), std::string(to_string(recipe.kind)), 0};
  for (const auto& f : recipe.factors) g.matrix = (g.matrix * matrix_exp(rep.materialize(f))).eval();
  return g;
}

GroupElement sample_element(const Representation& rep, SampleKind kind, std::uint64_t seed) {
  Rng rng(derive_seed(seed, to_string(kind), 0));
  GroupElement g = realize(rep, sample_recipe(rep, kind, rng));
  g.seed = seed;
  return g;
}

}  // namespace cayley
