#include "cayley/representation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cayley/errors.hpp"
#include "cayley/kernels.hpp"

namespace cayley {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::sl: return "sl";
    case Family::gl: return "gl";
    case Family::so: return "so";
    case Family::sl2_irrep: return "sl2_irrep";
    case Family::custom: return "custom";
  }
  return "custom";
}

Family family_from_string(std::string_view tag) {
  if (tag == "sl") return Family::sl;
  if (tag == "gl") return Family::gl;
  if (tag == "so") return Family::so;
  if (tag == "sl2_irrep") return Family::sl2_irrep;
  if (tag == "custom") return Family::custom;
  throw ParseError("unknown group family '" + std::string(tag) + "'");
}

ComplexMatrix build_gram(std::span<const ComplexMatrix> basis) {
  if (basis.empty()) throw MathError(ErrorCode::DegenerateInput, "empty algebra basis");
  const auto v = basis.front().rows();
  for (const auto& b : basis) {
    require_square(b, "basis matrix");
    if (b.rows() != v) throw MathError(ErrorCode::DimensionMismatch, "basis matrices differ in size");
  }
  ComplexMatrix gram = kernels::trace_pairing(basis, basis);
  // The trace form is symmetric; make that exact.
  gram = (0.5 * (gram + gram.transpose())).eval();

  // |det G| against the Hadamard bound of its columns.
  double hadamard = 1.0;
  for (Eigen::Index j = 0; j < gram.cols(); ++j) hadamard *= gram.col(j).norm();
  const double det = std::abs(determinant(gram));
  if (!(hadamard > 0.0) || det < 1e-12 * hadamard) {
    throw MathError(ErrorCode::DegenerateForm,
                    "trace form is degenerate on the algebra (no Cayley map)");
  }
  return gram;
}

Representation::Representation(std::string name, std::vector<ComplexMatrix> basis, RepMetadata meta)
    : name_(std::move(name)), basis_(std::move(basis)), meta_(std::move(meta)) {
  gram_ = build_gram(basis_);
  v_dim_ = static_cast<int>(basis_.front().rows());
  gram_lu_.compute(gram_);
}

ComplexMatrix Representation::gram_solve(const ComplexMatrix& rhs) const {
  return gram_lu_.solve(rhs);
}

ComplexMatrix Representation::materialize(const ComplexVector& coords) const {
  if (coords.size() != g_dim()) {
    throw MathError(ErrorCode::DimensionMismatch, "coordinate vector length differs from dim g");
  }
  ComplexMatrix m = ComplexMatrix::Zero(v_dim_, v_dim_);
  for (int i = 0; i < g_dim(); ++i) m += coords(i) * basis_[static_cast<std::size_t>(i)];
  return m;
}

AlgebraVector Representation::project(const ComplexMatrix& m) const {
  if (m.rows() != v_dim_ || m.cols() != v_dim_) {
    throw MathError(ErrorCode::DimensionMismatch, "matrix size differs from dim V");
  }
  ComplexVector t(g_dim());
  for (int i = 0; i < g_dim(); ++i) t(i) = trace_of_product(m, basis_[static_cast<std::size_t>(i)]);
  return {gram_lu_.solve(t)};
}

AlgebraVector Representation::coordinates(const ComplexMatrix& m, double& residual) const {
  AlgebraVector x = project(m);
  residual = relative_residual(materialize(x), m);
  return x;
}

std::vector<ComplexMatrix> Representation::structure_constants() const {
  const int d = g_dim();
  std::vector<ComplexMatrix> brackets;
  brackets.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) brackets.push_back(commutator(basis(i), basis(j)));
  }
  // t(k, (i, j)) = tr([B_i, B_j] B_k)
  const ComplexMatrix t = kernels::trace_pairing(basis_, brackets);
  const ComplexMatrix c = gram_lu_.solve(t);
  std::vector<ComplexMatrix> out(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] = c.middleCols(static_cast<Eigen::Index>(i) * d, d);
  return out;
}

double Representation::closure_residual() const {
  const auto consts = structure_constants();
  double worst = 0.0;
  for (int i = 0; i < g_dim(); ++i) {
    for (int j = i + 1; j < g_dim(); ++j) {
      const ComplexMatrix bracket = commutator(basis(i), basis(j));
      const ComplexMatrix back = materialize(ComplexVector(consts[static_cast<std::size_t>(i)].col(j)));
      const double scale = std::max(1.0, basis(i).norm() * basis(j).norm());
      worst = std::max(worst, (back - bracket).norm() / scale);
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------

namespace {

void require_matching(const Representation& rep, const ComplexMatrix& m) {
  require_square(m, "group element");
  if (m.rows() != rep.v_dim()) {
    throw MathError(ErrorCode::DimensionMismatch,
                    "group element is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                        " but the representation space has dimension " + std::to_string(rep.v_dim()));
  }
}

}  // namespace

AlgebraVector cayley(const Representation& rep, const GroupElement& g) {
  require_matching(rep, g.matrix);
  return rep.project(g.matrix);
}

ComplexMatrix cayley_jacobian(const Representation& rep, const GroupElement& g) {
  require_matching(rep, g.matrix);
  std::vector<ComplexMatrix> left;
  left.reserve(static_cast<std::size_t>(rep.g_dim()));
  for (const auto& b : rep.basis()) left.push_back(g.matrix * b);
  // s(i, j) = tr(g B_i B_j); column i of the Jacobian solves G m = s(i, :)^T.
  const ComplexMatrix s = kernels::trace_pairing(left, rep.basis());
  return rep.gram_solve(s.transpose());
}

Complex psi(const Representation& rep, const GroupElement& g) {
  return determinant(cayley_jacobian(rep, g));
}

Complex character(const Representation& rep, const GroupElement& g) {
  require_matching(rep, g.matrix);
  return g.matrix.trace();
}

ComplexMatrix adjoint_matrix(const Representation& rep, const GroupElement& b) {
  require_matching(rep, b.matrix);
  const ComplexMatrix inv = solve_linear(b.matrix, identity(rep.v_dim()));
  std::vector<ComplexMatrix> conj;
  conj.reserve(static_cast<std::size_t>(rep.g_dim()));
  for (const auto& basis : rep.basis()) conj.push_back(b.matrix * basis * inv);
  const ComplexMatrix t = kernels::trace_pairing(conj, rep.basis());
  const ComplexMatrix ad = rep.gram_solve(t.transpose());
  for (int i = 0; i < rep.g_dim(); ++i) {
    const ComplexMatrix back = rep.materialize(ComplexVector(ad.col(i)));
    const double r = relative_residual(back, conj[static_cast<std::size_t>(i)]);
    if (r > 1e-6) {
      throw MathError(ErrorCode::NotEquivariant,
                      "conjugated basis element leaves the algebra (residual " + std::to_string(r) + ")");
    }
  }
  return ad;
}

ComplexMatrix ad_matrix(const Representation& rep, const AlgebraVector& x) {
  const ComplexMatrix xm = rep.materialize(x);
  std::vector<ComplexMatrix> brackets;
  brackets.reserve(static_cast<std::size_t>(rep.g_dim()));
  for (const auto& b : rep.basis()) brackets.push_back(commutator(xm, b));
  const ComplexMatrix t = kernels::trace_pairing(brackets, rep.basis());
  return rep.gram_solve(t.transpose());
}

int centralizer_dim(const Representation& rep, const GroupElement& g) {
  ComplexMatrix a = adjoint_matrix(rep, g);
  a.diagonal().array() -= 1.0;
  return numeric_kernel_dim(a, 1e-7);
}

int centralizer_dim(const Representation& rep, const AlgebraVector& x) {
  return numeric_kernel_dim(ad_matrix(rep, x), 1e-7);
}

int group_rank(const Representation& rep) {
  if (rep.metadata().rank >= 0) return rep.metadata().rank;
  // Fixed irrational-looking coordinates give a regular element generically.
  ComplexVector c(rep.g_dim());
  for (int i = 0; i < rep.g_dim(); ++i) {
    c(i) = Complex(std::sin(1.0 + 2.3 * i), std::cos(0.7 + 1.9 * i)) * 0.4;
  }
  return centralizer_dim(rep, AlgebraVector{c});
}

Representation restrict_to_subalgebra(const Representation& rep, std::span<const int> indices) {
  std::vector<ComplexMatrix> basis;
  std::string label = rep.name() + "|{";
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const int i = indices[k];
    if (i < 0 || i >= rep.g_dim()) throw MathError(ErrorCode::DegenerateInput, "basis index out of range");
    basis.push_back(rep.basis(i));
    label += (k ? "," : "") + std::to_string(i);
  }
  label += "}";
  RepMetadata meta;
  meta.spec.family = Family::custom;
  meta.spec.n = rep.metadata().spec.n;
  Representation sub(std::move(label), std::move(basis), std::move(meta));
  const double r = sub.closure_residual();
  if (r > 1e-8) {
    throw MathError(ErrorCode::NotASubalgebra,
                    "selected basis is not closed under brackets (residual " + std::to_string(r) + ")");
  }
  return sub;
}

Representation change_basis(const Representation& rep, const ComplexMatrix& change) {
  if (change.rows() != rep.g_dim() || change.cols() != rep.g_dim()) {
    throw MathError(ErrorCode::DimensionMismatch, "change of basis must be dim g square");
  }
  std::vector<ComplexMatrix> basis;
  for (int j = 0; j < rep.g_dim(); ++j) basis.push_back(rep.materialize(ComplexVector(change.col(j))));
  RepMetadata meta = rep.metadata();
  Eigen::PartialPivLU<ComplexMatrix> lu(change);
  for (auto& c : meta.cartan) c = lu.solve(c);
  for (auto& c : meta.positive) c = lu.solve(c);
  return Representation(rep.name() + "'", std::move(basis), std::move(meta));
}

GroupElement exp_element(const Representation& rep, const ComplexVector& coords) {
  return {matrix_exp(rep.materialize(coords)), "exp", 0};
}

GroupElement identity_element(const Representation& rep) {
  return {identity(rep.v_dim()), "identity", 0};
}

}  // namespace cayley
