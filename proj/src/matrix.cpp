#include "cayley/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "cayley/errors.hpp"

namespace cayley {

bool all_finite(const ComplexMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) return false;
    }
  }
  return true;
}

void require_square(const ComplexMatrix& a, std::string_view what) {
  if (a.rows() != a.cols()) {
    throw MathError(ErrorCode::DegenerateInput, std::string(what) + " must be square");
  }
  if (!all_finite(a)) {
    throw MathError(ErrorCode::DegenerateInput, std::string(what) + " has non-finite entries");
  }
}

ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.transpose().cwiseProduct(b).sum();
}

double relative_residual(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).norm() / std::max(1.0, b.norm());
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<Complex> coeffs, double strip_tol) : coeffs_(std::move(coeffs)) {
  double scale = 0.0;
  for (const auto& c : coeffs_) scale = std::max(scale, std::abs(c));
  while (!coeffs_.empty() && std::abs(coeffs_.back()) <= strip_tol * scale) coeffs_.pop_back();
}

Complex Polynomial::leading() const { return coeffs_.empty() ? Complex{} : coeffs_.back(); }

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex Polynomial::operator()(Complex t) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial{};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<double>(k);
  return Polynomial(std::move(d), 0.0);
}

// ---------------------------------------------------------------------------
// Dense linear algebra

ComplexMatrix SpectralDecomposition::semisimple() const {
  if (projectors.empty()) return {};
  ComplexMatrix s = ComplexMatrix::Zero(projectors.front().rows(), projectors.front().cols());
  for (std::size_t i = 0; i < projectors.size(); ++i) s += eigenvalues[i] * projectors[i];
  return s;
}

ComplexMatrix solve_linear(const ComplexMatrix& a, const ComplexMatrix& b, double rtol) {
  require_square(a, "solve_linear: A");
  if (b.rows() != a.rows()) {
    throw MathError(ErrorCode::DimensionMismatch, "solve_linear: row count of B differs from A");
  }
  Eigen::PartialPivLU<ComplexMatrix> lu(a);
  // Eigen's estimate is meaningless once a pivot is exactly zero.
  const auto pivots = lu.matrixLU().diagonal().cwiseAbs();
  const double rcond = a.rows() == 0 ? 1.0 : pivots.minCoeff() == 0.0 ? 0.0 : lu.rcond();
  if (!(rcond >= rtol)) {
    throw MathError(ErrorCode::SingularMatrix,
                    "reciprocal condition estimate " + std::to_string(rcond) + " below " +
                        std::to_string(rtol));
  }
  return lu.solve(b);
}

Complex determinant(const ComplexMatrix& a) {
  require_square(a, "determinant");
  if (a.rows() == 0) return 1.0;
  return Eigen::PartialPivLU<ComplexMatrix>(a).determinant();
}

std::vector<Complex> eigenvalues(const ComplexMatrix& a) {
  require_square(a, "eigenvalues");
  if (a.rows() == 0) return {};
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw MathError(ErrorCode::ConvergenceFailure, "complex Schur iteration did not converge");
  }
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

constexpr int kContourNodes = 128;
constexpr double kAmbiguityFactor = 10.0;

}  // namespace

SpectralDecomposition spectral(const ComplexMatrix& a, double cluster_tol) {
  if (!(cluster_tol > 0.0)) {
    throw MathError(ErrorCode::DegenerateInput, "spectral: cluster_tol must be positive");
  }
  const auto eig = eigenvalues(a);
  const int n = static_cast<int>(eig.size());
  SpectralDecomposition out;
  if (n == 0) return out;

  const double delta = cluster_tol * (1.0 + a.norm());
  DisjointSets sets(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(eig[i] - eig[j]) < delta) sets.unite(i, j);
    }
  }
  std::vector<std::vector<int>> members;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int root = sets.find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(members.size());
      members.emplace_back();
    }
    members[slot[root]].push_back(i);
  }
  const int k = static_cast<int>(members.size());

  std::vector<Complex> centers(static_cast<std::size_t>(k));
  std::vector<double> spread(static_cast<std::size_t>(k), 0.0);
  for (int c = 0; c < k; ++c) {
    Complex sum{};
    for (int i : members[c]) sum += eig[i];
    centers[c] = sum / static_cast<double>(members[c].size());
    for (int i : members[c]) spread[c] = std::max(spread[c], std::abs(eig[i] - centers[c]));
  }

  // Clusters that are separated, but only barely, make the Jordan structure
  // ambiguous at this tolerance.
  std::vector<double> nearest(static_cast<std::size_t>(k), std::numeric_limits<double>::infinity());
  for (int c = 0; c < k; ++c) {
    for (int d = 0; d < k; ++d) {
      if (c == d) continue;
      for (int i : members[c]) {
        for (int j : members[d]) {
          const double gap = std::abs(eig[i] - eig[j]);
          if (gap < kAmbiguityFactor * delta) {
            throw MathError(ErrorCode::ClusterAmbiguity,
                            "eigenvalue gap " + std::to_string(gap) + " within factor " +
                                std::to_string(kAmbiguityFactor) + " of cluster tolerance " +
                                std::to_string(delta));
          }
        }
        for (int j : members[d]) nearest[c] = std::min(nearest[c], std::abs(centers[c] - eig[j]));
      }
    }
  }

  const auto dim = a.rows();
  if (k == 1) {
    out.eigenvalues.push_back(a.trace() / static_cast<double>(dim));
    out.projectors.push_back(identity(dim));
    out.multiplicities.push_back(n);
    return out;
  }

  for (int c = 0; c < k; ++c) {
    const double radius = 0.5 * nearest[c];
    if (!(radius > 2.0 * spread[c])) {
      throw MathError(ErrorCode::ClusterAmbiguity, "eigenvalue cluster too wide to isolate");
    }
    ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
    for (int q = 0; q < kContourNodes; ++q) {
      const double phi = 2.0 * std::numbers::pi * (q + 0.5) / kContourNodes;
      const Complex offset = std::polar(radius, phi);
      ComplexMatrix shifted = -a;
      shifted.diagonal().array() += centers[c] + offset;
      p += offset * Eigen::PartialPivLU<ComplexMatrix>(shifted).inverse();
    }
    p /= static_cast<double>(kContourNodes);
    const int mult = static_cast<int>(members[c].size());
    out.eigenvalues.push_back(trace_of_product(a, p) / static_cast<double>(mult));
    out.projectors.push_back(std::move(p));
    out.multiplicities.push_back(mult);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Roots

std::vector<Complex> poly_roots(const Polynomial& p) {
  if (p.is_zero()) throw MathError(ErrorCode::DegenerateInput, "poly_roots: zero polynomial");
  const int deg = p.degree();
  if (deg < 1) throw MathError(ErrorCode::DegenerateInput, "poly_roots: constant polynomial");

  const auto& c = p.coeffs();
  const Complex lead = c.back();
  ComplexMatrix companion = ComplexMatrix::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -c[static_cast<std::size_t>(i)] / lead;

  auto roots = eigenvalues(companion);
  const Polynomial dp = p.derivative();
  for (auto& r : roots) {
    Complex value = p(r);
    for (int iter = 0; iter < 8 && std::abs(value) > 0.0; ++iter) {
      const Complex slope = dp(r);
      if (std::abs(slope) == 0.0) break;
      const Complex candidate = r - value / slope;
      const Complex next = p(candidate);
      if (!(std::abs(next) < std::abs(value))) break;
      r = candidate;
      value = next;
    }
  }
  return roots;
}

std::vector<RootCluster> dedup_roots(std::span<const Complex> roots, double tol) {
  std::vector<std::vector<Complex>> groups;
  for (const auto& r : roots) {
    bool placed = false;
    for (auto& g : groups) {
      for (const auto& m : g) {
        if (std::abs(m - r) < tol) {
          g.push_back(r);
          placed = true;
          break;
        }
      }
      if (placed) break;
    }
    if (!placed) groups.push_back({r});
  }
  std::vector<RootCluster> out;
  out.reserve(groups.size());
  for (const auto& g : groups) {
    Complex sum{};
    for (const auto& m : g) sum += m;
    out.push_back({sum / static_cast<double>(g.size()), static_cast<int>(g.size())});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exponentials

namespace {

double norm_one(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace

ComplexMatrix matrix_exp(const ComplexMatrix& a) {
  require_square(a, "matrix_exp");
  const auto n = a.rows();
  const double nrm = norm_one(a);
  int squarings = 0;
  if (nrm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
  const ComplexMatrix b = a / std::ldexp(1.0, squarings);

  ComplexMatrix sum = identity(n);
  ComplexMatrix term = identity(n);
  for (int k = 1; k <= 40; ++k) {
    term = (term * b) / static_cast<double>(k);
    sum += term;
    if (term.norm() <= 1e-18 * sum.norm()) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

ComplexVector expm_action(const ComplexMatrix& a, const ComplexVector& v) {
  require_square(a, "expm_action");
  if (v.size() != a.rows()) {
    throw MathError(ErrorCode::DimensionMismatch, "expm_action: vector length differs from matrix");
  }
  const double nrm = norm_one(a);
  const int steps = std::max(1, static_cast<int>(std::ceil(nrm / 2.0)));
  const ComplexMatrix b = a / static_cast<double>(steps);

  ComplexVector w = v;
  for (int s = 0; s < steps; ++s) {
    ComplexVector term = w;
    ComplexVector sum = w;
    for (int k = 1; k <= 60; ++k) {
      term = (b * term) / static_cast<double>(k);
      sum += term;
      if (term.norm() <= 1e-18 * sum.norm()) break;
    }
    w = std::move(sum);
  }
  return w;
}

int numeric_kernel_dim(const ComplexMatrix& a, double rel_tol) {
  if (a.size() == 0) return static_cast<int>(a.cols());
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv.maxCoeff() : 0.0;
  int zero = static_cast<int>(a.cols() - sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) <= rel_tol * smax) ++zero;
  }
  return zero;
}

}  // namespace cayley
