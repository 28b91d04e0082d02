#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/matrix.hpp"

namespace cayley {

enum class Family { sl, gl, so, sl2_irrep, custom };

std::string_view to_string(Family family);
/// Throws ParseError on an unknown tag.
Family family_from_string(std::string_view tag);

struct FamilySpec {
  Family family = Family::custom;
  int n = 0;
  int m = 0;
};

/// Group data that the basis alone does not carry. Cartan and positive
/// generators are stored as coordinate vectors in the representation's basis.
struct RepMetadata {
  FamilySpec spec;
  /// Rank of the group; -1 means "estimate numerically".
  int rank = -1;
  /// Cartan generators whose representing matrices have real spectrum.
  std::vector<ComplexVector> cartan;
  /// Nilpotent raising generators spanning a maximal nilpotent subalgebra.
  std::vector<ComplexVector> positive;
};

/// Coordinates relative to Representation::basis().
struct AlgebraVector {
  ComplexVector coords;
};

/// A concrete group element pi(g) together with where it came from.
struct GroupElement {
  ComplexMatrix matrix;
  std::string sampler = "explicit";
  std::uint64_t seed = 0;
};

/// Gram matrix G_ij = tr(B_i B_j). Throws DegenerateForm when the trace form
/// is degenerate on span(basis), i.e. no Cayley map exists.
ComplexMatrix build_gram(std::span<const ComplexMatrix> basis);

/// A represented Lie algebra: ordered basis matrices B_i = pi'(X_i) with the
/// trace-form Gram matrix computed and factored once at construction.
/// Immutable afterwards.
class Representation {
 public:
  Representation(std::string name, std::vector<ComplexMatrix> basis, RepMetadata meta = {});

  const std::string& name() const { return name_; }
  int v_dim() const { return v_dim_; }
  int g_dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<ComplexMatrix>& basis() const { return basis_; }
  const ComplexMatrix& basis(int i) const { return basis_[static_cast<std::size_t>(i)]; }
  const ComplexMatrix& gram() const { return gram_; }
  const RepMetadata& metadata() const { return meta_; }

  /// Solves G X = rhs with the cached factorization.
  ComplexMatrix gram_solve(const ComplexMatrix& rhs) const;

  ComplexMatrix materialize(const ComplexVector& coords) const;
  ComplexMatrix materialize(const AlgebraVector& x) const { return materialize(x.coords); }

  /// Trace-form orthogonal projection of an arbitrary V-endomorphism onto
  /// span(basis), in coordinates.
  AlgebraVector project(const ComplexMatrix& m) const;

  /// Projection plus the relative distance of `m` from span(basis).
  AlgebraVector coordinates(const ComplexMatrix& m, double& residual) const;

  /// Entry [i] holds the coordinates of [B_i, B_j] in column j.
  std::vector<ComplexMatrix> structure_constants() const;

  /// Largest relative residual of [B_i, B_j] outside span(basis).
  double closure_residual() const;

 private:
  std::string name_;
  std::vector<ComplexMatrix> basis_;
  RepMetadata meta_;
  int v_dim_ = 0;
  ComplexMatrix gram_;
  Eigen::PartialPivLU<ComplexMatrix> gram_lu_;
};

/// Phi(g): coordinates c with G c = t, t_i = tr(pi(g) B_i).
AlgebraVector cayley(const Representation& rep, const GroupElement& g);

/// Matrix of dPhi(g) o T_e(mu_g) in the basis: G^{-1} S with
/// S_ji = tr(pi(g) B_i B_j).
ComplexMatrix cayley_jacobian(const Representation& rep, const GroupElement& g);

/// Cayley determinant det(cayley_jacobian).
Complex psi(const Representation& rep, const GroupElement& g);

Complex character(const Representation& rep, const GroupElement& g);

/// Ad_b in coordinates: column i holds the coordinates of b B_i b^{-1}.
/// Throws NotEquivariant if a conjugate leaves span(basis).
ComplexMatrix adjoint_matrix(const Representation& rep, const GroupElement& b);

/// ad_X in coordinates: column i holds the coordinates of [X, B_i].
ComplexMatrix ad_matrix(const Representation& rep, const AlgebraVector& x);

/// dim ker(Ad_g - I), singular values <= 1e-7 sigma_max counted as zero.
int centralizer_dim(const Representation& rep, const GroupElement& g);
/// dim ker(ad_X).
int centralizer_dim(const Representation& rep, const AlgebraVector& x);

/// Rank from metadata, or the centralizer dimension of a fixed generic
/// element when the metadata does not know it.
int group_rank(const Representation& rep);

/// Representation on the sub-basis selected by `indices`. Throws
/// NotASubalgebra if the selection is not closed under brackets.
Representation restrict_to_subalgebra(const Representation& rep, std::span<const int> indices);

/// New basis B'_j = sum_i change(i, j) B_i. Metadata coordinates follow.
Representation change_basis(const Representation& rep, const ComplexMatrix& change);

/// exp of the materialized algebra element.
GroupElement exp_element(const Representation& rep, const ComplexVector& coords);

/// The identity element e.
GroupElement identity_element(const Representation& rep);

}  // namespace cayley
