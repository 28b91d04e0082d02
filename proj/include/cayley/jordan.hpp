#pragma once

#include "cayley/matrix.hpp"
#include "cayley/representation.hpp"

namespace cayley {

/// g = semisimple * unipotent, factors commuting.
struct MultiplicativeJordan {
  ComplexMatrix semisimple;
  ComplexMatrix unipotent;
};

/// X = semisimple + nilpotent, parts commuting.
struct AdditiveJordan {
  ComplexMatrix semisimple;
  ComplexMatrix nilpotent;
};

/// g = elliptic * hyperbolic * unipotent, all three commuting.
struct EhuDecomposition {
  ComplexMatrix elliptic;
  ComplexMatrix hyperbolic;
  ComplexMatrix unipotent;
};

/// Throws SingularMatrix for non-invertible g, ClusterAmbiguity when the
/// eigenvalue clustering is ill-posed at `cluster_tol`.
MultiplicativeJordan multiplicative_jordan(const ComplexMatrix& g, double cluster_tol = kDefaultClusterTol);
MultiplicativeJordan multiplicative_jordan(const GroupElement& g, double cluster_tol = kDefaultClusterTol);

AdditiveJordan additive_jordan(const ComplexMatrix& x, double cluster_tol = kDefaultClusterTol);
AdditiveJordan additive_jordan(const Representation& rep, const AlgebraVector& x,
                               double cluster_tol = kDefaultClusterTol);

EhuDecomposition ehu_decomposition(const ComplexMatrix& g, double cluster_tol = kDefaultClusterTol);
EhuDecomposition ehu_decomposition(const GroupElement& g, double cluster_tol = kDefaultClusterTol);

/// ||X^n||_F / max(1, ||X||_F)^n with n = rows; zero for nilpotent X.
double nilpotency_residual(const ComplexMatrix& x);

/// max |lambda| over the spectrum, scaled by 1 / max(1, ||X||_F).
double spectral_radius_residual(const ComplexMatrix& x);

}  // namespace cayley
