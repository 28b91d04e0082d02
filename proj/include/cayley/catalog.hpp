#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cayley/random.hpp"
#include "cayley/representation.hpp"

namespace cayley {

/// Standard representation of sl(n): H_i = E_ii - E_{i+1,i+1} first, then
/// E_ij for i < j, then E_ji for i < j.
Representation make_sl(int n);
/// All E_ij in row-major order.
Representation make_gl(int n);
/// J_ab = E_ab - E_ba for a < b, lexicographic.
Representation make_so(int n);
/// (m+1)-dimensional irrep of sl(2) on x^{m-p} y^p, basis order H, E, F.
Representation make_sl2_irrep(int m);
Representation make_family(const FamilySpec& spec);

/// ad on the algebra itself, same coordinates. Throws DegenerateForm when
/// the Killing form is degenerate (e.g. gl).
Representation make_adjoint(const Representation& rep);

/// Throws IncompatibleAlgebras unless both reps have the same dimension and
/// structure constants within 1e-8.
void require_same_algebra(const Representation& a, const Representation& b);

Representation direct_sum(const Representation& a, const Representation& b);
/// Basis B ⊗ I + I ⊗ B'.
Representation tensor(const Representation& a, const Representation& b);
/// Basis -B^T.
Representation dual(const Representation& rep);
/// k-fold tensor power, k >= 1.
Representation tensor_power(const Representation& rep, int k);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

struct DynkinFit {
  double ratio = 0.0;
  double residual = 0.0;
};

/// Least-squares j with gram(rep) = j gram(reference). Throws NotProportional
/// when the relative residual exceeds 1e-6.
DynkinFit dynkin_ratio(const Representation& rep, const Representation& reference);

/// dim V / dim g * B(lambda, lambda + 2 rho) for the sl(2) irrep of highest
/// weight m, with B the Killing form. Equals the Dynkin ratio of the irrep
/// against the adjoint representation.
double sl2_casimir_index(int m);

enum class SampleKind { generic, hyperbolic, elliptic, unipotent, cartan, trace_free };

std::string_view to_string(SampleKind kind);
/// Throws ParseError on an unknown name.
SampleKind sample_kind_from_string(std::string_view name);

/// Abstract group element exp(X_1) exp(X_2) ... in algebra coordinates, so
/// the same element can be realized in any representation of the algebra.
struct ElementRecipe {
  SampleKind kind = SampleKind::generic;
  std::vector<ComplexVector> factors;
};

/// Gaussian algebra coordinates rescaled to norm uniform in [lo, hi].
ComplexVector sample_algebra(const Representation& rep, Rng& rng, double lo = 0.4, double hi = 1.2);

/// Throws Unsupported when the metadata lacks what `kind` needs (Cartan or
/// positive generators; trace_free needs the standard sl(n)).
ElementRecipe sample_recipe(const Representation& rep, SampleKind kind, Rng& rng);

GroupElement realize(const Representation& rep, const ElementRecipe& recipe);

/// sample_recipe + realize, deterministic in (kind, seed).
GroupElement sample_element(const Representation& rep, SampleKind kind, std::uint64_t seed);

}  // namespace cayley
