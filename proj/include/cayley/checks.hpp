#pragma once

#include "cayley/catalog.hpp"
#include "cayley/random.hpp"
#include "cayley/representation.hpp"

/// Single-trial property checks shared by the verify suites, the CLI and the
/// acceptance harness. Each returns a non-negative residual; a check passes
/// when the residual is within its tolerance. Counting checks return the
/// integer mismatch, and lower-bound checks return the shortfall below the
/// bound (so their tolerance is 0).
namespace cayley::checks {

// -- closed forms -----------------------------------------------------------

/// Phi(A) against A - (tr A / n) I for a generic A in SL(n).
double sl_projection(int n, Rng& rng);
/// Phi(A) against (A - A^T) / 2 for a generic A in SO(n).
double so_projection(int n, Rng& rng);
/// Psi(A) against tr(A) / 2 for a generic A in SL(2).
double psi_half_trace(Rng& rng);
/// Psi(A) against tr(A^{-1}) / n for a generic A in SL(n).
double psi_inverse_trace(int n, Rng& rng);
/// |Psi(e) - 1|.
double psi_identity(const Representation& rep);
/// ||Jacobian(e) - I||.
double jacobian_identity(const Representation& rep);
/// H-coefficient of Phi(diag(a, 1/a)) in the m-th irrep against the power sum.
double sl2_irrep_series(int m, Rng& rng);

// -- rep-model --------------------------------------------------------------

/// Phi(b g b^{-1}) against Ad_b Phi(g).
double equivariance(const Representation& rep, Rng& rng);
/// Component of Phi(h) outside the Cartan span for a Cartan element h.
double cartan_stability(const Representation& rep, Rng& rng);
/// Psi before and after a random change of basis.
double psi_basis_independence(const Representation& rep, Rng& rng);
/// Jacobian against a central finite difference of Phi along g exp(eps X).
double jacobian_finite_difference(const Representation& rep, Rng& rng);
/// |dim g^g - dim g^{Phi(g)}| when |Psi(g)| > 1e-6, else 0.
double centralizer_equality(const Representation& rep, Rng& rng);

// -- Jordan (SL(3), SL(4) with nontrivial unipotent part) --------------------

/// Phi(g_s) against the semisimple part of Phi(g).
double jordan_semisimple(int n, Rng& rng);
/// Commutation and reconstruction defects of g = g_s g_u.
double jordan_commute(int n, Rng& rng);
/// Reconstruction and commutation of g = g_e g_h g_u.
double ehu_recombine(int n, Rng& rng);
/// Nilpotency defect of Phi(b w) - Phi(b) for semisimple b, unipotent w
/// commuting with b.
double phi_b_nilpotent(int n, Rng& rng);
/// Mismatch between "centralizer dim equals rank" and "unipotent part is
/// principal in the centralizer of the semisimple part" (SL(3)).
double regular_element(Rng& rng);

// -- unipotent --------------------------------------------------------------

/// Spectral radius of Phi(u) for a unipotent u.
double unipotent_image_nilpotent(const Representation& rep, Rng& rng);
/// |#fiber(principal nilpotent) - n| plus 1 if any element misses the target.
double principal_nilpotent_fiber(int n);

// -- hyperbolic -------------------------------------------------------------

/// Shortfall of |Psi(g)| below 1e-6 for a hyperbolic g.
double hyperbolic_psi(const Representation& rep, Rng& rng);
/// |Psi(a^{-1})| for a in SL(n) with tr a = 0.
double singular_trace_free(int n, Rng& rng);
/// |#(hyperbolic elements in the SL(n) fiber over Phi(h)) - 1| for hyperbolic h.
double hyperbolic_fiber_unique(int n, Rng& rng);

// -- restriction ------------------------------------------------------------

double restriction_cartan_sl3(Rng& rng);
/// g generated in one ideal of so(4) = sl(2) + sl(2).
double restriction_so4_ideals(Rng& rng, int ideal);
double restriction_full_index(const Representation& rep, Rng& rng);

// -- combinators on sl(2) irreps ---------------------------------------------

double direct_sum_identity(int m1, int m2, Rng& rng);
double tensor_identity(int m1, int m2, Rng& rng);
double tensor_power_identity(int m, int k, Rng& rng);
double dual_identity(int m, Rng& rng);
double gram_additivity(int m1, int m2);
double gram_tensor_rule(int m1, int m2);
/// |j(pi_m, pi_1) - m(m+1)(m+2)/6| + |j(pi_m, ad) - casimir index|.
double dynkin_casimir_ratio(int m);

// -- Clifford ---------------------------------------------------------------

double clifford_associativity(int n, Rng& rng);
double gamma_homomorphism(int n, Rng& rng);
double trace_law(int n, Rng& rng);
double pairing_law(int n, Rng& rng);
double ei_anticommutator(int n, Rng& rng);
/// tr(w -> g w alpha(g)) against det(1 + T(g)).
double theta_trace(int n, Rng& rng);
/// d/dt T(exp(t u)) at 0 against tau(u).
double tau_differential(int n, Rng& rng);

// -- Spin Cayley map ----------------------------------------------------------

double square_law(int n, Rng& rng);
double commutation_identity(int n, Rng& rng);
double factorization(int n, Rng& rng);
double closed_form_spin(int n, Rng& rng);
double double_cover_sign(int n, Rng& rng);
double vector_action_orthogonal(int n, Rng& rng);

// -- degree -------------------------------------------------------------------

double sl_degree(int n, Rng& rng);
/// Expected count n (even) or n - 1 (odd).
double spin_degree(int n, Rng& rng);
/// |#(roots with |t| <= 1e-8) - 1| for odd n.
double odd_zero_root(int n, Rng& rng);
/// Worst element residual over one SL and one Spin fiber.
double fiber_correctness(int n, Rng& rng);

// -- inequality ----------------------------------------------------------------

/// max(0, (1/2N) sum r^2 - sum r e^r) for a random zero-sum r, N in [2, 16].
double convexity_inequality(Rng& rng);

}  // namespace cayley::checks
