#include "cayley/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "cayley/catalog.hpp"
#include "cayley/checks.hpp"
#include "cayley/errors.hpp"

namespace cayley {

namespace {

using CheckFn = std::function<double(int trial, Rng& rng)>;

struct Claim {
  std::string suite;
  std::string id;
  std::string anchor;
  double tolerance;
  CheckFn check;
};

const std::vector<Representation>& catalog_reps() {
  static const std::vector<Representation> reps = [] {
    std::vector<Representation> out;
    for (int n : {2, 3, 4}) out.push_back(make_sl(n));
    for (int n : {3, 4, 5, 6}) out.push_back(make_so(n));
    for (int n : {2, 3}) out.push_back(make_gl(n));
    for (int m : {2, 3, 4}) out.push_back(make_sl2_irrep(m));
    return out;
  }();
  return reps;
}

// Representations on which unipotent samples are exactly triangular.
const std::vector<Representation>& triangular_reps() {
  static const std::vector<Representation> reps = [] {
    std::vector<Representation> out;
    for (int n : {2, 3, 4, 5}) out.push_back(make_sl(n));
    for (int m : {2, 3, 4}) out.push_back(make_sl2_irrep(m));
    return out;
  }();
  return reps;
}

template <typename Vec>
const auto& cycle(const Vec& items, int trial) {
  return items[static_cast<std::size_t>(trial) % items.size()];
}

std::vector<Claim> build_claims() {
  using namespace checks;
  std::vector<Claim> c;
  auto add = [&c](std::string suite, std::string id, std::string anchor, double tol, CheckFn fn) {
    c.push_back({std::move(suite), std::move(id), std::move(anchor), tol, std::move(fn)});
  };
  const auto& reps = catalog_reps();

  add("equivariance", "equivariance-conjugation", "Phi(b g b^-1) = Ad_b Phi(g)", 1e-8,
      [&reps](int t, Rng& r) { return equivariance(cycle(reps, t), r); });
  add("equivariance", "cartan-stability", "Phi(H) lies in the Cartan subalgebra", 1e-10,
      [&reps](int t, Rng& r) { return cartan_stability(cycle(reps, t), r); });
  add("equivariance", "jacobian-identity", "dPhi(e) = id", 1e-10,
      [&reps](int t, Rng&) { return jacobian_identity(cycle(reps, t)); });
  add("equivariance", "jacobian-finite-difference", "tr(pi'(dPhi(g) X) pi'(Y)) = tr(pi(g) pi'(X) pi'(Y))", 1e-5,
      [&reps](int t, Rng& r) { return jacobian_finite_difference(cycle(reps, t), r); });
  add("equivariance", "psi-basis-independence", "Psi does not depend on the basis", 1e-8,
      [&reps](int t, Rng& r) { return psi_basis_independence(cycle(reps, t), r); });
  add("equivariance", "centralizer-equality", "Psi(g) != 0 => dim g^g = dim g^Phi(g)", 0.0,
      [&reps](int t, Rng& r) { return centralizer_equality(cycle(reps, t), r); });

  add("jordan", "jordan-semisimple-compat", "Phi(a_s) = Phi(a)_s", 1e-7,
      [](int t, Rng& r) { return jordan_semisimple(3 + t % 2, r); });
  add("jordan", "jordan-commute", "a = a_s a_u = a_u a_s", 1e-8,
      [](int t, Rng& r) { return jordan_commute(3 + t % 2, r); });
  add("jordan", "ehu-recombine", "a = a_e a_h a_u, factors commuting", 1e-8,
      [](int t, Rng& r) { return ehu_recombine(3 + t % 2, r); });
  add("jordan", "phi-b-nilpotent", "Phi(b w) - Phi(b) nilpotent", 1e-8,
      [](int t, Rng& r) { return phi_b_nilpotent(3 + t % 2, r); });
  add("jordan", "regular-element", "a regular <=> a_u principal unipotent in G^{a_s}", 0.0,
      [](int, Rng& r) { return regular_element(r); });

  add("unipotent", "unipotent-image-nilpotent", "u unipotent => Phi(u) nilpotent", 1e-7,
      [](int t, Rng& r) { return unipotent_image_nilpotent(cycle(triangular_reps(), t), r); });
  add("unipotent", "principal-nilpotent-fiber", "#Phi^-1(principal nilpotent) = |Z(SL_n)|", 0.0,
      [](int t, Rng&) { return principal_nilpotent_fiber(2 + t % 3); });

  add("hyperbolic", "hyperbolic-psi-nonzero", "g hyperbolic => |Psi(g)| > 1e-6", 0.0,
      [&reps](int t, Rng& r) { return hyperbolic_psi(cycle(reps, t), r); });
  add("hyperbolic", "singular-trace-free", "tr pi(a) = 0 => Psi(a^-1) = 0", 1e-7,
      [](int t, Rng& r) { return singular_trace_free(2 + t % 4, r); });
  add("hyperbolic", "hyperbolic-fiber-unique", "Phi is injective on hyperbolic elements", 0.0,
      [](int t, Rng& r) { return hyperbolic_fiber_unique(2 + t % 4, r); });

  add("restriction", "restriction-cartan-sl3", "Phi_pi|H = Phi_{pi|H}", 1e-8,
      [](int, Rng& r) { return restriction_cartan_sl3(r); });
  add("restriction", "restriction-so4-ideals", "Phi_pi|G_i = Phi_{pi|G_i}", 1e-8,
      [](int t, Rng& r) { return restriction_so4_ideals(r, t % 2); });
  add("restriction", "restriction-full-index", "restriction to all of g is the identity", 1e-8,
      [&reps](int t, Rng& r) { return restriction_full_index(cycle(reps, t), r); });

  add("sumtensor", "direct-sum", "Phi_{1+2} = (j1 Phi_1 + j2 Phi_2) / (j1 + j2)", 1e-8,
      [](int t, Rng& r) { return direct_sum_identity(1 + t % 4, 1 + (t / 4) % 4, r); });
  add("sumtensor", "tensor", "Phi_{1*2} = (j1 chi_2 Phi_1 + chi_1 j2 Phi_2) / j_{1*2}", 1e-7,
      [](int t, Rng& r) { return tensor_identity(1 + t % 4, 1 + (t / 4) % 4, r); });
  add("sumtensor", "tensor-power", "Phi_{pi^k} = (chi / dim V)^{k-1} Phi_pi", 1e-7,
      [](int t, Rng& r) { return tensor_power_identity(1 + t % 3, 2 + (t / 3) % 2, r); });
  add("sumtensor", "dual", "Phi_{pi^T}(g) = -Phi_pi(g^-1)", 1e-9,
      [](int t, Rng& r) { return dual_identity(1 + t % 4, r); });
  add("sumtensor", "gram-additivity", "j_{1+2} = j_1 + j_2", 1e-9,
      [](int t, Rng&) { return gram_additivity(1 + t % 4, 1 + (t / 4) % 4); });
  add("sumtensor", "gram-tensor-rule", "j_{1*2} = dim V_2 j_1 + dim V_1 j_2", 1e-9,
      [](int t, Rng&) { return gram_tensor_rule(1 + t % 4, 1 + (t / 4) % 4); });
  add("sumtensor", "dynkin-casimir-ratio", "j_lambda = dim V / dim g B(lambda, lambda + 2 rho)", 1e-8,
      [](int t, Rng&) { return dynkin_casimir_ratio(1 + t % 5); });

  add("clifford", "clifford-associativity", "(uv)w = u(vw), (u^v)^w = u^(v^w)", 1e-10,
      [](int t, Rng& r) { return clifford_associativity(2 + t % 5, r); });
  add("clifford", "gamma-homomorphism", "gamma(uv) = gamma(u) gamma(v)", 1e-10,
      [](int t, Rng& r) { return gamma_homomorphism(2 + t % 5, r); });
  add("clifford", "trace-law", "pr0(w) = 2^-n tr gamma(w)", 1e-12,
      [](int t, Rng& r) { return trace_law(2 + t % 5, r); });
  add("clifford", "pairing-law", "pr0(u w) = (u, alpha(w))", 1e-12,
      [](int t, Rng& r) { return pairing_law(2 + t % 5, r); });
  add("clifford", "ei-anticommutator", "eps(x) iota(y) + iota(y) eps(x) = (x, y)", 1e-12,
      [](int t, Rng& r) { return ei_anticommutator(2 + t % 5, r); });
  add("clifford", "theta-trace", "tr(w -> g w alpha(g)) = det(1 + T(g))", 1e-8,
      [](int t, Rng& r) { return theta_trace(2 + t % 5, r); });
  add("clifford", "tau-differential", "d/dt T(exp(t u)) = tau(u)", 1e-5,
      [](int t, Rng& r) { return tau_differential(2 + t % 5, r); });

  add("spin-cayley", "square-law", "2^n pr0(g)^2 = det(1 + T(g))", 1e-8,
      [](int t, Rng& r) { return square_law(3 + t % 6, r); });
  add("spin-cayley", "commutation-identity", "e^{2w}(x - [w,x]) = (x + [w,x]) e^{2w}", 1e-8,
      [](int t, Rng& r) { return commutation_identity(3 + t % 6, r); });
  add("spin-cayley", "factorization", "g = pr0(g) e^{-2w}, w = tau^-1(Gamma(T(g)))", 1e-7,
      [](int t, Rng& r) { return factorization(3 + t % 6, r); });
  add("spin-cayley", "closed-form-spin", "pr2(g) = -2 pr0(g) tau^-1(Gamma(T(g)))", 1e-7,
      [](int t, Rng& r) { return closed_form_spin(3 + t % 6, r); });
  add("spin-cayley", "double-cover-sign", "pr0(-g) = -pr0(g), T(-g) = T(g)", 1e-12,
      [](int t, Rng& r) { return double_cover_sign(3 + t % 6, r); });
  add("spin-cayley", "vector-action-orthogonal", "T(g)^T T(g) = 1, det T(g) = 1", 1e-8,
      [](int t, Rng& r) { return vector_action_orthogonal(3 + t % 6, r); });

  add("degree", "sl-degree", "#fiber of det(t + X) - 1 = n", 0.0,
      [](int t, Rng& r) { return sl_degree(2 + t % 4, r); });
  add("degree", "spin-degree", "#nonzero roots of det(t + X) - 2^n t^{n-2} = n or n - 1", 0.0,
      [](int t, Rng& r) { return spin_degree(4 + t % 5, r); });
  add("degree", "odd-zero-root", "n odd => exactly one root at 0", 0.0,
      [](int t, Rng& r) { return odd_zero_root(t % 2 == 0 ? 5 : 7, r); });
  add("degree", "fiber-correctness", "Phi(fiber element) = target", 1e-6,
      [](int t, Rng& r) { return fiber_correctness(2 + t % 5, r); });

  add("inequality", "convexity-inequality", "sum r e^r >= (1/2N) sum r^2 for sum r = 0", 1e-12,
      [](int, Rng& r) { return convexity_inequality(r); });

  add("closed-form", "sl-projection", "Phi(A) = A - tr(A)/n for SL_n", 1e-10,
      [](int t, Rng& r) { return sl_projection(2 + t % 4, r); });
  add("closed-form", "so-projection", "Phi(A) = (A - A^T)/2 for SO_n", 1e-10,
      [](int t, Rng& r) { return so_projection(3 + t % 4, r); });
  add("closed-form", "psi-half-trace", "Psi(A) = tr(A)/2 for SL_2", 1e-9,
      [](int, Rng& r) { return psi_half_trace(r); });
  add("closed-form", "psi-inverse-trace", "Psi(A) = tr(A^-1)/n for SL_n", 1e-9,
      [](int t, Rng& r) { return psi_inverse_trace(2 + t % 4, r); });
  add("closed-form", "psi-identity", "Psi(e) = 1", 1e-10,
      [&reps](int t, Rng&) { return psi_identity(cycle(reps, t)); });
  add("closed-form", "sl2-irrep-series", "Phi_m(diag(a,1/a))_H = 3/(m^3+3m^2+2m) sum (m-2p) a^{m-2p}", 1e-8,
      [](int t, Rng& r) { return sl2_irrep_series(1 + t % 5, r); });
  return c;
}

const std::vector<Claim>& all_claims() {
  static const std::vector<Claim> claims = build_claims();
  return claims;
}

const std::vector<std::string> kSuites = {"equivariance", "jordan",      "unipotent", "hyperbolic",
                                          "restriction",  "sumtensor",   "clifford",  "spin-cayley",
                                          "degree",       "inequality",  "closed-form"};

std::vector<const Claim*> select(std::string_view suite) {
  std::vector<const Claim*> out;
  const bool everything = suite == "all";
  if (!everything && std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end()) {
    throw ParseError("unknown suite '" + std::string(suite) + "'");
  }
  for (const auto& c : all_claims()) {
    if (everything || c.suite == suite) out.push_back(&c);
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names = kSuites;
  names.emplace_back("all");
  return names;
}

std::vector<std::string> suite_claims(std::string_view suite) {
  std::vector<std::string> ids;
  for (const Claim* c : select(suite)) ids.push_back(c->id);
  return ids;
}

SuiteResult run_suite(std::string_view suite, int trials, std::uint64_t seed, double tol_scale) {
  if (trials < 1) throw ParseError("trials must be positive");
  if (!(tol_scale > 0.0)) throw ParseError("tolerance scale must be positive");
  catalog_reps();
  triangular_reps();
  const auto claims = select(suite);

  const auto total = static_cast<std::int64_t>(claims.size()) * trials;
  std::vector<ClaimRecord> records(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t task = 0; task < total; ++task) {
    const Claim& claim = *claims[static_cast<std::size_t>(task / trials)];
    const int trial = static_cast<int>(task % trials);
    ClaimRecord& rec = records[static_cast<std::size_t>(task)];
    rec.id = claim.id;
    rec.anchor = claim.anchor;
    rec.trial = trial;
    rec.tolerance = claim.tolerance * tol_scale;
    Rng rng(derive_seed(seed, claim.id, static_cast<std::uint64_t>(trial)));
    try {
      rec.residual = claim.check(trial, rng);
      rec.pass = std::isfinite(rec.residual) && rec.residual <= rec.tolerance;
    } catch (const std::exception& e) {
      rec.residual = std::numeric_limits<double>::infinity();
      rec.pass = false;
      rec.error = e.what();
    }
  }

  std::stable_sort(records.begin(), records.end(), [](const ClaimRecord& a, const ClaimRecord& b) {
    return a.id != b.id ? a.id < b.id : a.trial < b.trial;
  });

  SuiteResult result;
  result.suite = std::string(suite);
  result.seed = seed;
  result.trials = trials;
  result.tol_scale = tol_scale;
  for (const auto& r : records) {
    if (!r.pass) ++result.failures;
    if (std::isfinite(r.residual)) result.worst_residual = std::max(result.worst_residual, r.residual);
  }
  result.records = std::move(records);
  return result;
}

io::Json to_json(const SuiteResult& result) {
  io::Json j;
  j["suite"] = result.suite;
  j["seed"] = result.seed;
  j["trials"] = result.trials;
  j["tol_scale"] = result.tol_scale;
  j["failures"] = result.failures;
  j["worst_residual"] = result.worst_residual;

  io::Json summary = io::Json::array();
  for (std::size_t i = 0; i < result.records.size();) {
    std::size_t k = i;
    int failures = 0;
    double worst = 0.0;
    while (k < result.records.size() && result.records[k].id == result.records[i].id) {
      const auto& r = result.records[k];
      if (!r.pass) ++failures;
      if (std::isfinite(r.residual)) worst = std::max(worst, r.residual);
      ++k;
    }
    io::Json entry;
    entry["id"] = result.records[i].id;
    entry["anchor"] = result.records[i].anchor;
    entry["tolerance"] = result.records[i].tolerance;
    entry["trials"] = k - i;
    entry["failures"] = failures;
    entry["worst_residual"] = worst;
    summary.push_back(std::move(entry));
    i = k;
  }
  j["claims"] = std::move(summary);

  io::Json records = io::Json::array();
  for (const auto& r : result.records) {
    io::Json entry;
    entry["id"] = r.id;
    entry["trial"] = r.trial;
    entry["residual"] = std::isfinite(r.residual) ? io::Json(r.residual) : io::Json(nullptr);
    entry["tolerance"] = r.tolerance;
    entry["pass"] = r.pass;
    if (r.error) entry["error"] = *r.error;
    records.push_back(std::move(entry));
  }
  j["records"] = std::move(records);
  return j;
}

std::string to_csv(const SuiteResult& result) {
  std::ostringstream out;
  out.precision(17);
  out << "id,anchor,trial,residual,tolerance,pass,error\n";
  for (const auto& r : result.records) {
    out << csv_escape(r.id) << ',' << csv_escape(r.anchor) << ',' << r.trial << ',';
    if (std::isfinite(r.residual)) out << r.residual;
    out << ',' << r.tolerance << ',' << (r.pass ? "true" : "false") << ',' << csv_escape(r.error.value_or(""))
        << '\n';
  }
  return out.str();
}

}  // namespace cayley
