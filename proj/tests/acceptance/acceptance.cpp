// Acceptance harness: one line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cayley/catalog.hpp"
#include "cayley/checks.hpp"
#include "cayley/random.hpp"

namespace {

using namespace cayley;

constexpr std::uint64_t kSeed = 20241015;

struct Tally {
  long trials = 0;
  long failures = 0;
  double worst = 0.0;
  std::string first_error;

  void add(double residual, double tol) {
    ++trials;
    if (!(residual <= tol)) ++failures;
    if (std::isfinite(residual)) worst = std::max(worst, residual);
  }
};

// Runs `count` trials of `fn` on independent streams keyed by `tag`.
void run(Tally& t, const std::string& tag, int count, double tol, const std::function<double(Rng&)>& fn) {
  for (int k = 0; k < count; ++k) {
    Rng rng(derive_seed(kSeed, tag, static_cast<std::uint64_t>(k)));
    try {
      t.add(fn(rng), tol);
    } catch (const std::exception& e) {
      ++t.trials;
      ++t.failures;
      if (t.first_error.empty()) t.first_error = tag + ": " + e.what();
    }
  }
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(2);
  s << std::scientific << x;
  return s.str();
}

struct Line {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

Line report(int id, std::string name, const Tally& t, const std::string& extra = "") {
  std::string detail = std::to_string(t.trials) + " trials, " + std::to_string(t.failures) + " failures, worst " +
                       fmt(t.worst);
  if (!extra.empty()) detail += "; " + extra;
  if (!t.first_error.empty()) detail += "; first error: " + t.first_error;
  return {id, std::move(name), t.failures == 0 && t.trials > 0, detail};
}

std::vector<Representation> family_reps() {
  return {make_sl(2), make_sl(3),      make_sl(4),          make_gl(2),          make_gl(3),
          make_so(3), make_so(4),      make_so(5),          make_so(6),          make_sl2_irrep(2),
          make_sl2_irrep(3), make_sl2_irrep(4)};
}

Line criterion1() {
  Tally t;
  for (int n = 2; n <= 5; ++n)
    run(t, "c1-sl-" + std::to_string(n), 100, 1e-10, [n](Rng& r) { return checks::sl_projection(n, r); });
  for (int n = 3; n <= 6; ++n)
    run(t, "c1-so-" + std::to_string(n), 100, 1e-10, [n](Rng& r) { return checks::so_projection(n, r); });
  return report(1, "closed-form projections on SL_n and SO_n", t);
}

Line criterion2() {
  Tally t;
  run(t, "c2-half-trace", 100, 1e-9, [](Rng& r) { return checks::psi_half_trace(r); });
  auto reps = family_reps();
  for (int m : {1, 5}) reps.push_back(make_sl2_irrep(m));
  reps.push_back(make_adjoint(make_sl(3)));
  for (const auto& rep : reps) t.add(checks::psi_identity(rep), 1e-10);
  return report(2, "Psi = tr/2 on SL_2 and Psi(e) = 1", t);
}

Line criterion3() {
  Tally t;
  for (int m = 1; m <= 5; ++m)
    run(t, "c3-m" + std::to_string(m), 20, 1e-8, [m](Rng& r) { return checks::sl2_irrep_series(m, r); });
  return report(3, "SL_2 irrep H-coefficient series", t);
}

Line criterion4() {
  Tally t;
  for (const auto& rep : family_reps()) {
    run(t, "c4-eq-" + rep.name(), 100, 1e-8, [&rep](Rng& r) { return checks::equivariance(rep, r); });
    run(t, "c4-cartan-" + rep.name(), 100, 1e-8, [&rep](Rng& r) { return checks::cartan_stability(rep, r); });
  }
  return report(4, "equivariance and Cartan stability", t);
}

Line criterion5() {
  Tally t;
  run(t, "c5", 100, 1e-7, [k = 0](Rng& r) mutable { return checks::jordan_semisimple(3 + (k++ % 2), r); });
  return report(5, "Phi(a_s) = Phi(a)_s on SL_3 and SL_4", t);
}

Line criterion6() {
  Tally t;
  for (int n = 2; n <= 4; ++n) {
    const auto rep = make_sl(n);
    run(t, "c6-unipotent-" + std::to_string(n), 100, 1e-7,
        [&rep](Rng& r) { return checks::unipotent_image_nilpotent(rep, r); });
    t.add(checks::principal_nilpotent_fiber(n), 0.0);
  }
  return report(6, "unipotent to nilpotent and principal nilpotent fiber = n", t);
}

Line criterion7() {
  Tally t;
  for (int n = 2; n <= 5; ++n)
    run(t, "c7-sl-" + std::to_string(n), 20, 0.0, [n](Rng& r) { return checks::sl_degree(n, r); });
  for (int n = 4; n <= 8; ++n)
    run(t, "c7-spin-" + std::to_string(n), 20, 0.0, [n](Rng& r) { return checks::spin_degree(n, r); });
  return report(7, "fiber counts for SL_n and Spin_n", t);
}

Line criterion8() {
  Tally square, commute, factor, closed;
  for (int n = 3; n <= 8; ++n) {
    const std::string s = std::to_string(n);
    run(square, "c8-square-" + s, 50, 1e-8, [n](Rng& r) { return checks::square_law(n, r); });
    run(commute, "c8-commute-" + s, 50, 1e-8, [n](Rng& r) { return checks::commutation_identity(n, r); });
    run(factor, "c8-factor-" + s, 50, 1e-7, [n](Rng& r) { return checks::factorization(n, r); });
    run(closed, "c8-closed-" + s, 50, 1e-7, [n](Rng& r) { return checks::closed_form_spin(n, r); });
  }
  Tally all;
  for (const Tally* p : {&square, &commute, &factor, &closed}) {
    all.trials += p->trials;
    all.failures += p->failures;
    all.worst = std::max(all.worst, p->worst);
    if (all.first_error.empty()) all.first_error = p->first_error;
  }
  return report(8, "Spin square law, commutation, factorization, closed form", all,
                "worst square " + fmt(square.worst) + ", commutation " + fmt(commute.worst) + ", factorization " +
                    fmt(factor.worst) + ", closed form " + fmt(closed.worst));
}

Line criterion9() {
  Tally t, gram;
  for (int m1 = 1; m1 <= 4; ++m1)
    for (int m2 = 1; m2 <= 4; ++m2) {
      const std::string s = std::to_string(m1) + "-" + std::to_string(m2);
      run(t, "c9-sum-" + s, 5, 1e-7, [=](Rng& r) { return checks::direct_sum_identity(m1, m2, r); });
      run(t, "c9-tensor-" + s, 5, 1e-7, [=](Rng& r) { return checks::tensor_identity(m1, m2, r); });
      gram.add(checks::gram_additivity(m1, m2), 1e-9);
      gram.add(checks::gram_tensor_rule(m1, m2), 1e-9);
    }
  for (int m = 1; m <= 4; ++m) {
    run(t, "c9-dual-" + std::to_string(m), 5, 1e-7, [m](Rng& r) { return checks::dual_identity(m, r); });
    for (int k = 2; k <= 3; ++k) {
      run(t, "c9-power-" + std::to_string(m) + "-" + std::to_string(k), 3, 1e-7,
          [=](Rng& r) { return checks::tensor_power_identity(m, k, r); });
    }
  }
  Tally all = t;
  all.trials += gram.trials;
  all.failures += gram.failures;
  return report(9, "direct sum, tensor, tensor power, dual and Gram rules", all,
                "worst identity " + fmt(t.worst) + ", worst Gram " + fmt(gram.worst));
}

Line criterion10() {
  Tally hyp, sing;
  for (const auto& rep : family_reps())
    run(hyp, "c10-hyp-" + rep.name(), 100, 0.0, [&rep](Rng& r) { return checks::hyperbolic_psi(rep, r); });
  run(sing, "c10-singular", 100, 1e-7, [k = 0](Rng& r) mutable { return checks::singular_trace_free(2 + (k++ % 4), r); });
  Tally all = hyp;
  all.trials += sing.trials;
  all.failures += sing.failures;
  if (all.first_error.empty()) all.first_error = sing.first_error;
  all.worst = sing.worst;
  return report(10, "hyperbolic |Psi| > 1e-6 and Psi(a^-1) = 0 for tr a = 0", all,
                std::to_string(hyp.failures) + " hyperbolic shortfalls");
}

Line criterion11() {
  Tally t;
  run(t, "c11", 1000, 1e-12, [](Rng& r) { return checks::convexity_inequality(r); });
  return report(11, "convexity inequality on zero-sum vectors", t);
}

int system_status(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Line criterion12() {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "cayley_accept_a.json";
  const auto b = dir / "cayley_accept_b.json";
  const auto c = dir / "cayley_accept_c.json";
  const std::string base = std::string(CAYLEY_CLI_PATH) + " verify --suite all --trials 25 --seed 0 --report ";
  const int ca = system_status(base + a.string() + " >/dev/null 2>&1");
  const int cb = system_status(base + b.string() + " >/dev/null 2>&1");
  const int cc = system_status("OMP_NUM_THREADS=3 " + base + c.string() + " >/dev/null 2>&1");
  const std::string ra = slurp(a), rb = slurp(b), rc = slurp(c);
  const bool same = !ra.empty() && ra == rb;
  const bool threads = ra == rc;
  for (const auto& p : {a, b, c}) std::filesystem::remove(p);
  std::string detail = std::to_string(ra.size()) + " bytes, exit codes " + std::to_string(ca) + "/" +
                       std::to_string(cb) + ", repeat " + (same ? "identical" : "DIFFERENT") +
                       ", other thread count " + (threads ? "identical" : "DIFFERENT");
  return {12, "verify --suite all is byte-identical across runs", same && threads && ca == cb, detail};
}

}  // namespace

int main() {
  const std::vector<std::function<Line()>> criteria{criterion1, criterion2,  criterion3,  criterion4,
                                                     criterion5, criterion6,  criterion7,  criterion8,
                                                     criterion9, criterion10, criterion11, criterion12};
  int failed = 0;
  for (const auto& fn : criteria) {
    const Line line = fn();
    if (!line.pass) ++failed;
    std::cout << (line.pass ? "PASS" : "FAIL") << "  criterion " << line.id << ": " << line.name << " ("
              << line.detail << ")" << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
