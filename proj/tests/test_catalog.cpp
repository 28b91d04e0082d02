#include "doctest.h"
#include "cayley/catalog.hpp"
#include "cayley/errors.hpp"
#include "cayley/jordan.hpp"

using namespace cayley;

namespace {

// sum_p (m - 2p)^2 = tr(H^2) in the m-th irrep.
double weight_square_sum(int m) {
  double s = 0.0;
  for (int p = 0; p <= m; ++p) s += static_cast<double>((m - 2 * p) * (m - 2 * p));
  return s;
}

template <typename Fn>
void expect_code(ErrorCode code, Fn&& fn) {
  try {
    fn();
    FAIL("expected a MathError");
  } catch (const MathError& e) {
    CHECK(e.code() == code);
  }
}

}  // namespace

TEST_CASE("catalog dimensions") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(make_sl(n).g_dim() == n * n - 1);
    CHECK(make_gl(n).g_dim() == n * n);
  }
  for (int n = 3; n <= 7; ++n) {
    const auto so = make_so(n);
    CHECK(so.g_dim() == n * (n - 1) / 2);
    CHECK(static_cast<int>(so.metadata().cartan.size()) == n / 2);
    CHECK(static_cast<int>(so.metadata().positive.size()) == (so.g_dim() - n / 2) / 2);
  }
  for (int m = 1; m <= 5; ++m) CHECK(make_sl2_irrep(m).v_dim() == m + 1);
}

TEST_CASE("every catalog basis closes under brackets") {
  for (const auto& rep : {make_sl(4), make_gl(3), make_so(5), make_sl2_irrep(4)}) {
    CHECK(rep.closure_residual() < 1e-12);
  }
}

TEST_CASE("sl(2) irreps satisfy the standard relations") {
  for (int m = 1; m <= 5; ++m) {
    const auto rep = make_sl2_irrep(m);
    const auto& h = rep.basis(0);
    const auto& e = rep.basis(1);
    const auto& f = rep.basis(2);
    CHECK((commutator(h, e) - 2.0 * e).norm() < 1e-12);
    CHECK((commutator(h, f) + 2.0 * f).norm() < 1e-12);
    CHECK((commutator(e, f) - h).norm() < 1e-12);
  }
  // The defining irrep is sl(2) with the same basis.
  require_same_algebra(make_sl(2), make_sl2_irrep(3));
}

TEST_CASE("Dynkin ratios against direct traces") {
  const auto ref = make_sl2_irrep(1);
  const auto adj = make_adjoint(ref);
  for (int m = 1; m <= 5; ++m) {
    const auto rep = make_sl2_irrep(m);
    const auto fit = dynkin_ratio(rep, ref);
    CHECK(fit.ratio == doctest::Approx(weight_square_sum(m) / 2.0).epsilon(1e-12));
    CHECK(fit.residual < 1e-10);
    const double tr_ad = weight_square_sum(2);
    CHECK(sl2_casimir_index(m) == doctest::Approx(weight_square_sum(m) / tr_ad).epsilon(1e-12));
    CHECK(dynkin_ratio(rep, adj).ratio == doctest::Approx(sl2_casimir_index(m)).epsilon(1e-10));
  }
}

TEST_CASE("combinator shapes") {
  const auto a = make_sl2_irrep(1);
  const auto b = make_sl2_irrep(2);
  CHECK(direct_sum(a, b).v_dim() == 5);
  CHECK(tensor(a, b).v_dim() == 6);
  CHECK(tensor_power(b, 3).v_dim() == 27);
  CHECK(tensor_power(b, 3).closure_residual() < 1e-10);
  const auto d = dual(b);
  for (int i = 0; i < 3; ++i) CHECK((d.basis(i) + b.basis(i).transpose()).norm() == 0.0);
  CHECK(kron(identity(2), identity(3)) == identity(6));
  expect_code(ErrorCode::IncompatibleAlgebras, [] { direct_sum(make_sl(2), make_sl(3)); });
  expect_code(ErrorCode::IncompatibleAlgebras, [] { tensor(make_sl(2), make_so(3)); });
}

TEST_CASE("samplers produce the requested element types") {
  const auto rep = make_sl(3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = sample_element(rep, SampleKind::generic, seed);
    CHECK(std::abs(determinant(g.matrix) - 1.0) < 1e-10);

    for (auto z : eigenvalues(sample_element(rep, SampleKind::hyperbolic, seed).matrix)) {
      CHECK(std::abs(z.imag()) < 1e-8);
      CHECK(z.real() > 0.0);
    }
    for (auto z : eigenvalues(sample_element(rep, SampleKind::elliptic, seed).matrix))
      CHECK(std::abs(std::abs(z) - 1.0) < 1e-8);

    const auto u = sample_element(rep, SampleKind::unipotent, seed).matrix;
    CHECK(nilpotency_residual(u - identity(3)) < 1e-12);

    const auto t = sample_element(rep, SampleKind::trace_free, seed).matrix;
    CHECK(std::abs(t.trace()) < 1e-9);
    CHECK(std::abs(determinant(t) - 1.0) < 1e-9);

    const auto c = sample_element(rep, SampleKind::cartan, seed).matrix;
    CHECK((c - ComplexMatrix(c.diagonal().asDiagonal())).norm() < 1e-12);
  }
}

TEST_CASE("samples are deterministic in the seed") {
  const auto rep = make_so(5);
  CHECK(sample_element(rep, SampleKind::generic, 42).matrix == sample_element(rep, SampleKind::generic, 42).matrix);
  CHECK(sample_element(rep, SampleKind::generic, 42).matrix != sample_element(rep, SampleKind::generic, 43).matrix);
}

TEST_CASE("one recipe realized in two representations") {
  const auto rep = make_sl(2);
  const auto adj = make_adjoint(rep);
  Rng rng(7);
  const auto recipe = sample_recipe(rep, SampleKind::generic, rng);
  const auto g = realize(rep, recipe);
  const auto ad_g = realize(adj, recipe);
  CHECK((ad_g.matrix - adjoint_matrix(rep, g)).norm() < 1e-9);
}

TEST_CASE("sampler preconditions") {
  Rng rng(1);
  expect_code(ErrorCode::Unsupported, [&] { sample_recipe(make_so(4), SampleKind::trace_free, rng); });
  const auto base = make_sl(2);
  const Representation bare("bare", base.basis());
  expect_code(ErrorCode::Unsupported, [&] { sample_recipe(bare, SampleKind::cartan, rng); });
  CHECK(sample_kind_from_string("unipotent") == SampleKind::unipotent);
  CHECK_THROWS_AS(sample_kind_from_string("parabolic"), ParseError);
}
