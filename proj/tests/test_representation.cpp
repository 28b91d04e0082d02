#include <array>

#include "doctest.h"
#include "cayley/catalog.hpp"
#include "cayley/errors.hpp"
#include "cayley/representation.hpp"
#include "oracles.hpp"

using namespace cayley;

namespace {

GroupElement element(const ComplexMatrix& m) {
  GroupElement g;
  g.matrix = m;
  return g;
}

ComplexMatrix diag2(Complex a, Complex b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
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

TEST_CASE("sl(2) Gram matrix from explicit traces") {
  const auto rep = make_sl(2);
  REQUIRE(rep.g_dim() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(std::abs(rep.gram()(i, j) - (rep.basis(i) * rep.basis(j)).trace()) < 1e-14);
}

TEST_CASE("Phi on sl(2) for a diagonal element") {
  const auto rep = make_sl(2);
  const auto x = cayley::cayley(rep, element(diag2(2.0, 0.5)));
  CHECK((rep.materialize(x) - diag2(0.75, -0.75)).norm() < 1e-14);
}

TEST_CASE("Phi on gl(n) is the inclusion and Psi = det(g)^n") {
  Rng rng(4);
  for (int n = 2; n <= 4; ++n) {
    const auto rep = make_gl(n);
    const ComplexMatrix a = identity(n) + 0.3 * rng.complex_gaussian(n, n);
    const auto g = element(a);
    CHECK((rep.materialize(cayley::cayley(rep, g)) - a).norm() < 1e-12);
    // X -> g X on gl(n) is n copies of g acting on columns.
    const Complex expected = std::pow(determinant(a), n);
    CHECK(std::abs(psi(rep, g) - expected) < 1e-10 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("Jacobian against an independent finite difference") {
  const auto rep = make_so(4);
  const auto g = sample_element(rep, SampleKind::generic, 17);
  const ComplexMatrix jac = cayley_jacobian(rep, g);
  const double eps = 1e-6;
  for (int i = 0; i < rep.g_dim(); ++i) {
    const ComplexMatrix step = eps * rep.basis(i);
    const ComplexMatrix plus = g.matrix * oracle::taylor_exp(step);
    const ComplexMatrix minus = g.matrix * oracle::taylor_exp(-step);
    const ComplexVector fd =
        (cayley::cayley(rep, element(plus)).coords - cayley::cayley(rep, element(minus)).coords) / (2 * eps);
    CHECK((jac.col(i) - fd).norm() < 1e-7);
  }
}

TEST_CASE("identity element") {
  for (const auto& rep : {make_sl(3), make_so(5), make_gl(2), make_sl2_irrep(3)}) {
    const auto e = identity_element(rep);
    CHECK(std::abs(psi(rep, e) - 1.0) < 1e-12);
    CHECK((cayley_jacobian(rep, e) - identity(rep.g_dim())).norm() < 1e-12);
    CHECK((adjoint_matrix(rep, e) - identity(rep.g_dim())).norm() < 1e-12);
    CHECK(centralizer_dim(rep, e) == rep.g_dim());
    CHECK(std::abs(character(rep, e) - static_cast<double>(rep.v_dim())) < 1e-12);
  }
}

TEST_CASE("project and coordinates") {
  const auto rep = make_sl(3);
  const ComplexMatrix m = ComplexMatrix::Identity(3, 3) * 2.0 + oracle::unit(3, 0, 2);
  double residual = 0.0;
  const auto x = rep.coordinates(m, residual);
  CHECK((rep.materialize(x) - oracle::unit(3, 0, 2)).norm() < 1e-14);
  CHECK(residual > 0.5);
  rep.coordinates(oracle::unit(3, 1, 0), residual);
  CHECK(residual < 1e-14);
}

TEST_CASE("structure constants reproduce brackets") {
  const auto rep = make_so(4);
  const auto sc = rep.structure_constants();
  for (int i = 0; i < rep.g_dim(); ++i)
    for (int j = 0; j < rep.g_dim(); ++j) {
      const ComplexMatrix bracket = commutator(rep.basis(i), rep.basis(j));
      CHECK((rep.materialize(ComplexVector(sc[i].col(j))) - bracket).norm() < 1e-12);
    }
  CHECK(rep.closure_residual() < 1e-12);
}

TEST_CASE("ad_matrix and adjoint_matrix agree with exp") {
  const auto rep = make_sl(3);
  Rng rng(9);
  AlgebraVector x{0.3 * sample_algebra(rep, rng)};
  const auto b = exp_element(rep, x.coords);
  CHECK((adjoint_matrix(rep, b) - oracle::taylor_exp(ad_matrix(rep, x))).norm() < 1e-10);
}

TEST_CASE("rank and centralizers") {
  CHECK(group_rank(make_sl(3)) == 2);
  CHECK(group_rank(make_so(5)) == 2);
  CHECK(group_rank(make_so(6)) == 3);
  CHECK(group_rank(make_gl(3)) == 3);
  const auto rep = make_sl(3);
  const auto g = sample_element(rep, SampleKind::generic, 3);
  CHECK(centralizer_dim(rep, g) == 2);
  AlgebraVector zero{ComplexVector::Zero(rep.g_dim())};
  CHECK(centralizer_dim(rep, zero) == rep.g_dim());
}

TEST_CASE("change_basis leaves Phi and Psi unchanged") {
  const auto rep = make_so(3);
  Rng rng(12);
  const ComplexMatrix c = identity(3) + 0.4 * rng.complex_gaussian(3, 3);
  const auto other = change_basis(rep, c);
  const auto g = sample_element(rep, SampleKind::generic, 5);
  CHECK((rep.materialize(cayley::cayley(rep, g)) - other.materialize(cayley::cayley(other, g))).norm() < 1e-12);
  CHECK(std::abs(psi(rep, g) - psi(other, g)) < 1e-10);
  CHECK(other.metadata().cartan.size() == rep.metadata().cartan.size());
}

TEST_CASE("restriction to a subalgebra") {
  const auto rep = make_sl(2);
  // H alone is a Cartan subalgebra.
  const std::array<int, 1> cartan{0};
  const auto h = restrict_to_subalgebra(rep, cartan);
  CHECK(h.g_dim() == 1);
  // E and F do not close: [E, F] = H.
  const std::array<int, 2> ef{1, 2};
  expect_code(ErrorCode::NotASubalgebra, [&] { restrict_to_subalgebra(rep, ef); });
}

TEST_CASE("degenerate trace forms are rejected") {
  const std::vector<ComplexMatrix> nilpotent{oracle::unit(2, 0, 1)};
  expect_code(ErrorCode::DegenerateForm, [&] { build_gram(nilpotent); });
  expect_code(ErrorCode::DegenerateForm, [&] { Representation("upper", nilpotent); });
}

TEST_CASE("family names") {
  CHECK(family_from_string("so") == Family::so);
  CHECK(to_string(Family::sl2_irrep) == "sl2_irrep");
  CHECK_THROWS_AS(family_from_string("sp"), ParseError);
}
