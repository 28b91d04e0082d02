#include "doctest.h"
#include "cayley/kernels.hpp"
#include "cayley/random.hpp"
#include "oracles.hpp"

using namespace cayley;

namespace {

std::vector<Complex> random_coeffs(int n, Rng& rng) {
  std::vector<Complex> c(std::size_t{1} << n);
  for (auto& z : c) z = rng.complex_normal();
  return c;
}

double distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("reorder_sign matches sorting the concatenated word") {
  for (kernels::Mask a = 0; a < 64; ++a)
    for (kernels::Mask b = 0; b < 64; ++b) {
      if (a & b) continue;
      CHECK(kernels::reorder_sign(a, b) == oracle::blade_product(a, b).first);
    }
}

TEST_CASE("clifford_product: parallel, serial and oracle agree") {
  Rng rng(1);
  for (int n = 1; n <= 6; ++n) {
    const auto u = random_coeffs(n, rng);
    const auto v = random_coeffs(n, rng);
    std::vector<Complex> par(u.size()), ser(u.size());
    kernels::clifford_product(n, u, v, par);
    kernels::serial::clifford_product(n, u, v, ser);
    CHECK(par == ser);
    CHECK(distance(par, oracle::clifford(n, u, v)) < 1e-11);
  }
}

TEST_CASE("exterior_product: parallel, serial and oracle agree") {
  Rng rng(2);
  for (int n = 1; n <= 6; ++n) {
    const auto u = random_coeffs(n, rng);
    const auto v = random_coeffs(n, rng);
    std::vector<Complex> par(u.size()), ser(u.size());
    kernels::exterior_product(n, u, v, par);
    kernels::serial::exterior_product(n, u, v, ser);
    CHECK(par == ser);
    CHECK(distance(par, oracle::wedge(n, u, v)) < 1e-11);
  }
}

TEST_CASE("left_multiplication columns are products with basis blades") {
  Rng rng(3);
  const int n = 4;
  const auto u = random_coeffs(n, rng);
  const ComplexMatrix par = kernels::left_multiplication(n, u);
  CHECK(par == kernels::serial::left_multiplication(n, u));
  for (kernels::Mask j = 0; j < 16; ++j) {
    std::vector<Complex> e(16);
    e[j] = 1.0;
    const auto col = oracle::clifford(n, u, e);
    for (std::size_t i = 0; i < 16; ++i) CHECK(std::abs(par(static_cast<Eigen::Index>(i), j) - col[i]) < 1e-12);
  }
}

TEST_CASE("trace_pairing equals explicit traces") {
  Rng rng(4);
  std::vector<ComplexMatrix> lhs, rhs;
  for (int i = 0; i < 5; ++i) lhs.push_back(rng.complex_gaussian(3, 3));
  for (int i = 0; i < 4; ++i) rhs.push_back(rng.complex_gaussian(3, 3));
  const ComplexMatrix par = kernels::trace_pairing(lhs, rhs);
  CHECK((par - kernels::serial::trace_pairing(lhs, rhs)).norm() < 1e-12);
  REQUIRE(par.rows() == 5);
  REQUIRE(par.cols() == 4);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 4; ++j) CHECK(std::abs(par(i, j) - (lhs[i] * rhs[j]).trace()) < 1e-12);
}
