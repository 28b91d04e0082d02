#include <bit>

#include "doctest.h"
#include "cayley/clifford.hpp"
#include "cayley/errors.hpp"
#include "cayley/random.hpp"
#include "oracles.hpp"

using namespace cayley;

namespace {

CliffordElement random_element(int n, Rng& rng) {
  CliffordElement u(n);
  for (auto& c : u.coeffs()) c = rng.complex_normal();
  return u;
}

CliffordElement random_vector(int n, Rng& rng) {
  return CliffordElement::vector(n, rng.complex_gaussian(n, 1));
}

double dist(const CliffordElement& a, const CliffordElement& b) { return (a - b).norm(); }

}  // namespace

TEST_CASE("generator relations") {
  const int n = 3;
  const auto z1 = CliffordElement::blade(n, 0b001);
  const auto z2 = CliffordElement::blade(n, 0b010);
  CHECK(dist(z1 * z1, CliffordElement::scalar(n, 1.0)) == 0.0);
  CHECK(dist(z1 * z2, -(z2 * z1)) == 0.0);
  CHECK(dist(z1 * z2, CliffordElement::blade(n, 0b011)) == 0.0);
  CHECK(exterior_mul(z1, z1).norm() == 0.0);
  CHECK(dist(exterior_mul(z1, z2), z1 * z2) == 0.0);
}

TEST_CASE("products agree with the brute-force oracle") {
  Rng rng(21);
  for (int n = 1; n <= 5; ++n) {
    const auto u = random_element(n, rng);
    const auto v = random_element(n, rng);
    const CliffordElement ref(n, oracle::clifford(n, u.coeffs(), v.coeffs()));
    CHECK(dist(clifford_mul(u, v), ref) < 1e-11);
    const CliffordElement wref(n, oracle::wedge(n, u.coeffs(), v.coeffs()));
    CHECK(dist(exterior_mul(u, v), wref) < 1e-11);
  }
  CHECK_THROWS_AS(clifford_mul(CliffordElement(2), CliffordElement(3)), MathError);
}

TEST_CASE("alpha and kappa act by degree") {
  const int n = 4;
  for (Mask m = 0; m < 16; ++m) {
    const int k = std::popcount(m);
    const auto b = CliffordElement::blade(n, m);
    const double a_sign = (k * (k - 1) / 2) % 2 ? -1.0 : 1.0;
    const double k_sign = k % 2 ? -1.0 : 1.0;
    CHECK(dist(alpha(b), a_sign * b) == 0.0);
    CHECK(dist(kappa(b), k_sign * b) == 0.0);
  }
  Rng rng(3);
  const auto u = random_element(n, rng);
  const auto v = random_element(n, rng);
  CHECK(dist(alpha(u * v), alpha(v) * alpha(u)) < 1e-12);
  CHECK(dist(kappa(u * v), kappa(u) * kappa(v)) < 1e-12);
}

TEST_CASE("graded projections") {
  Rng rng(4);
  const auto u = random_element(4, rng);
  CliffordElement sum(4);
  for (int k = 0; k <= 4; ++k) sum += pr(u, k);
  CHECK(dist(sum, u) < 1e-14);
  CHECK(pr0(u) == u[0]);
  CHECK(off_degree_norm(pr(u, 2), 2) == 0.0);
  CHECK(odd_norm(pr(u, 2) + pr(u, 4)) == 0.0);
}

TEST_CASE("iota and epsilon") {
  Rng rng(5);
  const int n = 4;
  const auto x = random_vector(n, rng);
  const auto y = random_vector(n, rng);
  const Complex xy = vector_part(x).transpose() * vector_part(y);
  CHECK(std::abs(pr0(iota(x, y)) - xy) < 1e-13);
  // Clifford product by a vector splits into wedge plus contraction.
  const auto u = random_element(n, rng);
  CHECK(dist(x * u, epsilon(x, u) + iota(x, u)) < 1e-12);
  // iota is an odd derivation.
  const auto v = random_element(n, rng);
  CHECK(dist(iota(x, exterior_mul(u, v)), exterior_mul(iota(x, u), v) + exterior_mul(kappa(u), iota(x, v))) <
        1e-11);
}

TEST_CASE("gamma matrices and pairing") {
  Rng rng(6);
  const int n = 3;
  const auto u = random_element(n, rng);
  const auto v = random_element(n, rng);
  CHECK((gamma_matrix(u * v) - gamma_matrix(u) * gamma_matrix(v)).norm() < 1e-11);
  CHECK(std::abs(gamma_matrix(u).trace() / 8.0 - pr0(u)) < 1e-13);
  Complex direct = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) direct += u.coeffs()[i] * v.coeffs()[i];
  CHECK(std::abs(pairing(u, v) - direct) < 1e-13);
}

TEST_CASE("volume element and idempotents") {
  for (int n = 1; n <= 6; ++n) {
    const auto vi = volume_idempotents(n);
    const auto one = CliffordElement::scalar(n, 1.0);
    CHECK(dist(vi.mu * vi.mu, one) < 1e-13);
    CHECK(dist(vi.e_plus * vi.e_plus, vi.e_plus) < 1e-13);
    CHECK(dist(vi.e_minus * vi.e_minus, vi.e_minus) < 1e-13);
    CHECK((vi.e_plus * vi.e_minus).norm() < 1e-13);
    CHECK(dist(vi.e_plus + vi.e_minus, one) < 1e-13);
  }
}
