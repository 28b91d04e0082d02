#pragma once

#include <cstdint>
#include <span>

#include "cayley/matrix.hpp"

/// Data-parallel inner loops. Each kernel in `cayley::kernels` is an OpenMP
/// version whose per-output summation order is fixed, so results do not
/// depend on the thread count. `cayley::kernels::serial` holds the plain
/// reference loops the tests compare against.
namespace cayley::kernels {

using Mask = std::uint32_t;

/// (-1)^{#{(i, j) : i in I, j in J, i > j}}; the reordering sign of z_I z_J.
inline int reorder_sign(Mask lhs, Mask rhs) {
  int swaps = 0;
  for (Mask a = lhs >> 1; a != 0; a >>= 1) swaps += __builtin_popcount(a & rhs);
  return (swaps & 1) ? -1 : 1;
}

/// M(i, j) = tr(lhs[i] * rhs[j]).
ComplexMatrix trace_pairing(std::span<const ComplexMatrix> lhs, std::span<const ComplexMatrix> rhs);

/// Clifford product over an orthonormal basis (z_i^2 = 1). All spans have
/// length 2^n, indexed by subset bitmask.
void clifford_product(int n, std::span<const Complex> u, std::span<const Complex> v,
                      std::span<Complex> out);

/// Exterior (wedge) product on the same coefficient layout.
void exterior_product(int n, std::span<const Complex> u, std::span<const Complex> v,
                      std::span<Complex> out);

/// Matrix of w -> u w in the z_I basis (2^n x 2^n).
ComplexMatrix left_multiplication(int n, std::span<const Complex> u);

namespace serial {

ComplexMatrix trace_pairing(std::span<const ComplexMatrix> lhs, std::span<const ComplexMatrix> rhs);
void clifford_product(int n, std::span<const Complex> u, std::span<const Complex> v,
                      std::span<Complex> out);
void exterior_product(int n, std::span<const Complex> u, std::span<const Complex> v,
                      std::span<Complex> out);
ComplexMatrix left_multiplication(int n, std::span<const Complex> u);

}  // namespace serial
}  // namespace cayley::kernels
