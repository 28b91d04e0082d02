#include "cayley/kernels.hpp"

#include <vector>

namespace cayley::kernels {

namespace {

std::vector<Mask> support(std::span<const Complex> u) {
  std::vector<Mask> s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != Complex{}) s.push_back(static_cast<Mask>(i));
  }
  return s;
}

constexpr std::int64_t kParallelThreshold = 64;

}  // namespace

ComplexMatrix trace_pairing(std::span<const ComplexMatrix> lhs, std::span<const ComplexMatrix> rhs) {
  const auto rows = static_cast<std::int64_t>(lhs.size());
  const auto cols = static_cast<std::int64_t>(rhs.size());
  ComplexMatrix out(rows, cols);
  // Transposes once so each entry is a plain elementwise dot product.
  std::vector<ComplexMatrix> lt(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) lt[i] = lhs[i].transpose();

#pragma omp parallel for collapse(2) schedule(static) if (rows * cols >= kParallelThreshold)
  for (std::int64_t i = 0; i < rows; ++i) {
    for (std::int64_t j = 0; j < cols; ++j) {
      out(i, j) = lt[static_cast<std::size_t>(i)].cwiseProduct(rhs[static_cast<std::size_t>(j)]).sum();
    }
  }
  return out;
}

void clifford_product(int n, std::span<const Complex> u, std::span<const Complex> v,
                      std::span<Complex> out) {
  const auto dim = static_cast<std::int64_t>(1) << n;
  const auto su = support(u);
#pragma omp parallel for schedule(static) if (dim >= kParallelThreshold)
  for (std::int64_t k = 0; k < dim; ++k) {
    const auto target = static_cast<Mask>(k);
    Complex acc{};
    for (Mask i : su) {
      const Mask j = i ^ target;
      const Complex vj = v[j];
      if (vj == Complex{}) continue;
      acc += static_cast<double>(reorder_sign(i, j)) * u[i] * vj;
    }
    out[static_cast<std::size_t>(k)] = acc;
  }
}

void exterior_product(int n, std::span<const Complex> u, std::span<const Complex> v,
                      std::span<Complex> out) {
  const auto dim = static_cast<std::int64_t>(1) << n;
  const auto su = support(u);
#pragma omp parallel for schedule(static) if (dim >= kParallelThreshold)
  for (std::int64_t k = 0; k < dim; ++k) {
    const auto target = static_cast<Mask>(k);
    Complex acc{};
    for (Mask i : su) {
      if ((i & ~target) != 0) continue;
      const Mask j = target ^ i;
      acc += static_cast<double>(reorder_sign(i, j)) * u[i] * v[j];
    }
    out[static_cast<std::size_t>(k)] = acc;
  }
}

ComplexMatrix left_multiplication(int n, std::span<const Complex> u) {
  const auto dim = static_cast<std::int64_t>(1) << n;
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  const auto su = support(u);
#pragma omp parallel for schedule(static) if (dim >= kParallelThreshold)
  for (std::int64_t col = 0; col < dim; ++col) {
    const auto j = static_cast<Mask>(col);
    for (Mask i : su) m(i ^ j, col) = static_cast<double>(reorder_sign(i, j)) * u[i];
  }
  return m;
}

namespace serial {

ComplexMatrix trace_pairing(std::span<const ComplexMatrix> lhs, std::span<const ComplexMatrix> rhs) {
  ComplexMatrix out(static_cast<Eigen::Index>(lhs.size()), static_cast<Eigen::Index>(rhs.size()));
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    for (std::size_t j = 0; j < rhs.size(); ++j) {
      out(i, j) = (lhs[i] * rhs[j]).trace();
    }
  }
  return out;
}

void clifford_product(int n, std::span<const Complex> u, std::span<const Complex> v,
                      std::span<Complex> out) {
  const Mask dim = Mask{1} << n;
  for (Mask k = 0; k < dim; ++k) out[k] = Complex{};
  for (Mask i = 0; i < dim; ++i) {
    for (Mask j = 0; j < dim; ++j) {
      out[i ^ j] += static_cast<double>(reorder_sign(i, j)) * u[i] * v[j];
    }
  }
}

void exterior_product(int n, std::span<const Complex> u, std::span<const Complex> v,
                      std::span<Complex> out) {
  const Mask dim = Mask{1} << n;
  for (Mask k = 0; k < dim; ++k) out[k] = Complex{};
  for (Mask i = 0; i < dim; ++i) {
    for (Mask j = 0; j < dim; ++j) {
      if (i & j) continue;
      out[i | j] += static_cast<double>(reorder_sign(i, j)) * u[i] * v[j];
    }
  }
}

ComplexMatrix left_multiplication(int n, std::span<const Complex> u) {
  const Mask dim = Mask{1} << n;
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (Mask i = 0; i < dim; ++i) {
    for (Mask j = 0; j < dim; ++j) m(i ^ j, j) += static_cast<double>(reorder_sign(i, j)) * u[i];
  }
  return m;
}

}  // namespace serial
}  // namespace cayley::kernels
