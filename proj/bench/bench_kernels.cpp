// OpenMP kernels against their serial references, plus one end-to-end suite.

#include <vector>

#include <benchmark/benchmark.h>

#include "cayley/catalog.hpp"
#include "cayley/kernels.hpp"
#include "cayley/random.hpp"
#include "cayley/verify.hpp"

namespace {

using namespace cayley;

std::vector<Complex> random_multivector(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Complex> c(std::size_t{1} << n);
  for (auto& z : c) z = rng.complex_normal();
  return c;
}

template <auto Kernel>
void BM_Clifford(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto u = random_multivector(n, 1);
  const auto v = random_multivector(n, 2);
  std::vector<Complex> out(u.size());
  for (auto _ : state) {
    Kernel(n, u, v, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(static_cast<std::int64_t>(u.size()));
}

template <auto Kernel>
void BM_LeftMultiplication(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto u = random_multivector(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(n, u));
}

template <auto Kernel>
void BM_TracePairing(benchmark::State& state) {
  const auto rep = make_sl(static_cast<int>(state.range(0)));
  const auto& basis = rep.basis();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(basis, basis));
}

void BM_SuiteSpinCayley(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_suite("spin-cayley", 5, 0));
}

using ProductFn = void (*)(int, std::span<const Complex>, std::span<const Complex>, std::span<Complex>);
using LeftFn = ComplexMatrix (*)(int, std::span<const Complex>);
using PairFn = ComplexMatrix (*)(std::span<const ComplexMatrix>, std::span<const ComplexMatrix>);

constexpr ProductFn kCliffordPar = kernels::clifford_product;
constexpr ProductFn kCliffordSer = kernels::serial::clifford_product;
constexpr ProductFn kExteriorPar = kernels::exterior_product;
constexpr ProductFn kExteriorSer = kernels::serial::exterior_product;
constexpr LeftFn kLeftPar = kernels::left_multiplication;
constexpr LeftFn kLeftSer = kernels::serial::left_multiplication;
constexpr PairFn kPairPar = kernels::trace_pairing;
constexpr PairFn kPairSer = kernels::serial::trace_pairing;

}  // namespace

BENCHMARK(BM_Clifford<kCliffordPar>)->Name("clifford_product/omp")->DenseRange(4, 10, 2);
BENCHMARK(BM_Clifford<kCliffordSer>)->Name("clifford_product/serial")->DenseRange(4, 10, 2);
BENCHMARK(BM_Clifford<kExteriorPar>)->Name("exterior_product/omp")->DenseRange(4, 10, 2);
BENCHMARK(BM_Clifford<kExteriorSer>)->Name("exterior_product/serial")->DenseRange(4, 10, 2);
BENCHMARK(BM_LeftMultiplication<kLeftPar>)->Name("left_multiplication/omp")->DenseRange(4, 8, 2);
BENCHMARK(BM_LeftMultiplication<kLeftSer>)->Name("left_multiplication/serial")->DenseRange(4, 8, 2);
BENCHMARK(BM_TracePairing<kPairPar>)->Name("trace_pairing/omp")->DenseRange(3, 9, 3);
BENCHMARK(BM_TracePairing<kPairSer>)->Name("trace_pairing/serial")->DenseRange(3, 9, 3);
BENCHMARK(BM_SuiteSpinCayley)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
