// Serial reference vs OpenMP path for the dense kernels. Run with
// OMP_NUM_THREADS set to compare scaling.

#include <cmath>
#include <random>

#include <benchmark/benchmark.h>

#include "opencat/matrix.hpp"
#include "opencat/quantizer.hpp"

using namespace opencat;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(1) == 0 ? Exec::Serial : Exec::Parallel; }

ComplexMatrix random_matrix(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix a(n, n);
  for (auto& z : a.data()) {
    const double re = u(rng);
    z = {re, u(rng)};
  }
  return a;
}

const CutoffSymbol& cutoff() {
  static const CutoffSymbol c = make_trapped_symbol(BumpSpec{}, {48, 256, 1e-6});
  return c;
}

void BM_Matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n), b = random_matrix(n + 1);
  ComplexMatrix bb(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bb(i, j) = b(i, j);
  for (auto _ : state) benchmark::DoNotOptimize(matmul(a, bb, exec_of(state)));
}

void BM_OpWeyl(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(op_weyl(cutoff().symbol, n, exec_of(state)));
}

void BM_OpLeft(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(op_left_separable(cutoff().f, cutoff().g, n, exec_of(state)));
}

void BM_SymbolFromFunction(benchmark::State& state) {
  const int grid = static_cast<int>(state.range(0));
  auto f = [](double x, double xi) { return cplx(std::cos(6.283185307179586 * x) * std::exp(std::sin(xi)), 0.0); };
  for (auto _ : state) benchmark::DoNotOptimize(symbol_from_function(f, grid / 4, grid, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_Matmul)->ArgsProduct({{128, 256, 512}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OpWeyl)->ArgsProduct({{128, 256}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OpLeft)->ArgsProduct({{128, 256, 512}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymbolFromFunction)->ArgsProduct({{128, 256}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
