#include <benchmark/benchmark.h>

#include "dmod/engine.hpp"
#include "dmod/partition.hpp"
#include "dmod/poly_model.hpp"

using namespace dmod;

static void BM_RelSuite(benchmark::State& state) {
  RunConfig c;
  c.size = static_cast<std::uint32_t>(state.range(0));
  c.max_degree = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto r = run_suite(c);
    benchmark::DoNotOptimize(r.checks.data());
  }
}
BENCHMARK(BM_RelSuite)->Args({1, 4})->Args({2, 3})->Args({2, 4})->Unit(benchmark::kMillisecond);

static void BM_PolySuite(benchmark::State& state) {
  RunConfig c;
  c.model = ModelKind::Poly;
  c.size = 1;
  c.characteristic = static_cast<std::uint32_t>(state.range(0));
  c.max_degree = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto r = run_suite(c);
    benchmark::DoNotOptimize(r.checks.data());
  }
}
BENCHMARK(BM_PolySuite)->Args({0, 8})->Args({5, 10})->Unit(benchmark::kMillisecond);

static void BM_KernelSlice(benchmark::State& state) {
  const auto v = static_cast<std::uint32_t>(state.range(0));
  const auto p = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) {
    PolyFragment frag(v, p, 8);
    benchmark::DoNotOptimize(kernel_slice(frag, 2));
  }
}
BENCHMARK(BM_KernelSlice)->Args({1, 0})->Args({2, 0})->Args({2, 3})->Args({3, 2})->Unit(benchmark::kMillisecond);

static void BM_Partitions(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(partitions(n));
}
BENCHMARK(BM_Partitions)->DenseRange(4, 9);

static void BM_Unshuffles(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(unsh(n, n / 2));
}
BENCHMARK(BM_Unshuffles)->DenseRange(4, 8);

BENCHMARK_MAIN();
