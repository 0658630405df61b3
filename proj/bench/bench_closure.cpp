// Serial reference sweep vs the row-parallel sweep on dense random networks.

#include <random>

#include <benchmark/benchmark.h>

#include "asymclust/clustering.hpp"
#include "asymclust/minimax.hpp"
#include "asymclust/verify.hpp"

namespace {

asymclust::Network make(std::size_t n) {
  std::mt19937_64 rng(42);
  return asymclust::random_network(n, rng);
}

void BM_ClosureSerial(benchmark::State& state) {
  const auto net = make(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(asymclust::minimax_closure_serial(net.dissim()));
  state.SetComplexityN(state.range(0));
}

void BM_ClosureParallel(benchmark::State& state) {
  const auto net = make(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(asymclust::minimax_closure_parallel(net.dissim()));
  state.SetComplexityN(state.range(0));
}

void BM_Reciprocal(benchmark::State& state) {
  const auto net = make(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(asymclust::reciprocal(net));
}

void BM_Nonreciprocal(benchmark::State& state) {
  const auto net = make(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(asymclust::nonreciprocal(net));
}

}  // namespace

BENCHMARK(BM_ClosureSerial)->RangeMultiplier(2)->Range(64, 512)->Complexity(benchmark::oNCubed);
BENCHMARK(BM_ClosureParallel)->RangeMultiplier(2)->Range(64, 512)->Complexity(benchmark::oNCubed);
BENCHMARK(BM_Reciprocal)->Arg(500);
BENCHMARK(BM_Nonreciprocal)->Arg(500);

BENCHMARK_MAIN();
