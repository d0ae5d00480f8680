#include <benchmark/benchmark.h>

#include "compnet/generators.hpp"
#include "compnet/metrics.hpp"

namespace {

using namespace compnet;

void BM_ComputeMetrics(benchmark::State& state) {
  const auto spec = ModelSpec::small_world(static_cast<std::uint64_t>(state.range(0)),
                                           static_cast<std::uint64_t>(state.range(1)), 0.3);
  RngStream rng(1);
  const Graph g = generate(spec, rng);
  for (auto _ : state) benchmark::DoNotOptimize(compute_metrics(g));
}

// Clustering alone is cheap next to the all-pairs BFS.
void BM_Clustering(benchmark::State& state) {
  const auto spec = ModelSpec::scale_free(static_cast<std::uint64_t>(state.range(0)), 8, 2.5);
  RngStream rng(1);
  const Graph g = generate(spec, rng);
  for (auto _ : state) benchmark::DoNotOptimize(global_clustering(g));
}

}  // namespace

BENCHMARK(BM_ComputeMetrics)->Args({100, 2})->Args({1000, 2})->Args({1000, 16})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Clustering)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
