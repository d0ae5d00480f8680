#include <benchmark/benchmark.h>

#include "compnet/generators.hpp"
#include "compnet/model_spec.hpp"

namespace {

using namespace compnet;

void BM_Generate(benchmark::State& state, ModelSpec (*make)(std::uint64_t, std::uint64_t)) {
  const ModelSpec spec = make(static_cast<std::uint64_t>(state.range(0)),
                              static_cast<std::uint64_t>(state.range(1)));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    RngStream rng(seed++);
    benchmark::DoNotOptimize(generate(spec, rng));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(spec.m));
}

ModelSpec random_spec(std::uint64_t n, std::uint64_t s) { return ModelSpec::random(n, s); }
ModelSpec scale_free_spec(std::uint64_t n, std::uint64_t s) { return ModelSpec::scale_free(n, s, 2.5); }
ModelSpec small_world_spec(std::uint64_t n, std::uint64_t s) { return ModelSpec::small_world(n, s, 0.3); }

}  // namespace

BENCHMARK_CAPTURE(BM_Generate, random, random_spec)->Args({1000, 2})->Args({10000, 16});
BENCHMARK_CAPTURE(BM_Generate, scale_free, scale_free_spec)->Args({1000, 2})->Args({10000, 16});
BENCHMARK_CAPTURE(BM_Generate, small_world, small_world_spec)->Args({1000, 2})->Args({10000, 16});
