#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace compnet {

// Deterministic random stream.
//
// The engine is std::mt19937_64, whose output sequence for a given seed is
// fixed by the C++ standard. The standard <random> distributions are not
// portable across library implementations, so the integer and real draws
// below are defined here explicitly:
//
//   uniform_below(b)  rejection sampling on the raw 64-bit output, discarding
//                     values >= 2^64 - (2^64 mod b), then taking mod b
//   uniform_real()    top 53 bits of one raw draw, times 2^-53, in [0, 1)
//   bernoulli(p)      uniform_real() < p
//
// A stream is single-owner. Parallel work derives its own child streams.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() { return engine_(); }
  std::uint64_t uniform_below(std::uint64_t bound);
  std::uint64_t uniform_between(std::uint64_t lo, std::uint64_t hi) {
    return lo + uniform_below(hi - lo + 1);
  }
  double uniform_real();
  bool bernoulli(double p) { return uniform_real() < p; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

using StreamLabel = std::variant<std::int64_t, std::string>;

// Seed for the child stream identified by (base_seed, labels).
//
// Each label is absorbed in order: strings via 64-bit FNV-1a over their bytes,
// integers via their two's-complement bit pattern, each tagged with its kind so
// that "1" and 1 differ, and the running state is passed through the SplitMix64
// finalizer after every label. An empty label list returns base_seed unchanged,
// so RngStream(s) and derive_stream(s, {}) are the same stream.
std::uint64_t derive_seed(std::uint64_t base_seed, const std::vector<StreamLabel>& labels);

inline RngStream derive_stream(std::uint64_t base_seed, const std::vector<StreamLabel>& labels) {
  return RngStream(derive_seed(base_seed, labels));
}

// k distinct values from 0..population-1, uniformly over all k-subsets, in
// ascending order (Floyd's algorithm, k draws).
std::vector<std::uint64_t> sample_without_replacement(std::uint64_t population,
                                                      std::uint64_t k, RngStream& rng);

}  // namespace compnet
