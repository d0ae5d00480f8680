#include "compnet/rng.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace compnet {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = kFnvOffset;
  for (unsigned char c : s) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

}  // namespace

std::uint64_t RngStream::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  // 2^64 mod bound, computed without 128-bit arithmetic.
  const std::uint64_t remainder = (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - remainder;
  for (;;) {
    const std::uint64_t x = engine_();
    if (remainder == 0 || x <= limit) return x % bound;
  }
}

double RngStream::uniform_real() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t base_seed, const std::vector<StreamLabel>& labels) {
  std::uint64_t state = base_seed;
  for (const auto& label : labels) {
    std::uint64_t absorbed = 0;
    std::uint64_t tag = 0;
    if (const auto* s = std::get_if<std::string>(&label)) {
      absorbed = fnv1a(*s);
      tag = 0x5354; // "ST"
    } else {
      absorbed = static_cast<std::uint64_t>(std::get<std::int64_t>(label));
      tag = 0x494e; // "IN"
    }
    state = splitmix64(state ^ splitmix64(absorbed + tag));
  }
  return state;
}

std::vector<std::uint64_t> sample_without_replacement(std::uint64_t population,
                                                      std::uint64_t k, RngStream& rng) {
  if (k > population) {
    throw std::invalid_argument("cannot sample more items than the population holds");
  }
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(k);
  for (std::uint64_t j = population - k; j < population; ++j) {
    const std::uint64_t t = rng.uniform_below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> out(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace compnet
