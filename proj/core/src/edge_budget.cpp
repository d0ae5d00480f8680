#include "compnet/edge_budget.hpp"

#include <string>

#include "compnet/errors.hpp"

namespace compnet {

std::uint64_t scale_free_edge_count(std::uint64_t n, std::uint64_t s) {
  if (s == 0) throw ParameterError("S must be at least 1");
  if (n < s + 1) {
    throw ParameterError("growth cannot attach S=" + std::to_string(s) +
                         " edges before S+1 vertices exist (n=" + std::to_string(n) + ")");
  }
  return n * s - s * (s + 1) / 2;
}

std::uint64_t lattice_edge_count(std::uint64_t n, std::uint64_t nei) {
  if (nei == 0) throw ParameterError("Nei must be at least 1");
  if (n < 2 * nei + 1) {
    throw ParameterError("ring lattice with Nei=" + std::to_string(nei) +
                         " needs at least " + std::to_string(2 * nei + 1) +
                         " vertices (n=" + std::to_string(n) + ")");
  }
  return n * nei;
}

std::uint64_t deletion_count(std::uint64_t n, std::uint64_t nei, std::uint64_t s) {
  const auto sn = static_cast<std::int64_t>(n);
  const auto snei = static_cast<std::int64_t>(nei);
  const auto ss = static_cast<std::int64_t>(s);
  const std::int64_t x = sn * (snei - ss) + ss * (ss + 1) / 2;
  if (x < 0) {
    throw ParameterError("edge budget infeasible: deletion count " + std::to_string(x) +
                         " is negative (n=" + std::to_string(n) + ", Nei=" +
                         std::to_string(nei) + ", S=" + std::to_string(s) + ")");
  }
  if (x > sn * snei) {
    throw ParameterError("edge budget infeasible: deletion count " + std::to_string(x) +
                         " exceeds the " + std::to_string(n * nei) + " lattice edges");
  }
  return static_cast<std::uint64_t>(x);
}

EdgeBudget small_world_budget(std::uint64_t n, std::uint64_t nei, std::uint64_t s) {
  const std::uint64_t lattice = lattice_edge_count(n, nei);
  const std::uint64_t x = deletion_count(n, nei, s);
  return {lattice - x, x};
}

}  // namespace compnet
