#pragma once

#include <cstdint>

namespace compnet {

// Edge-count calculus that keeps the three models at the same (n, m).
//
// A preferential-attachment graph grown to n vertices with s edges per
// arrival holds n*s - s(s+1)/2 edges. A ring lattice with radius nei holds
// n*nei. Deleting x = n(nei - s) + s(s+1)/2 lattice edges equalises the two;
// with nei == s the deletion count no longer depends on n.

// Throws ParameterError if n < s + 1 or s == 0.
std::uint64_t scale_free_edge_count(std::uint64_t n, std::uint64_t s);

// Throws ParameterError if n < 2*nei + 1 or nei == 0.
std::uint64_t lattice_edge_count(std::uint64_t n, std::uint64_t nei);

// Throws ParameterError when the result would be negative or exceed n*nei.
std::uint64_t deletion_count(std::uint64_t n, std::uint64_t nei, std::uint64_t s);

struct EdgeBudget {
  std::uint64_t m = 0;  // edges after deletion
  std::uint64_t x = 0;  // lattice edges to delete
};

// Budget for a small-world graph matched to a scale-free graph with the same n and s.
EdgeBudget small_world_budget(std::uint64_t n, std::uint64_t nei, std::uint64_t s);

}  // namespace compnet
