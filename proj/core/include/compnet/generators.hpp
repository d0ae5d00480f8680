#pragma once

#include <cstdint>

#include "compnet/graph.hpp"
#include "compnet/model_spec.hpp"
#include "compnet/rng.hpp"

namespace compnet {

// Uniform sample from all simple graphs with n vertices and exactly m edges.
Graph generate_random_gnm(std::uint64_t n, std::uint64_t m, RngStream& rng);

// Preferential-attachment growth.
//
// Starts from a single vertex. Arrival i (1-based position among arrivals,
// i = 1..n-1) attaches min(i, s) edges to distinct earlier vertices; each pick
// is drawn with probability proportional to degree^alpha + 1 among vertices
// not yet picked in this step, using degrees as they stood before the step.
// The result always has scale_free_edge_count(n, s) edges.
Graph generate_scale_free(std::uint64_t n, std::uint64_t s, double alpha, RngStream& rng);

// Circulant graph: v ~ v±d (mod n) for d = 1..nei.
Graph generate_ring_lattice(std::uint64_t n, std::uint64_t nei);

// Removes x edges chosen uniformly without replacement.
void delete_random_edges(Graph& g, std::uint64_t x, RngStream& rng);

// Attempts to rewire each edge, in ascending edge order, with probability p.
// A selected edge keeps one endpoint (chosen by a fair coin) and moves the other
// to a uniformly random vertex; candidates that would form a self-loop or a
// duplicate edge are redrawn, and after kMaxRewireAttempts failures the edge
// stays where it was. Edges created by rewiring are not revisited.
inline constexpr int kMaxRewireAttempts = 100;
void rewire_edges(Graph& g, double p, RngStream& rng);

// Ring lattice, then deletion of deletion_count(n, nei, s) edges, then rewiring.
// Requires nei == s.
Graph generate_small_world(std::uint64_t n, std::uint64_t nei, std::uint64_t s, double p,
                           RngStream& rng);

// Dispatches on spec.model after validating the spec.
Graph generate(const ModelSpec& spec, RngStream& rng);

}  // namespace compnet
