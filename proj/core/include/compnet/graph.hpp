#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace compnet {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;  // always stored with first < second

// Undirected simple graph on the dense vertex set 0..n-1.
//
// Adjacency lists are kept sorted ascending, so neighbor iteration order is a
// function of the edge set alone and never of insertion history. Self-loops
// and parallel edges are rejected by add_edge, which reports whether the edge
// was inserted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  // Throws std::out_of_range if either endpoint is not a vertex.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  std::size_t degree(Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const;

  // All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Relabels vertex v as permutation[v]. permutation must be a bijection on 0..n-1.
Graph permute_vertices(const Graph& g, std::span<const Vertex> permutation);

}  // namespace compnet
