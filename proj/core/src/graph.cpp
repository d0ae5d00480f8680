#include "compnet/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace compnet {

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

void Graph::check_vertex(Vertex v) const {
  if (v >= adjacency_.size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of " +
                            std::to_string(adjacency_.size()) + " vertices");
  }
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;

  auto& nu = adjacency_[u];
  auto pos_u = std::lower_bound(nu.begin(), nu.end(), v);
  if (pos_u != nu.end() && *pos_u == v) return false;
  nu.insert(pos_u, v);

  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;

  auto& nu = adjacency_[u];
  auto pos_u = std::lower_bound(nu.begin(), nu.end(), v);
  if (pos_u == nu.end() || *pos_u != v) return false;
  nu.erase(pos_u);

  auto& nv = adjacency_[v];
  nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
  --edge_count_;
  return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nu = adjacency_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  return adjacency_[v].size();
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph permute_vertices(const Graph& g, std::span<const Vertex> permutation) {
  if (permutation.size() != g.vertex_count()) {
    throw std::invalid_argument("permutation size does not match vertex count");
  }
  Graph out(g.vertex_count());
  for (const auto& [u, v] : g.edges()) out.add_edge(permutation[u], permutation[v]);
  return out;
}

}  // namespace compnet
