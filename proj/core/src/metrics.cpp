#include "compnet/metrics.hpp"

#include <algorithm>
#include <limits>

namespace compnet {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

// Reusable per-source state for BFS with shortest-path counting.
struct SourcePass {
  explicit SourcePass(std::size_t n) : dist(n, kUnvisited), sigma(n, 0.0), delta(n, 0.0) {
    order.reserve(n);
  }

  // Fills dist/sigma/order for `source`; returns the number of vertices reached
  // (excluding the source) and their distance sum.
  std::pair<std::uint64_t, std::uint64_t> run(const Graph& g, Vertex source) {
    for (Vertex v : order) {
      dist[v] = kUnvisited;
      sigma[v] = 0.0;
      delta[v] = 0.0;
    }
    order.clear();

    dist[source] = 0;
    sigma[source] = 1.0;
    order.push_back(source);
    std::uint64_t reached = 0;
    std::uint64_t distance_sum = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const Vertex v = order[head];
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == kUnvisited) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
          ++reached;
          distance_sum += dist[w];
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    return {reached, distance_sum};
  }

  // Brandes dependency accumulation in reverse BFS order; adds delta(v) to bc.
  void accumulate(const Graph& g, Vertex source, std::vector<double>& bc) {
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Vertex w = *it;
      for (Vertex v : g.neighbors(w)) {
        if (dist[v] != kUnvisited && dist[v] + 1 == dist[w]) {
          delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
        }
      }
      if (w != source) bc[w] += delta[w];
    }
  }

  std::vector<std::uint32_t> dist;
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<Vertex> order;
};

double mean_of(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace

DistanceVector bfs_distances(const Graph& g, Vertex source) {
  g.degree(source);  // range check
  SourcePass pass(g.vertex_count());
  pass.run(g, source);
  DistanceVector out(g.vertex_count());
  for (Vertex v : pass.order) out[v] = pass.dist[v];
  return out;
}

double average_shortest_path(const Graph& g) {
  SourcePass pass(g.vertex_count());
  std::uint64_t pairs = 0;
  std::uint64_t total = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    const auto [reached, sum] = pass.run(g, s);
    pairs += reached;
    total += sum;
  }
  return pairs == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(pairs);
}

std::vector<double> closeness(const Graph& g) {
  SourcePass pass(g.vertex_count());
  std::vector<double> out(g.vertex_count(), 0.0);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    const auto [reached, sum] = pass.run(g, s);
    if (reached > 0) out[s] = 1.0 / static_cast<double>(sum);
  }
  return out;
}

double mean_closeness(const Graph& g) { return mean_of(closeness(g)); }

std::vector<double> betweenness(const Graph& g) {
  SourcePass pass(g.vertex_count());
  std::vector<double> bc(g.vertex_count(), 0.0);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    pass.run(g, s);
    pass.accumulate(g, s, bc);
  }
  // Every unordered pair was visited from both endpoints.
  for (double& b : bc) b /= 2.0;
  return bc;
}

double mean_betweenness(const Graph& g) { return mean_of(betweenness(g)); }

std::uint64_t triangle_count(const Graph& g) {
  std::uint64_t closed = 0;
  for (const auto& [u, v] : g.edges()) {
    const auto nu = g.neighbors(u);
    const auto nv = g.neighbors(v);
    auto a = nu.begin();
    auto b = nv.begin();
    while (a != nu.end() && b != nv.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++closed;
        ++a;
        ++b;
      }
    }
  }
  // Each triangle is seen once from each of its three edges.
  return closed / 3;
}

std::uint64_t connected_triple_count(const Graph& g) {
  std::uint64_t triples = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::uint64_t d = g.degree(v);
    if (d >= 2) triples += d * (d - 1) / 2;
  }
  return triples;
}

double global_clustering(const Graph& g) {
  const std::uint64_t triples = connected_triple_count(g);
  if (triples == 0) return 0.0;
  return 3.0 * static_cast<double>(triangle_count(g)) / static_cast<double>(triples);
}

GraphMetrics compute_metrics(const Graph& g) {
  const std::size_t n = g.vertex_count();
  SourcePass pass(n);
  std::vector<double> bc(n, 0.0);
  std::vector<double> close(n, 0.0);
  std::uint64_t pairs = 0;
  std::uint64_t total = 0;
  for (Vertex s = 0; s < n; ++s) {
    const auto [reached, sum] = pass.run(g, s);
    pairs += reached;
    total += sum;
    if (reached > 0) close[s] = 1.0 / static_cast<double>(sum);
    pass.accumulate(g, s, bc);
  }
  for (double& b : bc) b /= 2.0;

  GraphMetrics out;
  out.mean_closeness = mean_of(close);
  out.mean_betweenness = mean_of(bc);
  out.avg_shortest_path = pairs == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(pairs);
  out.global_clustering = global_clustering(g);
  return out;
}

MetricRecord metric_report(const Graph& g, const ModelSpec& spec, std::uint64_t seed,
                           std::uint64_t sample_index) {
  MetricRecord record;
  record.spec = spec;
  record.seed = seed;
  record.sample_index = sample_index;
  record.n = g.vertex_count();
  record.m = g.edge_count();
  record.metrics = compute_metrics(g);
  return record;
}

}  // namespace compnet
