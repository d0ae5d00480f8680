#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "compnet/graph.hpp"
#include "compnet/model_spec.hpp"

namespace compnet {

// Shortest-path distances from one source. Unreachable vertices hold
// std::nullopt; there is no "large number" sentinel.
using DistanceVector = std::vector<std::optional<std::uint32_t>>;

DistanceVector bfs_distances(const Graph& g, Vertex source);

// All metrics below are defined on disconnected graphs by restricting every
// sum to reachable pairs:
//
//   average_shortest_path  mean d(u,v) over unordered reachable pairs, 0 if none
//   closeness(v)           1 / sum of d(v,u) over u reachable from v, 0 if none
//   betweenness(v)         sum over unordered pairs {s,t}, s,t != v, of
//                          sigma_st(v) / sigma_st; unnormalized
//   global_clustering      3 * triangles / connected triples, 0 if no triples
double average_shortest_path(const Graph& g);
double mean_closeness(const Graph& g);
double mean_betweenness(const Graph& g);
double global_clustering(const Graph& g);

std::vector<double> closeness(const Graph& g);
std::vector<double> betweenness(const Graph& g);  // Brandes accumulation

std::uint64_t triangle_count(const Graph& g);
std::uint64_t connected_triple_count(const Graph& g);

struct GraphMetrics {
  double mean_closeness = 0.0;
  double mean_betweenness = 0.0;
  double avg_shortest_path = 0.0;
  double global_clustering = 0.0;

  friend bool operator==(const GraphMetrics&, const GraphMetrics&) = default;
};

// The four metrics from a single Brandes sweep over all sources. Bit-identical
// to calling the individual functions.
GraphMetrics compute_metrics(const Graph& g);

// One graph's metrics together with where it came from.
struct MetricRecord {
  ModelSpec spec;
  std::uint64_t seed = 0;  // seed of the stream the graph was generated from
  std::uint64_t sample_index = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  GraphMetrics metrics;

  friend bool operator==(const MetricRecord&, const MetricRecord&) = default;
};

MetricRecord metric_report(const Graph& g, const ModelSpec& spec, std::uint64_t seed,
                           std::uint64_t sample_index);

}  // namespace compnet
