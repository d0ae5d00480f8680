#include "compnet/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "compnet/edge_budget.hpp"
#include "compnet/errors.hpp"

namespace compnet {

namespace {

void check_vertex_capacity(std::uint64_t n) {
  if (n > static_cast<std::uint64_t>(UINT32_MAX)) {
    throw ParameterError("vertex count " + std::to_string(n) + " exceeds 32-bit vertex ids");
  }
}

// Pair index k enumerates {u < v} column by column: k = v(v-1)/2 + u.
Edge decode_pair(std::uint64_t k) {
  auto v = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(k))) / 2.0);
  while (v * (v - 1) / 2 > k) --v;
  while ((v + 1) * v / 2 <= k) ++v;
  const std::uint64_t u = k - v * (v - 1) / 2;
  return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

// Fenwick tree over attachment weights. Sampling walks the implicit tree; the
// exact weights are kept alongside so that a walk that lands on a zero-weight
// slot through rounding can fall back to a linear scan.
class WeightTree {
 public:
  explicit WeightTree(std::size_t size) : tree_(size + 1, 0.0), weight_(size, 0.0) {
    for (mask_ = 1; mask_ * 2 <= size; mask_ *= 2) {
    }
  }

  void set(std::size_t i, double w) {
    const double delta = w - weight_[i];
    weight_[i] = w;
    for (std::size_t j = i + 1; j < tree_.size(); j += j & (~j + 1)) tree_[j] += delta;
  }

  double weight(std::size_t i) const { return weight_[i]; }

  double total() const {
    double sum = 0.0;
    for (std::size_t j = tree_.size() - 1; j > 0; j -= j & (~j + 1)) sum += tree_[j];
    return sum;
  }

  // Index i with prefix(i) <= target < prefix(i + 1), restricted to positive weights.
  std::size_t find(double target) const {
    std::size_t pos = 0;
    double remaining = target;
    for (std::size_t step = mask_; step > 0; step /= 2) {
      const std::size_t next = pos + step;
      if (next < tree_.size() && tree_[next] <= remaining) {
        pos = next;
        remaining -= tree_[next];
      }
    }
    if (pos < weight_.size() && weight_[pos] > 0.0) return pos;
    return linear_find(target);
  }

 private:
  std::size_t linear_find(double target) const {
    std::size_t last_positive = weight_.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < weight_.size(); ++i) {
      if (weight_[i] <= 0.0) continue;
      last_positive = i;
      acc += weight_[i];
      if (target < acc) return i;
    }
    return last_positive;
  }

  std::vector<double> tree_;
  std::vector<double> weight_;
  std::size_t mask_ = 0;
};

double attachment_weight(std::size_t degree, double alpha) {
  return std::pow(static_cast<double>(degree), alpha) + 1.0;
}

}  // namespace

Graph generate_random_gnm(std::uint64_t n, std::uint64_t m, RngStream& rng) {
  check_vertex_capacity(n);
  const std::uint64_t max_edges = n < 2 ? 0 : n * (n - 1) / 2;
  if (m > max_edges) {
    throw ParameterError("G(n,m): m=" + std::to_string(m) + " exceeds the " +
                         std::to_string(max_edges) + " possible edges on n=" + std::to_string(n));
  }
  Graph g(n);
  for (std::uint64_t k : sample_without_replacement(max_edges, m, rng)) {
    const auto [u, v] = decode_pair(k);
    g.add_edge(u, v);
  }
  return g;
}

Graph generate_scale_free(std::uint64_t n, std::uint64_t s, double alpha, RngStream& rng) {
  scale_free_edge_count(n, s);
  check_vertex_capacity(n);
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ParameterError("attachment power alpha must be a positive finite number");
  }

  Graph g(n);
  WeightTree weights(n);
  weights.set(0, attachment_weight(0, alpha));
  std::vector<Vertex> targets;
  targets.reserve(s);

  for (std::uint64_t i = 1; i < n; ++i) {
    targets.clear();
    if (i <= s) {
      for (Vertex t = 0; t < i; ++t) targets.push_back(t);
    } else {
      for (std::uint64_t pick = 0; pick < s; ++pick) {
        const double target = rng.uniform_real() * weights.total();
        const auto chosen = static_cast<Vertex>(weights.find(target));
        targets.push_back(chosen);
        weights.set(chosen, 0.0);
      }
    }
    const auto arrival = static_cast<Vertex>(i);
    for (Vertex t : targets) g.add_edge(arrival, t);
    for (Vertex t : targets) weights.set(t, attachment_weight(g.degree(t), alpha));
    weights.set(arrival, attachment_weight(g.degree(arrival), alpha));
  }
  return g;
}

Graph generate_ring_lattice(std::uint64_t n, std::uint64_t nei) {
  lattice_edge_count(n, nei);
  check_vertex_capacity(n);
  Graph g(n);
  for (std::uint64_t v = 0; v < n; ++v) {
    for (std::uint64_t d = 1; d <= nei; ++d) {
      g.add_edge(static_cast<Vertex>(v), static_cast<Vertex>((v + d) % n));
    }
  }
  return g;
}

void delete_random_edges(Graph& g, std::uint64_t x, RngStream& rng) {
  if (x > g.edge_count()) {
    throw ParameterError("cannot delete " + std::to_string(x) + " edges from a graph with " +
                         std::to_string(g.edge_count()));
  }
  const std::vector<Edge> edges = g.edges();
  for (std::uint64_t k : sample_without_replacement(edges.size(), x, rng)) {
    g.remove_edge(edges[k].first, edges[k].second);
  }
}

void rewire_edges(Graph& g, double p, RngStream& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("rewiring probability must lie in [0, 1]");
  const std::uint64_t n = g.vertex_count();
  for (const auto& [u, v] : g.edges()) {
    if (!rng.bernoulli(p)) continue;
    const Vertex kept = rng.bernoulli(0.5) ? u : v;
    for (int attempt = 0; attempt < kMaxRewireAttempts; ++attempt) {
      const auto candidate = static_cast<Vertex>(rng.uniform_below(n));
      if (candidate == kept || g.has_edge(kept, candidate)) continue;
      g.remove_edge(u, v);
      g.add_edge(kept, candidate);
      break;
    }
  }
}

Graph generate_small_world(std::uint64_t n, std::uint64_t nei, std::uint64_t s, double p,
                           RngStream& rng) {
  if (nei != s) {
    throw ParameterError("small-world generation requires Nei == S (got Nei=" +
                         std::to_string(nei) + ", S=" + std::to_string(s) + ")");
  }
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("rewiring probability must lie in [0, 1]");
  const EdgeBudget budget = small_world_budget(n, nei, s);
  Graph g = generate_ring_lattice(n, nei);
  delete_random_edges(g, budget.x, rng);
  rewire_edges(g, p, rng);
  return g;
}

Graph generate(const ModelSpec& spec, RngStream& rng) {
  spec.validate();
  switch (spec.model) {
    case Model::kRandom:
      return generate_random_gnm(spec.n, spec.m, rng);
    case Model::kScaleFree:
      return generate_scale_free(spec.n, spec.s, *spec.alpha, rng);
    case Model::kSmallWorld:
      return generate_small_world(spec.n, *spec.nei, spec.s, *spec.p, rng);
  }
  throw ParameterError("unknown model");
}

}  // namespace compnet
