#include "compnet/graph.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <stdexcept>

#include "compnet/rng.hpp"
#include "oracles.hpp"

namespace compnet {
namespace {

std::size_t degree_sum(const Graph& g) {
  std::size_t sum = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
  return sum;
}

TEST(GraphTest, NewGraphHasNoEdges) {
  const Graph empty(0);
  EXPECT_EQ(empty.vertex_count(), 0u);
  EXPECT_EQ(empty.edge_count(), 0u);

  const Graph five(5);
  EXPECT_EQ(five.vertex_count(), 5u);
  EXPECT_EQ(five.edge_count(), 0u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(five.degree(v), 0u);

  const Graph hundred(100);
  EXPECT_EQ(hundred.vertex_count(), 100u);
  EXPECT_EQ(hundred.edge_count(), 0u);
}

TEST(GraphTest, AddEdgeRejectsSelfLoopsAndDuplicates) {
  Graph g(3);
  EXPECT_TRUE(g.add_edge(0, 1));
  EXPECT_EQ(g.edge_count(), 1u);

  EXPECT_FALSE(g.add_edge(0, 0));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.degree(0), 1u);

  EXPECT_FALSE(g.add_edge(0, 1));
  EXPECT_FALSE(g.add_edge(1, 0));
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(GraphTest, RemoveEdge) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_TRUE(g.remove_edge(1, 0));
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_FALSE(g.remove_edge(0, 2));
  EXPECT_EQ(g.edge_count(), 0u);

  g.add_edge(0, 2);
  const auto before = g.degree(0);
  g.add_edge(0, 1);
  g.remove_edge(0, 1);
  EXPECT_EQ(g.degree(0), before);
}

TEST(GraphTest, OutOfRangeVertexThrows) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
  EXPECT_THROW(g.remove_edge(7, 0), std::out_of_range);
  EXPECT_THROW(g.degree(3), std::out_of_range);
  EXPECT_THROW(g.neighbors(3), std::out_of_range);
  EXPECT_THROW(Graph(0).degree(0), std::out_of_range);
}

TEST(GraphTest, DegreesOfSmallGraphs) {
  const Graph k3 = oracle::complete(3);
  EXPECT_EQ(k3.edge_count(), 3u);
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(k3.degree(v), 2u);

  const Graph star = oracle::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(star.degree(0), 3u);
  EXPECT_EQ(star.degree(1), 1u);
}

TEST(GraphTest, NeighborsAreSortedRegardlessOfInsertionOrder) {
  Graph g(6);
  g.add_edge(3, 5);
  g.add_edge(3, 0);
  g.add_edge(4, 3);
  g.add_edge(3, 1);
  const auto nb = g.neighbors(3);
  EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()), (std::vector<Vertex>{0, 1, 4, 5}));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 3}, {1, 3}, {3, 4}, {3, 5}}));
}

TEST(GraphTest, RandomOperationSequencesKeepHandshakeIdentity) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RngStream rng(seed);
    const std::size_t n = 1 + rng.uniform_below(20);
    Graph g(n);
    for (int step = 0; step < 300; ++step) {
      const auto u = static_cast<Vertex>(rng.uniform_below(n));
      const auto v = static_cast<Vertex>(rng.uniform_below(n));
      if (rng.bernoulli(0.6)) {
        g.add_edge(u, v);
      } else {
        g.remove_edge(u, v);
      }
      ASSERT_EQ(degree_sum(g), 2 * g.edge_count()) << "seed " << seed << " step " << step;
    }
    for (Vertex v = 0; v < n; ++v) {
      const auto nb = g.neighbors(v);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end());
      EXPECT_EQ(std::find(nb.begin(), nb.end(), v), nb.end());
    }
  }
}

TEST(GraphTest, PermuteVerticesPreservesDegreeMultiset) {
  RngStream rng(11);
  const Graph g = oracle::random_gnp(30, 0.2, rng);
  const auto perm = oracle::random_permutation(30, rng);
  const Graph h = permute_vertices(g, perm);
  EXPECT_EQ(h.edge_count(), g.edge_count());
  for (Vertex v = 0; v < 30; ++v) EXPECT_EQ(h.degree(perm[v]), g.degree(v));
  EXPECT_THROW(permute_vertices(g, std::vector<Vertex>(3)), std::invalid_argument);
}

}  // namespace
}  // namespace compnet
