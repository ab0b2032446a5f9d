#include "ecindex/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ecindex/enumerate.hpp"
#include "ecindex/error.hpp"
#include "ecindex/families.hpp"
#include "ecindex/spanning_trees.hpp"
#include "oracles.hpp"

namespace ecindex {
namespace {

TEST(GraphTest, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(3, {{0, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 3}}), InputError);
  EXPECT_THROW(Graph(0), InputError);
  const Graph g(3, {{2, 0}, {1, 2}});
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}, {1, 2}}));
}

TEST(BfsTest, Examples) {
  EXPECT_EQ(bfs_distances(make_path(4), 0), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(bfs_distances(make_path(2), 1), (std::vector<int>{1, 0}));
  EXPECT_EQ(bfs_distances(make_cycle(5), 0), (std::vector<int>{0, 1, 2, 2, 1}));
  EXPECT_THROW(bfs_distances(make_path(3), 3), InputError);
  EXPECT_THROW(bfs_distances(make_path(3), -1), InputError);
}

TEST(BfsTest, UnreachableSentinel) {
  const Graph g(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(bfs_distances(g, 0), (std::vector<int>{0, 1, kUnreachable, kUnreachable}));
  EXPECT_FALSE(is_connected(g));
}

TEST(ProfileTest, Examples) {
  const auto p3 = profile(make_path(3));
  EXPECT_EQ(p3.eccentricity, (std::vector<int>{2, 1, 2}));
  EXPECT_EQ(p3.center, (std::vector<Vertex>{1}));
  EXPECT_EQ(p3.diameter, 2);

  const auto p4 = profile(make_path(4));
  EXPECT_EQ(p4.eccentricity, (std::vector<int>{3, 2, 2, 3}));
  EXPECT_EQ(p4.center, (std::vector<Vertex>{1, 2}));

  const auto c4 = profile(make_cycle(4));
  EXPECT_EQ(c4.eccentricity, (std::vector<int>{2, 2, 2, 2}));
  EXPECT_EQ(c4.center, (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(ProfileTest, DisconnectedIsDomainError) {
  EXPECT_THROW(profile(Graph(3, {{0, 1}})), DomainError);
  EXPECT_THROW(find_diametral_path(Graph(2)), DomainError);
}

TEST(DiametralPathTest, Examples) {
  EXPECT_EQ(find_diametral_path(make_path(5)).vertices, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(find_diametral_path(make_star(4)).vertices, (std::vector<Vertex>{1, 0, 2}));
  const auto c6 = find_diametral_path(make_cycle(6));
  EXPECT_EQ(c6.front(), 0);
  EXPECT_EQ(c6.length(), 3);
  EXPECT_EQ(c6.vertices, (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(DiametralPathTest, CenterOfPath) {
  EXPECT_EQ((DiametralPath{{5, 6, 7, 8, 9}}.center()), (std::vector<Vertex>{7}));
  EXPECT_EQ((DiametralPath{{5, 6, 7, 8}}.center()), (std::vector<Vertex>{6, 7}));
}

TEST(CaterpillarTest, Examples) {
  for (int n = 2; n <= 9; ++n) EXPECT_TRUE(is_caterpillar(make_path(n)));
  EXPECT_TRUE(is_caterpillar(make_star(5)));
  // Subdivided K_{1,3}: three legs of length two.
  const Graph spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  EXPECT_FALSE(is_caterpillar(spider));
  EXPECT_THROW(is_caterpillar(make_cycle(4)), DomainError);
  EXPECT_THROW(is_caterpillar(Graph(3, {{0, 1}})), DomainError);
}

TEST(CaterpillarTest, AgreesWithDistanceDefinition) {
  // Caterpillar iff every vertex is within distance one of some longest path.
  for (int n = 2; n <= 9; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      const auto path = find_diametral_path(t);
      const auto dist = testing::floyd_warshall(t);
      bool near = true;
      for (Vertex v = 0; v < t.order(); ++v) {
        int best = t.order();
        for (Vertex w : path.vertices) best = std::min(best, dist[v][w]);
        near = near && best <= 1;
      }
      EXPECT_EQ(is_caterpillar(t), near) << "n=" << n;
    }
  }
}

TEST(InducedSubgraphTest, RelabelsInGivenOrder) {
  const Graph c5 = make_cycle(5);
  const std::vector<Vertex> keep{4, 0, 1};
  const Graph sub = induced_subgraph(c5, keep);
  EXPECT_EQ(sub.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(BlocksTest, SmallCases) {
  // Two triangles sharing vertex 2.
  const Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  auto blocks = biconnected_blocks(bowtie);
  std::sort(blocks.begin(), blocks.end());
  EXPECT_EQ(blocks, (std::vector<std::vector<Vertex>>{{0, 1, 2}, {2, 3, 4}}));
  auto path_blocks = biconnected_blocks(make_path(4));
  EXPECT_EQ(path_blocks.size(), 3u);
}

// Eccentricity bounds, adjacency smoothness and the distance oracle over
// every connected class up to seven vertices.
TEST(ProfilePropertyTest, ExhaustiveSmallGraphs) {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n, true)) {
      const auto p = profile(g);
      const auto dist = testing::floyd_warshall(g);
      const int half = (p.diameter + 1) / 2;
      for (Vertex v = 0; v < n; ++v) {
        EXPECT_EQ(p.eccentricity[v], *std::max_element(dist[v].begin(), dist[v].end()));
        EXPECT_GE(p.eccentricity[v], half);
        EXPECT_LE(p.eccentricity[v], p.diameter);
        for (Vertex w : g.neighbors(v)) {
          EXPECT_LE(std::abs(p.eccentricity[v] - p.eccentricity[w]), 1);
        }
      }
      int degree_sum = 0;
      for (int d : p.degree) degree_sum += d;
      EXPECT_EQ(degree_sum, static_cast<int>(2 * g.size()));

      const auto path = find_diametral_path(g, p);
      EXPECT_EQ(path.length(), p.diameter);
      EXPECT_EQ(dist[path.front()][path.back()], p.diameter);
      for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        EXPECT_TRUE(g.adjacent(path.vertices[i], path.vertices[i + 1]));
      }
    }
  }
}

TEST(CenterPropertyTest, CenterLiesInOneBlock) {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n, true)) {
      const auto center = profile(g).center;
      const auto blocks = biconnected_blocks(g);
      const bool inside = std::any_of(blocks.begin(), blocks.end(), [&](const auto& b) {
        return std::includes(b.begin(), b.end(), center.begin(), center.end());
      });
      EXPECT_TRUE(inside) << "n=" << n;
    }
  }
}

TEST(CenterPropertyTest, TreeCenterIsVertexOrEdge) {
  for (int n = 2; n <= 10; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      const auto center = profile(t).center;
      ASSERT_GE(center.size(), 1u);
      ASSERT_LE(center.size(), 2u);
      if (center.size() == 2) {
        EXPECT_TRUE(t.adjacent(center[0], center[1]));
      }
    }
  }
}

TEST(SpanningTreesTest, Examples) {
  const Graph tree = make_volcano(7, 3);
  const auto own = spanning_trees(tree, 100);
  ASSERT_EQ(own.trees.size(), 1u);
  EXPECT_EQ(own.trees[0], tree);
  EXPECT_FALSE(own.truncated);

  EXPECT_EQ(spanning_trees(make_cycle(4), 100).trees.size(), 4u);
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(spanning_trees(k4, 100).trees.size(), 16u);
  EXPECT_THROW(spanning_trees(Graph(3, {{0, 1}}), 10), DomainError);
}

TEST(SpanningTreesTest, CayleyCounts) {
  for (int n = 3; n <= 5; ++n) {
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) edges.push_back({i, j});
    }
    std::int64_t expected = 1;
    for (int i = 0; i < n - 2; ++i) expected *= n;
    const auto result = spanning_trees(Graph(n, edges), 1000);
    EXPECT_EQ(static_cast<std::int64_t>(result.trees.size()), expected);
    EXPECT_FALSE(result.truncated);
  }
}

TEST(SpanningTreesTest, DistinctTreesMatchMatrixTreeTheorem) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_graph(6, 0.6, rng);
    if (!is_connected(g)) continue;
    const auto result = spanning_trees(g, 100000);
    EXPECT_EQ(static_cast<std::int64_t>(result.trees.size()), testing::matrix_tree_count(g));
    auto edges = std::vector<std::vector<Edge>>();
    for (const auto& t : result.trees) {
      EXPECT_TRUE(is_tree(t));
      for (const Edge& e : t.edges()) EXPECT_TRUE(g.adjacent(e.u, e.v));
      edges.push_back(t.edges());
    }
    std::sort(edges.begin(), edges.end());
    EXPECT_EQ(std::adjacent_find(edges.begin(), edges.end()), edges.end());
  }
}

TEST(SpanningTreesTest, TruncationIsFlagged) {
  const Graph k5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  const auto capped = spanning_trees(k5, 10);
  EXPECT_EQ(capped.trees.size(), 10u);
  EXPECT_TRUE(capped.truncated);
  const auto exact = spanning_trees(k5, 125);
  EXPECT_EQ(exact.trees.size(), 125u);
  EXPECT_FALSE(exact.truncated);
}

TEST(CaterpillarSpanningTest, Examples) {
  EXPECT_EQ(all_spanning_trees_caterpillar_of_diameter(make_path(5), 4, 100), Verdict::kTrue);
  EXPECT_EQ(all_spanning_trees_caterpillar_of_diameter(make_volcano(6, 3), 3, 100), Verdict::kTrue);
  EXPECT_EQ(all_spanning_trees_caterpillar_of_diameter(make_cycle(6), 3, 100), Verdict::kFalse);
}

TEST(CaterpillarSpanningTest, TruncationNeverReportsTrue) {
  // Each of the four spanning trees of C4 is P4; a limit of 2 cannot see
  // all of them.
  const Graph g = make_cycle(4);
  EXPECT_EQ(all_spanning_trees_caterpillar_of_diameter(g, 3, 100), Verdict::kTrue);
  EXPECT_EQ(all_spanning_trees_caterpillar_of_diameter(g, 3, 2), Verdict::kInconclusive);
}

}  // namespace
}  // namespace ecindex
