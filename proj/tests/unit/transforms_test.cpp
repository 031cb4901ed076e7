#include <gtest/gtest.h>

#include "graphcombex/generators.hpp"
#include "graphcombex/solution.hpp"
#include "graphcombex/transforms.hpp"
#include "support/fixtures.hpp"

namespace gcx {
namespace {

using namespace gcx::testing;

TEST(Complement, Basics) {
  EXPECT_EQ(complement(complete(3)), empty(3));
  EXPECT_EQ(complement(empty(3)), complete(3));
  const auto c = complement(sample_graph());
  EXPECT_EQ(c.edge_count(), 7u);
  EXPECT_EQ(c.label(Frank), "Frank");
  EXPECT_FALSE(c.adjacent(Alice, Bob));
  EXPECT_TRUE(c.adjacent(Emily, Frank));
  EXPECT_EQ(complement(Graph{}).vertex_count(), 0u);
}

TEST(Complement, Involution) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = random_gnp(1 + seed % 20, 0.35, seed);
    ASSERT_EQ(complement(complement(g)), g);
  }
}

TEST(Complement, Budget) {
  Limits small;
  small.edge_budget = 6;
  EXPECT_NO_THROW(complement(sample_graph(), {}));
  try {
    complement(sample_graph(), small);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ComplementTooDense);
  }
}

TEST(PruneLeaves, SampleGraph) {
  const auto p = prune_leaves(sample_graph());
  EXPECT_EQ(p.graph.vertex_count(), 5u);
  EXPECT_EQ(p.new_index[Frank], -1);
  EXPECT_EQ(p.original, (std::vector<Vertex>{Alice, Bob, Cindy, Daniel, Emily}));
  for (Vertex v = 0; v < 5; ++v) EXPECT_GE(p.graph.degree(v), 2u);
  EXPECT_EQ(p.graph.label(4), "Emily");
}

TEST(PruneLeaves, TreesDissolveCyclesStay) {
  EXPECT_EQ(prune_leaves(gen_complete_nary_tree(3, 4)).graph.vertex_count(), 0u);
  EXPECT_EQ(prune_leaves(path(9)).graph.vertex_count(), 0u);
  EXPECT_EQ(prune_leaves(cycle(5)).graph, cycle(5));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto p = prune_leaves(random_gnp(25, 0.08, seed));
    for (Vertex v = 0; v < p.graph.vertex_count(); ++v) ASSERT_GE(p.graph.degree(v), 2u);
  }
}

TEST(LargestComponent, Cases) {
  EXPECT_EQ(largest_component(sample_graph()).graph, sample_graph());
  const auto k3k2 = disjoint_union(complete(2), complete(3));
  const auto p = largest_component(k3k2);
  EXPECT_EQ(p.graph, complete(3));
  EXPECT_EQ(p.original, (std::vector<Vertex>{2, 3, 4}));
  const auto iso = largest_component(empty(5));
  EXPECT_EQ(iso.graph.vertex_count(), 1u);
  EXPECT_EQ(iso.original, std::vector<Vertex>{0});
  try {
    largest_component(Graph{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyGraph);
  }
}

TEST(Shortcut, SmallCases) {
  const auto g = sample_graph();
  EXPECT_EQ(shortcut_graph(g, 1), g);
  EXPECT_EQ(shortcut_graph(path(4), 2), build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}}));
  EXPECT_EQ(shortcut_graph(g, 3).edge_count(), 15u);
  Limits small;
  small.edge_budget = 10;
  try {
    shortcut_graph(g, 3, small);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EdgeBudgetExceeded);
  }
}

TEST(Shortcut, MatchesAllPairsOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 20 + seed * 6;
    const auto g = random_gnp(n, 2.5 / static_cast<double>(n), seed);
    const auto d = all_pairs_distances(g);
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto s = shortcut_graph(g, k);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) ASSERT_EQ(s.adjacent(u, v), d[u][v] <= k);
    }
  }
}

// Dominating sets of the shortcut graph are exactly the k-reach sets.
TEST(Shortcut, DominatingSetsAreReachSets) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed, 11);
    const auto n = 1 + rng.below(10);
    const auto g = random_gnp(n, 0.25, seed + 500);
    const auto d = all_pairs_distances(g);
    const auto k = 1 + rng.below(3);
    const auto s = shortcut_graph(g, k);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<Vertex> set;
      for (Vertex v = 0; v < n; ++v)
        if (mask >> v & 1u) set.push_back(v);
      bool reach = true;
      for (Vertex v = 0; v < n && reach; ++v) {
        bool hit = false;
        for (Vertex m : set) hit = hit || d[m][v] <= k;
        reach = hit;
      }
      ASSERT_EQ(is_dominating_set(s, set), reach);
    }
  }
}

}  // namespace
}  // namespace gcx
