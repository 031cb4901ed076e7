#include <gtest/gtest.h>

#include "graphcombex/generators.hpp"
#include "graphcombex/heuristics.hpp"
#include "support/fixtures.hpp"

namespace gcx {
namespace {

using namespace gcx::testing;

TEST(IndexedHeap, MatchesSortedOrder) {
  Rng rng(5);
  IndexedHeap<int, MinKeyFirst> heap(200);
  std::vector<int> key(200);
  for (Vertex v = 0; v < 200; ++v) heap.push(v, key[v] = static_cast<int>(rng.below(50)));
  for (int i = 0; i < 300; ++i) {
    const auto v = static_cast<Vertex>(rng.below(200));
    if (!heap.contains(v)) continue;
    if (rng.bernoulli(0.2)) {
      heap.erase(v);
    } else {
      heap.update(v, key[v] = static_cast<int>(rng.below(50)));
    }
  }
  std::vector<std::pair<int, Vertex>> expected;
  for (Vertex v = 0; v < 200; ++v)
    if (heap.contains(v)) expected.emplace_back(key[v], v);
  std::sort(expected.begin(), expected.end());
  for (auto [k, v] : expected) {
    ASSERT_EQ(heap.key(heap.top()), k);
    ASSERT_EQ(heap.pop(), v);
  }
  EXPECT_TRUE(heap.empty());
}

TEST(GreedyClique, Cases) {
  const auto g = sample_graph();
  const auto c = greedy_clique(g);
  EXPECT_EQ(c.size(), 3u);
  EXPECT_TRUE(is_clique(g, c.members));
  EXPECT_EQ(c.members.front(), Bob);
  EXPECT_EQ(greedy_clique(empty(4)).size(), 1u);
  EXPECT_EQ(greedy_clique(complete(5)).size(), 5u);
  EXPECT_THROW(greedy_clique(Graph{}), Error);
}

TEST(Dsatur, Cases) {
  const auto c = dsatur_colouring(sample_graph());
  EXPECT_EQ(c.count, 3u);
  EXPECT_TRUE(is_proper_colouring(sample_graph(), c));
  EXPECT_EQ(dsatur_colouring(cycle(6)).count, 2u);
  EXPECT_EQ(dsatur_colouring(complete(4)).count, 4u);
  EXPECT_EQ(dsatur_colouring(Graph{}).count, 0u);
  EXPECT_EQ(dsatur_colouring(empty(3)).count, 1u);
  // DSATUR is exact on bipartite graphs.
  for (std::size_t r = 2; r < 8; ++r) EXPECT_EQ(dsatur_colouring(gen_grid_rewire(r, r + 1, 0, 1)).count, 2u);
  EXPECT_EQ(dsatur_colouring(gen_complete_nary_tree(3, 4)).count, 2u);
}

TEST(GreedyIndependentSet, Cases) {
  const auto s = greedy_independent_set(sample_graph());
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(is_independent_set(sample_graph(), s.members));
  EXPECT_EQ(s.members, (std::vector<Vertex>{Alice, Daniel, Frank}));
  EXPECT_EQ(greedy_independent_set(complete(4)).size(), 1u);
  EXPECT_EQ(greedy_independent_set(empty(6)).size(), 6u);
}

TEST(GreedyDominatingSet, Cases) {
  const auto d = greedy_dominating_set(sample_graph());
  EXPECT_EQ(d.size(), 2u);
  EXPECT_EQ(d.members, (std::vector<Vertex>{Alice, Bob}));
  EXPECT_EQ(greedy_dominating_set(star(5)).members, std::vector<Vertex>{0});
  EXPECT_EQ(greedy_dominating_set(empty(4)).size(), 4u);
}

TEST(LongestCycle, Cases) {
  const auto g = sample_graph();
  const auto c = longest_cycle_dfs(g, 1);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->length(), 5u);
  EXPECT_TRUE(is_cycle(g, c->sequence));
  EXPECT_FALSE(longest_cycle_dfs(gen_complete_nary_tree(2, 5), 1));
  EXPECT_FALSE(longest_cycle_dfs(path(10), 3));
  const auto c7 = longest_cycle_dfs(cycle(7), 9);
  ASSERT_TRUE(c7);
  EXPECT_EQ(c7->length(), 7u);
  EXPECT_EQ(longest_cycle_dfs(complete(4), 2)->length(), 4u);
}

TEST(LongestCycle, DeterministicAndCancellable) {
  const auto g = gen_watts_strogatz(300, 4, 0.2, 3);
  EXPECT_EQ(longest_cycle_dfs(g, 17, {10, {}}), longest_cycle_dfs(g, 17, {10, {}}));
  std::stop_source src;
  src.request_stop();
  EXPECT_FALSE(longest_cycle_dfs(g, 17, {10, {}}, src.get_token()));
}

TEST(SimpleBounds, Values) {
  EXPECT_EQ(domset_lower_bound(sample_graph()), 2u);
  EXPECT_EQ(domset_lower_bound(complete(4)), 1u);
  EXPECT_EQ(domset_lower_bound(empty(7)), 7u);
  EXPECT_EQ(cycle_upper_bound(sample_graph()), 5u);
  EXPECT_EQ(cycle_upper_bound(gen_complete_nary_tree(2, 3)), 0u);
  EXPECT_EQ(cycle_upper_bound(disjoint_union(cycle(5), complete(3))), 5u);
}

TEST(Kernels, Constructive) {
  std::vector<Vertex> id{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(greedy_cover_constructive(sample_graph(), id).size(), 3u);
  EXPECT_EQ(greedy_cover_constructive(empty(4), std::vector<Vertex>{3, 1, 0, 2}).size(), 4u);
  EXPECT_EQ(greedy_cover_constructive(complete(4), std::vector<Vertex>{2, 0, 3, 1}).size(), 1u);
  EXPECT_EQ(greedy_colouring_constructive(complete(4), std::vector<Vertex>{2, 0, 3, 1}).count, 4u);
  EXPECT_EQ(greedy_colouring_constructive(cycle(6), id).count, 2u);
  EXPECT_THROW(greedy_colouring_constructive(cycle(6), std::vector<Vertex>{0, 1, 2}), Error);
  EXPECT_THROW(greedy_cover_constructive(cycle(3), std::vector<Vertex>{0, 1, 1}), Error);

  // Every one of the 720 orders of the sample graph gives 3 or 4 colours.
  std::size_t lo = 99, hi = 0;
  do {
    const auto c = greedy_colouring_constructive(sample_graph(), id);
    ASSERT_TRUE(is_proper_colouring(sample_graph(), c));
    ASSERT_TRUE(is_clique_cover(sample_graph(), greedy_cover_constructive(sample_graph(), id)));
    lo = std::min(lo, c.count);
    hi = std::max(hi, c.count);
  } while (std::next_permutation(id.begin(), id.end()));
  EXPECT_EQ(lo, 3u);
  EXPECT_LE(hi, 4u);
}

void expect_report_valid(const Graph& g, const BoundsReport& r) {
  for (auto p : kAllProblems) {
    const auto& iv = r[p];
    ASSERT_LE(iv.lower, iv.upper) << to_string(p);
    if (iv.lower_witness) {
      ASSERT_TRUE(is_valid(g, iv.lower_witness->witness)) << to_string(p);
      ASSERT_EQ(iv.lower_witness->objective, iv.lower);
    }
    if (iv.upper_witness) {
      ASSERT_TRUE(is_valid(g, iv.upper_witness->witness)) << to_string(p);
      ASSERT_EQ(iv.upper_witness->objective, iv.upper);
    }
  }
}

TEST(ComputeBounds, SampleGraphCloses) {
  const auto g = sample_graph();
  const auto r = compute_bounds(g);
  expect_report_valid(g, r);
  const std::array<std::size_t, 6> want{3, 3, 3, 3, 2, 5};
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(r.intervals[i].lower, want[i]) << to_string(kAllProblems[i]);
    EXPECT_EQ(r.intervals[i].upper, want[i]) << to_string(kAllProblems[i]);
  }
}

TEST(ComputeBounds, CompleteGraph) {
  const auto r = compute_bounds(complete(4));
  const std::array<std::size_t, 6> want{4, 4, 1, 1, 1, 4};
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_TRUE(r.intervals[i].closed());
    EXPECT_EQ(r.intervals[i].lower, want[i]);
  }
  const auto none = compute_bounds(Graph{});
  for (const auto& iv : none.intervals) EXPECT_EQ(iv.upper, 0u);
}

TEST(ComputeBounds, ContainsExactOptima) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = random_gnp(10, 0.4, seed);
    const auto r = compute_bounds(g, seed);
    expect_report_valid(g, r);
    const std::array<std::size_t, 6> opt{brute_max_clique(g),          brute_chromatic_number(g),
                                         brute_max_independent(g),     brute_clique_cover_number(g),
                                         brute_domination_number(g),   brute_longest_cycle(g)};
    for (std::size_t i = 0; i < 6; ++i) {
      ASSERT_LE(r.intervals[i].lower, opt[i]) << to_string(kAllProblems[i]) << " seed " << seed;
      ASSERT_GE(r.intervals[i].upper, opt[i]) << to_string(kAllProblems[i]) << " seed " << seed;
    }
  }
}

TEST(Heuristics, InvariantsOnGeneratedGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (const auto& g : {gen_barabasi_albert(200, 1 + seed % 4, seed),
                          gen_watts_strogatz(150, 4, 0.3, seed), gen_unit_disk(120, 0.15, seed).graph,
                          gen_grid_rewire(9, 11, 0.2, seed)}) {
      const auto is = greedy_independent_set(g);
      ASSERT_GE(is.size() * (g.max_degree() + 1), g.vertex_count());
      ASSERT_GE(dsatur_colouring(g).count, greedy_clique(g).size());
      ASSERT_TRUE(is_dominating_set(g, greedy_dominating_set(g).members));
    }
  }
}

}  // namespace
}  // namespace gcx
