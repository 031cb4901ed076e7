#pragma once

// Shared test fixtures and brute-force oracles. Nothing here calls into the
// algorithms under test apart from Graph construction and adjacency queries.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "graphcombex/graph.hpp"
#include "graphcombex/rng.hpp"

namespace gcx::testing {

inline constexpr const char* kSampleGraph =
    "c 1 Alice\n"
    "c 2 Bob\n"
    "c 3 Cindy\n"
    "c 4 Daniel\n"
    "c 5 Emily\n"
    "c 6 Frank\n"
    "p edge 6 8\n"
    "e 1 2\n"
    "e 1 3\n"
    "e 1 5\n"
    "e 2 3\n"
    "e 2 4\n"
    "e 2 6\n"
    "e 3 4\n"
    "e 4 5\n";

enum Person : Vertex { Alice, Bob, Cindy, Daniel, Emily, Frank };

inline Graph sample_graph() {
  return build_graph(6,
                     {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 3}, {1, 5}, {2, 3}, {3, 4}},
                     {"Alice", "Bob", "Cindy", "Daniel", "Emily", "Frank"});
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return build_graph(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) e.emplace_back(u, static_cast<Vertex>((u + 1) % n));
  return build_graph(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return build_graph(n, e);
}

inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex u = 1; u <= leaves; ++u) e.emplace_back(0, u);
  return build_graph(leaves + 1, e);
}

inline Graph empty(std::size_t n) { return build_graph(n, std::vector<Edge>{}); }

/// Disjoint union, b's vertices shifted after a's.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  auto e = a.edges();
  const auto shift = static_cast<Vertex>(a.vertex_count());
  for (auto [u, v] : b.edges()) e.emplace_back(u + shift, v + shift);
  return build_graph(a.vertex_count() + b.vertex_count(), e);
}

/// G(n, p) with the repository RNG.
inline Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed, 0x7e57);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) e.emplace_back(u, v);
  return build_graph(n, e);
}

// --- exhaustive oracles (n <= ~16) -----------------------------------------

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> mask(g.vertex_count(), 0);
  for (auto [u, v] : g.edges()) {
    mask[u] |= 1u << v;
    mask[v] |= 1u << u;
  }
  return mask;
}

inline bool mask_is_clique(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  for (std::size_t v = 0; v < adj.size(); ++v)
    if ((s >> v & 1u) && (s & ~adj[v] & ~(1u << v))) return false;
  return true;
}

inline bool mask_is_independent(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  for (std::size_t v = 0; v < adj.size(); ++v)
    if ((s >> v & 1u) && (s & adj[v])) return false;
  return true;
}

inline std::size_t brute_max_clique(const Graph& g) {
  const auto adj = adjacency_masks(g);
  const std::uint32_t full = 1u << g.vertex_count();
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < full; ++s)
    if (mask_is_clique(adj, s)) best = std::max<std::size_t>(best, __builtin_popcount(s));
  return best;
}

inline std::size_t brute_max_independent(const Graph& g) {
  const auto adj = adjacency_masks(g);
  const std::uint32_t full = 1u << g.vertex_count();
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < full; ++s)
    if (mask_is_independent(adj, s)) best = std::max<std::size_t>(best, __builtin_popcount(s));
  return best;
}

inline std::size_t brute_domination_number(const Graph& g) {
  const auto adj = adjacency_masks(g);
  const auto n = g.vertex_count();
  const std::uint32_t full = 1u << n;
  std::size_t best = n;
  for (std::uint32_t s = 0; s < full; ++s) {
    std::uint32_t covered = s;
    for (std::size_t v = 0; v < n; ++v)
      if (s >> v & 1u) covered |= adj[v];
    if (covered == full - 1) best = std::min<std::size_t>(best, __builtin_popcount(s));
  }
  return best;
}

// Minimum number of sets from `good` (subsets satisfying a hereditary
// property) that partition all vertices, via DP over subsets.
inline std::size_t min_partition(std::size_t n, const std::vector<char>& good) {
  const std::uint32_t full = 1u << n;
  std::vector<std::uint8_t> best(full, 255);
  best[0] = 0;
  for (std::uint32_t s = 1; s < full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    // The class containing the lowest vertex of s.
    for (std::uint32_t t = s; t; t = (t - 1) & s) {
      if ((t & low) && good[t] && best[s ^ t] != 255)
        best[s] = std::min<std::uint8_t>(best[s], best[s ^ t] + 1);
    }
  }
  return best[full - 1];
}

inline std::size_t brute_chromatic_number(const Graph& g) {
  const auto adj = adjacency_masks(g);
  const std::uint32_t full = 1u << g.vertex_count();
  std::vector<char> good(full);
  for (std::uint32_t s = 0; s < full; ++s) good[s] = mask_is_independent(adj, s);
  return min_partition(g.vertex_count(), good);
}

inline std::size_t brute_clique_cover_number(const Graph& g) {
  const auto adj = adjacency_masks(g);
  const std::uint32_t full = 1u << g.vertex_count();
  std::vector<char> good(full);
  for (std::uint32_t s = 0; s < full; ++s) good[s] = mask_is_clique(adj, s);
  return min_partition(g.vertex_count(), good);
}

/// Longest simple cycle by exhaustive path extension; 0 if acyclic.
inline std::size_t brute_longest_cycle(const Graph& g) {
  const auto n = g.vertex_count();
  const auto adj = adjacency_masks(g);
  std::size_t best = 0;
  // Every cycle is enumerated from its smallest vertex.
  std::vector<Vertex> stack;
  auto extend = [&](auto&& self, Vertex start, Vertex cur, std::uint32_t used, std::size_t len) -> void {
    if (len >= 3 && (adj[cur] >> start & 1u)) best = std::max(best, len);
    for (Vertex w = start + 1; w < n; ++w) {
      if ((adj[cur] >> w & 1u) && !(used >> w & 1u)) self(self, start, w, used | (1u << w), len + 1);
    }
  };
  for (Vertex s = 0; s < n; ++s) extend(extend, s, s, 1u << s, 1);
  return best;
}

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// All-pairs distances by Floyd–Warshall on the adjacency matrix.
inline std::vector<std::vector<std::size_t>> all_pairs_distances(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kUnreachable));
  for (Vertex v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] != kUnreachable && d[k][j] != kUnreachable)
          d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::size_t brute_triangles(const Graph& g) {
  const auto n = g.vertex_count();
  std::size_t count = 0;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) ++count;
  return count;
}

/// Shortest cycle by removing each edge and measuring the remaining distance
/// between its endpoints; 0 if acyclic.
inline std::size_t brute_girth(const Graph& g) {
  std::size_t best = 0;
  const auto all = g.edges();
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::vector<Edge> rest;
    for (std::size_t j = 0; j < all.size(); ++j)
      if (j != i) rest.push_back(all[j]);
    const auto h = build_graph(g.vertex_count(), rest);
    const auto d = all_pairs_distances(h);
    const auto dist = d[all[i].first][all[i].second];
    if (dist != kUnreachable && (best == 0 || dist + 1 < best)) best = dist + 1;
  }
  return best;
}

inline std::size_t brute_diameter(const Graph& g) {
  std::size_t best = 0;
  for (const auto& row : all_pairs_distances(g))
    for (auto d : row)
      if (d != kUnreachable) best = std::max(best, d);
  return best;
}

}  // namespace gcx::testing
