#pragma once

#include <span>
#include <vector>

#include "graph.hpp"
#include "solution.hpp"

namespace gcx {

// Sequential greedy kernels shared by the constructive bounds and the
// iterated-greedy improvers. Both consume a full vertex permutation.

inline void check_permutation(const Graph& g, std::span<const Vertex> order) {
  if (order.size() != g.vertex_count()) {
    throw Error(ErrorCode::InvalidPermutation, "order has " + std::to_string(order.size()) +
                                                   " entries for " +
                                                   std::to_string(g.vertex_count()) + " vertices");
  }
  std::vector<char> seen(order.size(), 0);
  for (Vertex v : order) {
    if (v >= order.size() || seen[v]) {
      throw Error(ErrorCode::InvalidPermutation, "order is not a permutation of the vertices");
    }
    seen[v] = 1;
  }
}

/// First-fit colouring: each vertex in turn takes the smallest colour unused
/// by its already-coloured neighbours.
inline Colouring greedy_colouring_constructive(const Graph& g, std::span<const Vertex> order) {
  check_permutation(g, order);
  constexpr auto kNone = static_cast<std::size_t>(-1);
  Colouring c;
  c.colour.assign(g.vertex_count(), kNone);
  std::vector<std::size_t> stamp;  // stamp[colour] == v+1 when v's neighbour uses it
  for (Vertex v : order) {
    for (Vertex w : g.neighbours(v)) {
      const auto col = c.colour[w];
      if (col != kNone) stamp[col] = std::size_t{v} + 1;
    }
    std::size_t col = 0;
    while (col < c.count && stamp[col] == std::size_t{v} + 1) ++col;
    if (col == c.count) {
      ++c.count;
      stamp.push_back(0);
    }
    c.colour[v] = col;
  }
  return c;
}

/// Sequential clique partition: each vertex joins the first existing class
/// whose members are all its neighbours, otherwise opens a new class.
inline CliqueCover greedy_cover_constructive(const Graph& g, std::span<const Vertex> order) {
  check_permutation(g, order);
  constexpr auto kNone = static_cast<std::size_t>(-1);
  CliqueCover cover;
  std::vector<std::size_t> cls(g.vertex_count(), kNone);
  std::vector<std::size_t> hits;  // neighbours of the current vertex per class
  std::vector<std::size_t> touched;
  for (Vertex v : order) {
    touched.clear();
    for (Vertex w : g.neighbours(v)) {
      const auto c = cls[w];
      if (c == kNone) continue;
      if (hits[c]++ == 0) touched.push_back(c);
    }
    auto target = kNone;
    for (auto c : touched) {
      if (hits[c] == cover.classes[c].size() && c < target) target = c;
      hits[c] = 0;
    }
    if (target == kNone) {
      target = cover.classes.size();
      cover.classes.emplace_back();
      hits.push_back(0);
    }
    cover.classes[target].push_back(v);
    cls[v] = target;
  }
  return cover;
}

}  // namespace gcx
