#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"
#include "traversal.hpp"

namespace gcx {

/// A derived graph plus the correspondence back to its parent, so witnesses
/// found on the result can be projected onto the original vertices.
struct Projection {
  Graph graph;
  std::vector<std::int64_t> new_index;  // parent vertex -> result vertex, -1 if dropped
  std::vector<Vertex> original;         // result vertex -> parent vertex
};

namespace detail {
inline Projection project(const Graph& g, std::vector<Vertex> keep) {
  Projection p;
  p.new_index.assign(g.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) p.new_index[keep[i]] = static_cast<std::int64_t>(i);
  p.graph = induced_subgraph(g, keep);
  p.original = std::move(keep);
  return p;
}

inline std::vector<std::string> copy_labels(const Graph& g) { return g.labels(); }
}  // namespace detail

inline Graph complement(const Graph& g, const Limits& limits = {}) {
  const auto n = g.vertex_count();
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  if (pairs - g.edge_count() > limits.edge_budget) {
    throw Error(ErrorCode::ComplementTooDense,
                "complement would have " + std::to_string(pairs - g.edge_count()) +
                    " edges, budget is " + std::to_string(limits.edge_budget));
  }
  std::vector<Edge> edges;
  edges.reserve(pairs - g.edge_count());
  for (Vertex u = 0; u < n; ++u) {
    const auto row = g.neighbours(u);
    auto it = std::upper_bound(row.begin(), row.end(), u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (it != row.end() && *it == v) {
        ++it;
        continue;
      }
      edges.emplace_back(u, v);
    }
  }
  return build_graph(n, edges, detail::copy_labels(g), limits);
}

/// Iteratively removes every vertex of degree <= 1; what survives is the
/// union of all cycles and the paths between them (the 2-core).
inline Projection prune_leaves(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) {
      removed[v] = 1;
      queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex w : g.neighbours(queue[head])) {
      if (removed[w]) continue;
      if (--deg[w] <= 1) {
        removed[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n; ++v)
    if (!removed[v]) keep.push_back(v);
  return detail::project(g, std::move(keep));
}

/// Induced subgraph on a largest component; ties go to the component whose
/// smallest vertex index is smallest.
inline Projection largest_component(const Graph& g) {
  if (g.empty()) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  const auto comps = connected_components(g);
  std::size_t best = 0;
  for (std::size_t c = 1; c < comps.count(); ++c)
    if (comps.size[c] > comps.size[best]) best = c;
  std::vector<Vertex> keep;
  keep.reserve(comps.size[best]);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (comps.id[v] == best) keep.push_back(v);
  return detail::project(g, std::move(keep));
}

/// Joins every pair of vertices at distance 1..k. Dominating sets of the
/// result are exactly the k-reachability sets of the input.
inline Graph shortcut_graph(const Graph& g, std::size_t k, const Limits& limits = {}) {
  if (k < 1) throw Error(ErrorCode::InvalidParameters, "k must be >= 1");
  const auto n = g.vertex_count();
  std::vector<Edge> edges;
  Bfs bfs(n);
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex v : bfs.run(g, s, k)) {
      if (v > s) edges.emplace_back(s, v);
    }
    if (edges.size() > limits.edge_budget) {
      throw Error(ErrorCode::EdgeBudgetExceeded,
                  "shortcut graph exceeds edge budget of " + std::to_string(limits.edge_budget));
    }
  }
  return build_graph(n, edges, detail::copy_labels(g), limits);
}

}  // namespace gcx
