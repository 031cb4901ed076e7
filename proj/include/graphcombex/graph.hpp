#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace gcx {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Size guards. Every operation that can blow up in memory or time takes one
/// of these; the defaults are the shipped configuration.
struct Limits {
  std::size_t vertex_cap = 5'000'000;
  std::size_t matrix_export_cap = 10'000;
  std::size_t edge_budget = 50'000'000;
  std::size_t layout_cap = 20'000;
};

/// Immutable simple undirected graph in compressed sparse row form.
/// Adjacency lists are strictly ascending, which makes adjacency tests a
/// binary search and neighbourhood intersections a linear merge.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }
  bool empty() const noexcept { return vertex_count() == 0; }

  std::span<const Vertex> neighbours(Vertex v) const {
    check(v);
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  std::size_t degree(Vertex v) const {
    check(v);
    return offsets_[v + 1] - offsets_[v];
  }

  bool adjacent(Vertex u, Vertex v) const {
    check(u);
    check(v);
    const auto row = neighbours(u);
    return std::binary_search(row.begin(), row.end(), v);
  }

  std::size_t max_degree() const noexcept { return max_degree_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  std::string_view label(Vertex v) const {
    check(v);
    return labels_.empty() ? std::string_view{} : std::string_view{labels_[v]};
  }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Every edge once, as (smaller, larger), in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < vertex_count(); ++u) {
      for (Vertex v : neighbours(u)) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.offsets_ != b.offsets_ || a.targets_ != b.targets_) return false;
    for (Vertex v = 0; v < a.vertex_count(); ++v) {
      if (a.label(v) != b.label(v)) return false;
    }
    return true;
  }

  friend Graph build_graph(std::size_t n, std::span<const Edge> edges,
                           std::vector<std::string> labels, const Limits& limits);

 private:
  void check(Vertex v) const {
    if (v >= vertex_count()) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " not in [0, " +
                      std::to_string(vertex_count()) + ")");
    }
  }

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<std::string> labels_;
  std::size_t max_degree_ = 0;
};

/// Builds a graph from an unordered edge list. Duplicate pairs (in either
/// orientation) collapse; self-loops are rejected. `labels` is either empty or
/// one entry per vertex; all-empty label vectors are dropped.
inline Graph build_graph(std::size_t n, std::span<const Edge> edges,
                         std::vector<std::string> labels = {}, const Limits& limits = {}) {
  if (n > limits.vertex_cap) {
    throw Error(ErrorCode::CapExceeded, std::to_string(n) + " vertices exceeds cap of " +
                                            std::to_string(limits.vertex_cap));
  }
  if (!labels.empty() && labels.size() != n) {
    throw Error(ErrorCode::InvalidParameters, "label count does not match vertex count");
  }
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::VertexOutOfRange, "edge (" + std::to_string(u) + ", " +
                                                   std::to_string(v) + ") has endpoint >= " +
                                                   std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop on vertex " + std::to_string(u));
  }

  Graph g;
  std::vector<std::size_t> fill(n + 1, 0);
  for (const auto& [u, v] : edges) {
    ++fill[u + 1];
    ++fill[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) fill[i + 1] += fill[i];
  std::vector<Vertex> raw(fill[n]);
  std::vector<std::size_t> cursor(fill.begin(), fill.end() - 1);
  for (const auto& [u, v] : edges) {
    raw[cursor[u]++] = v;
    raw[cursor[v]++] = u;
  }

  // Sort and deduplicate each row, compacting in place.
  g.offsets_.assign(n + 1, 0);
  std::size_t write = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto first = raw.begin() + static_cast<std::ptrdiff_t>(fill[v]);
    const auto last = raw.begin() + static_cast<std::ptrdiff_t>(fill[v + 1]);
    std::sort(first, last);
    const auto unique_end = std::unique(first, last);
    const auto row_start = write;
    for (auto it = first; it != unique_end; ++it) raw[write++] = *it;
    g.offsets_[v + 1] = write;
    g.max_degree_ = std::max(g.max_degree_, write - row_start);
  }
  raw.resize(write);
  raw.shrink_to_fit();
  g.targets_ = std::move(raw);

  if (std::any_of(labels.begin(), labels.end(), [](const auto& s) { return !s.empty(); })) {
    g.labels_ = std::move(labels);
  }
  return g;
}

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges,
                         std::vector<std::string> labels = {}, const Limits& limits = {}) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(labels),
                     limits);
}

/// Induced subgraph on `keep` (ascending order not required); vertex i of the
/// result is keep[i]. Labels follow their vertices.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<std::int64_t> remap(g.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = static_cast<std::int64_t>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : g.neighbours(keep[i])) {
      const auto j = remap[w];
      if (j > static_cast<std::int64_t>(i)) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(keep.size());
    for (Vertex v : keep) labels.emplace_back(g.label(v));
  }
  Limits unlimited;
  unlimited.vertex_cap = static_cast<std::size_t>(-1);
  return build_graph(keep.size(), edges, std::move(labels), unlimited);
}

}  // namespace gcx
