#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "graph.hpp"

namespace gcx {

inline constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

struct Components {
  std::vector<std::size_t> id;  // component index per vertex, numbered by smallest member
  std::vector<std::size_t> size;

  std::size_t count() const noexcept { return size.size(); }
};

inline Components connected_components(const Graph& g) {
  const auto n = g.vertex_count();
  Components c;
  c.id.assign(n, kUnreached);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    if (c.id[s] != kUnreached) continue;
    const auto comp = c.size.size();
    queue.clear();
    queue.push_back(s);
    c.id[s] = comp;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbours(queue[head])) {
        if (c.id[w] == kUnreached) {
          c.id[w] = comp;
          queue.push_back(w);
        }
      }
    }
    c.size.push_back(queue.size());
  }
  return c;
}

/// Reusable breadth-first search workspace; avoids reallocating per source
/// when sweeping every vertex.
class Bfs {
 public:
  explicit Bfs(std::size_t n) : dist_(n, kUnreached) { order_.reserve(n); }

  /// Distances from `source`, exploring no further than `max_depth`.
  /// Returns vertices in visit order; distance(v) is valid until next run.
  const std::vector<Vertex>& run(const Graph& g, Vertex source, std::size_t max_depth = kUnreached) {
    for (Vertex v : order_) dist_[v] = kUnreached;
    order_.clear();
    order_.push_back(source);
    dist_[source] = 0;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      const Vertex u = order_[head];
      if (dist_[u] >= max_depth) continue;
      for (Vertex w : g.neighbours(u)) {
        if (dist_[w] == kUnreached) {
          dist_[w] = dist_[u] + 1;
          order_.push_back(w);
        }
      }
    }
    return order_;
  }

  std::size_t distance(Vertex v) const { return dist_[v]; }
  const std::vector<Vertex>& visited() const noexcept { return order_; }

 private:
  std::vector<std::size_t> dist_;
  std::vector<Vertex> order_;
};

}  // namespace gcx
