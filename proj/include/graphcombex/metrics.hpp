#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "progress.hpp"
#include "traversal.hpp"

namespace gcx {

struct BasicStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t components = 0;
  double density = 0.0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  double mean_degree = 0.0;
  double stddev_degree = 0.0;  // population standard deviation
};

/// Everything that is at most linear in the graph size.
inline BasicStats basic_stats(const Graph& g) {
  BasicStats s;
  s.n = g.vertex_count();
  s.m = g.edge_count();
  if (s.n == 0) return s;
  s.components = connected_components(g).count();
  if (s.n > 1) {
    s.density = 2.0 * static_cast<double>(s.m) /
                (static_cast<double>(s.n) * static_cast<double>(s.n - 1));
  }
  s.min_degree = g.degree(0);
  s.max_degree = g.max_degree();
  double sum = 0.0;
  for (Vertex v = 0; v < s.n; ++v) {
    s.min_degree = std::min(s.min_degree, g.degree(v));
    sum += static_cast<double>(g.degree(v));
  }
  s.mean_degree = sum / static_cast<double>(s.n);
  double sq = 0.0;
  for (Vertex v = 0; v < s.n; ++v) {
    const double d = static_cast<double>(g.degree(v)) - s.mean_degree;
    sq += d * d;
  }
  s.stddev_degree = std::sqrt(sq / static_cast<double>(s.n));
  return s;
}

namespace detail {

// Calls on_triangle(u, v, w) once per triangle with u < v < w.
template <typename OnTriangle>
void for_each_triangle(const Graph& g, const Progress& progress, OnTriangle&& on_triangle) {
  const auto n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    if ((u & 0x3ff) == 0) progress.poll(static_cast<double>(u) / static_cast<double>(n));
    const auto nu = g.neighbours(u);
    for (auto vi = std::upper_bound(nu.begin(), nu.end(), u); vi != nu.end(); ++vi) {
      const Vertex v = *vi;
      const auto nv = g.neighbours(v);
      // Merge the parts of both lists above v.
      auto a = vi + 1;
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          on_triangle(u, v, *a);
          ++a;
          ++b;
        }
      }
    }
  }
}

}  // namespace detail

inline std::uint64_t triangle_count(const Graph& g, const Progress& progress = {}) {
  std::uint64_t count = 0;
  detail::for_each_triangle(g, progress, [&](Vertex, Vertex, Vertex) { ++count; });
  return count;
}

/// Mean over all vertices of the local clustering coefficient; vertices of
/// degree below two contribute zero.
inline double mean_clustering(const Graph& g, const Progress& progress = {}) {
  const auto n = g.vertex_count();
  if (n == 0) return 0.0;
  std::vector<std::uint64_t> at(n, 0);
  detail::for_each_triangle(g, progress, [&](Vertex u, Vertex v, Vertex w) {
    ++at[u];
    ++at[v];
    ++at[w];
  });
  double sum = 0.0;
  for (Vertex v = 0; v < n; ++v) {
    const auto d = static_cast<double>(g.degree(v));
    if (d >= 2) sum += static_cast<double>(at[v]) / (d * (d - 1) / 2.0);
  }
  return sum / static_cast<double>(n);
}

/// Length of a shortest cycle, or nullopt for forests.
inline std::optional<std::size_t> girth(const Graph& g, const Progress& progress = {}) {
  const auto n = g.vertex_count();
  if (g.edge_count() + connected_components(g).count() == n) return std::nullopt;

  std::size_t best = kUnreached;
  std::vector<std::size_t> dist(n, kUnreached);
  std::vector<Vertex> parent(n, 0);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n && best > 3; ++s) {
    if ((s & 0xff) == 0) progress.poll(static_cast<double>(s) / static_cast<double>(n));
    for (Vertex v : queue) dist[v] = kUnreached;
    queue.clear();
    queue.push_back(s);
    dist[s] = 0;
    parent[s] = s;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      // Nothing shorter than `best` can close beyond this depth.
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbours(u)) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

/// Largest eccentricity over all vertices, i.e. the largest diameter of any
/// connected component. One BFS per vertex.
inline std::size_t max_component_diameter(const Graph& g, const Progress& progress = {}) {
  const auto n = g.vertex_count();
  if (n == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  Bfs bfs(n);
  std::size_t best = 0;
  for (Vertex s = 0; s < n; ++s) {
    if ((s & 0xff) == 0) progress.poll(static_cast<double>(s) / static_cast<double>(n));
    const auto& order = bfs.run(g, s);
    best = std::max(best, bfs.distance(order.back()));
  }
  return best;
}

}  // namespace gcx
