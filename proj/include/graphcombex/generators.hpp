#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "graph.hpp"
#include "rng.hpp"

namespace gcx {

namespace detail {
inline void check_cap(std::size_t n, const Limits& limits) {
  if (n > limits.vertex_cap) {
    throw Error(ErrorCode::CapExceeded, std::to_string(n) + " vertices exceeds cap of " +
                                            std::to_string(limits.vertex_cap));
  }
}

inline std::uint64_t edge_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (std::uint64_t{u} << 32) | v;
}

// Rewires each edge with probability p: the first endpoint stays, the second
// is replaced by a uniform vertex that is neither the first endpoint nor one
// of its current neighbours. Edges whose fixed endpoint is already adjacent
// to everything are left alone. Edge count is preserved.
inline void rewire_edges(std::size_t n, std::vector<Edge>& edges, double p, Rng& rng) {
  if (p <= 0.0 || n < 3) return;
  std::unordered_set<std::uint64_t> present;
  present.reserve(edges.size() * 2);
  std::vector<std::size_t> deg(n, 0);
  for (auto [u, v] : edges) {
    present.insert(edge_key(u, v));
    ++deg[u];
    ++deg[v];
  }
  for (auto& e : edges) {
    if (!rng.bernoulli(p)) continue;
    const Vertex u = e.first;
    if (deg[u] + 1 >= n) continue;
    Vertex w;
    do {
      w = static_cast<Vertex>(rng.below(n));
    } while (w == u || present.contains(edge_key(u, w)));
    present.erase(edge_key(u, e.second));
    --deg[e.second];
    present.insert(edge_key(u, w));
    ++deg[w];
    e.second = w;
  }
}
}  // namespace detail

/// Complete b-ary tree of the given depth; vertex 0 is the root and the
/// children of i are b*i+1 .. b*i+b.
inline Graph gen_complete_nary_tree(std::size_t arity, std::size_t depth, const Limits& limits = {}) {
  if (arity < 1) throw Error(ErrorCode::InvalidParameters, "arity must be >= 1");
  std::size_t n = 1;
  std::size_t level = 1;
  for (std::size_t d = 0; d < depth; ++d) {
    if (level > limits.vertex_cap / arity) throw Error(ErrorCode::CapExceeded, "tree exceeds vertex cap");
    level *= arity;
    n += level;
    detail::check_cap(n, limits);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t child = 1; child < n; ++child) {
    edges.emplace_back(static_cast<Vertex>((child - 1) / arity), static_cast<Vertex>(child));
  }
  return build_graph(n, edges, {}, limits);
}

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct UnitDiskGraph {
  Graph graph;
  std::vector<Point> points;
};

/// n uniform points in the unit square joined when at distance <= radius.
inline UnitDiskGraph gen_unit_disk(std::size_t n, double radius, std::uint64_t seed,
                                   const Limits& limits = {}) {
  if (!(radius > 0.0) || radius > std::sqrt(2.0)) {
    throw Error(ErrorCode::InvalidParameters, "radius must lie in (0, sqrt(2)]");
  }
  detail::check_cap(n, limits);
  Rng rng(seed, streams::unit_disk);
  std::vector<Point> pts(n);
  for (auto& p : pts) {
    p.x = rng.uniform();
    p.y = rng.uniform();
  }

  // Bucket into square cells of side >= radius; only neighbouring cells can
  // hold points within range.
  const auto by_radius = static_cast<std::size_t>(std::floor(1.0 / radius));
  const auto by_count = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  const std::size_t cells = std::max<std::size_t>(1, std::min(by_radius, by_count));
  const auto cell_of = [&](double c) {
    return std::min(cells - 1, static_cast<std::size_t>(c * static_cast<double>(cells)));
  };
  std::vector<std::vector<Vertex>> bucket(cells * cells);
  for (Vertex v = 0; v < n; ++v) bucket[cell_of(pts[v].y) * cells + cell_of(pts[v].x)].push_back(v);

  const double r2 = radius * radius;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    const auto cx = cell_of(pts[v].x);
    const auto cy = cell_of(pts[v].y);
    for (std::size_t y = cy == 0 ? 0 : cy - 1; y <= std::min(cells - 1, cy + 1); ++y) {
      for (std::size_t x = cx == 0 ? 0 : cx - 1; x <= std::min(cells - 1, cx + 1); ++x) {
        for (Vertex w : bucket[y * cells + x]) {
          if (w <= v) continue;
          const double dx = pts[v].x - pts[w].x;
          const double dy = pts[v].y - pts[w].y;
          if (dx * dx + dy * dy <= r2) edges.emplace_back(v, w);
        }
      }
    }
  }
  return {build_graph(n, edges, {}, limits), std::move(pts)};
}

/// Preferential attachment grown from a complete core on attachment+1
/// vertices; every later vertex adds `attachment` distinct edges to targets
/// drawn with probability proportional to their current degree.
inline Graph gen_barabasi_albert(std::size_t n, std::size_t attachment, std::uint64_t seed,
                                 const Limits& limits = {}) {
  if (attachment < 1 || n <= attachment) {
    throw Error(ErrorCode::InvalidParameters, "need n > attachment >= 1");
  }
  detail::check_cap(n, limits);
  Rng rng(seed, streams::barabasi_albert);
  const std::size_t core = attachment + 1;
  std::vector<Edge> edges;
  edges.reserve(core * attachment / 2 + (n - core) * attachment);
  // Each edge contributes both endpoints, so a uniform draw from this list is
  // a degree-proportional draw over vertices.
  std::vector<Vertex> endpoints;
  endpoints.reserve(2 * edges.capacity());
  for (Vertex u = 0; u < core; ++u) {
    for (Vertex v = u + 1; v < core; ++v) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<Vertex> targets;
  for (auto v = static_cast<Vertex>(core); v < n; ++v) {
    targets.clear();
    while (targets.size() < attachment) {
      const Vertex t = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (Vertex t : targets) {
      edges.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return build_graph(n, edges, {}, limits);
}

/// rows x cols 4-neighbour lattice (vertex r*cols + c) with each edge
/// rewired with probability p_rewire.
inline Graph gen_grid_rewire(std::size_t rows, std::size_t cols, double p_rewire, std::uint64_t seed,
                             const Limits& limits = {}) {
  if (rows < 1 || cols < 1) throw Error(ErrorCode::InvalidParameters, "grid needs rows, cols >= 1");
  if (!(p_rewire >= 0.0 && p_rewire <= 1.0)) {
    throw Error(ErrorCode::InvalidParameters, "rewiring probability must lie in [0, 1]");
  }
  if (rows > limits.vertex_cap / cols) throw Error(ErrorCode::CapExceeded, "grid exceeds vertex cap");
  const std::size_t n = rows * cols;
  std::vector<Edge> edges;
  edges.reserve(2 * n);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = static_cast<Vertex>(r * cols + c);
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, static_cast<Vertex>(v + cols));
    }
  }
  Rng rng(seed, streams::grid_rewire);
  detail::rewire_edges(n, edges, p_rewire, rng);
  return build_graph(n, edges, {}, limits);
}

/// Ring lattice where each vertex joins its k/2 nearest neighbours per side,
/// then each edge is rewired with probability beta.
inline Graph gen_watts_strogatz(std::size_t n, std::size_t k, double beta, std::uint64_t seed,
                                const Limits& limits = {}) {
  if (k < 2 || k % 2 != 0 || k >= n) {
    throw Error(ErrorCode::InvalidParameters, "need even k with 2 <= k < n");
  }
  if (!(beta >= 0.0 && beta <= 1.0)) throw Error(ErrorCode::InvalidParameters, "beta must lie in [0, 1]");
  detail::check_cap(n, limits);
  std::vector<Edge> edges;
  edges.reserve(n * k / 2);
  for (std::size_t j = 1; j <= k / 2; ++j) {
    for (std::size_t u = 0; u < n; ++u) {
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>((u + j) % n));
    }
  }
  Rng rng(seed, streams::watts_strogatz);
  detail::rewire_edges(n, edges, beta, rng);
  return build_graph(n, edges, {}, limits);
}

// --- generator dispatch ----------------------------------------------------

enum class Family { Tree, UnitDisk, BarabasiAlbert, GridRewire, WattsStrogatz };

constexpr std::string_view to_string(Family f) {
  switch (f) {
    case Family::Tree: return "tree";
    case Family::UnitDisk: return "unit-disk";
    case Family::BarabasiAlbert: return "barabasi-albert";
    case Family::GridRewire: return "grid-rewire";
    case Family::WattsStrogatz: return "watts-strogatz";
  }
  return "unknown";
}

/// Accepts canonical names and the short aliases tree, udg, ba, grid, ws.
inline std::optional<Family> parse_family(std::string_view s) {
  if (s == "tree" || s == "nary-tree") return Family::Tree;
  if (s == "unit-disk" || s == "udg") return Family::UnitDisk;
  if (s == "barabasi-albert" || s == "ba") return Family::BarabasiAlbert;
  if (s == "grid-rewire" || s == "grid") return Family::GridRewire;
  if (s == "watts-strogatz" || s == "ws") return Family::WattsStrogatz;
  return std::nullopt;
}

/// Flat parameter record; each family reads only its own fields.
struct GenSpec {
  Family family = Family::Tree;
  std::size_t arity = 2;       // tree
  std::size_t depth = 3;       // tree
  std::size_t n = 100;         // unit-disk, barabasi-albert, watts-strogatz
  double radius = 0.1;         // unit-disk
  std::size_t attachment = 2;  // barabasi-albert
  std::size_t rows = 10;       // grid-rewire
  std::size_t cols = 10;       // grid-rewire
  double p_rewire = 0.0;       // grid-rewire
  std::size_t k = 4;           // watts-strogatz
  double beta = 0.0;           // watts-strogatz
  std::uint64_t seed = 1;
};

inline Graph generate(const GenSpec& spec, const Limits& limits = {}) {
  switch (spec.family) {
    case Family::Tree: return gen_complete_nary_tree(spec.arity, spec.depth, limits);
    case Family::UnitDisk: return gen_unit_disk(spec.n, spec.radius, spec.seed, limits).graph;
    case Family::BarabasiAlbert: return gen_barabasi_albert(spec.n, spec.attachment, spec.seed, limits);
    case Family::GridRewire: return gen_grid_rewire(spec.rows, spec.cols, spec.p_rewire, spec.seed, limits);
    case Family::WattsStrogatz: return gen_watts_strogatz(spec.n, spec.k, spec.beta, spec.seed, limits);
  }
  throw Error(ErrorCode::InvalidParameters, "unknown family");
}

}  // namespace gcx
