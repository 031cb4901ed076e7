#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "generators.hpp"
#include "graph.hpp"
#include "solution.hpp"
#include "traversal.hpp"

namespace gcx {

enum class LayoutKind { Radial, Grid, Tree, Circular, CycleOuter };

constexpr std::string_view to_string(LayoutKind k) {
  switch (k) {
    case LayoutKind::Radial: return "radial";
    case LayoutKind::Grid: return "grid";
    case LayoutKind::Tree: return "tree";
    case LayoutKind::Circular: return "circular";
    case LayoutKind::CycleOuter: return "cycle-outer";
  }
  return "unknown";
}

inline std::optional<LayoutKind> parse_layout_kind(std::string_view s) {
  for (auto k : {LayoutKind::Radial, LayoutKind::Grid, LayoutKind::Tree, LayoutKind::Circular,
                 LayoutKind::CycleOuter}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

struct LayoutDecoration {
  std::optional<Colouring> colouring;
  std::optional<CycleWitness> cycle;
};

/// One point per vertex inside the unit square, y growing downwards.
struct LayoutResult {
  LayoutKind kind = LayoutKind::Circular;
  std::vector<Point> coords;
  LayoutDecoration decoration;
};

namespace detail {

inline constexpr Point kCentre{0.5, 0.5};

inline Point on_circle(double radius, std::size_t i, std::size_t count) {
  if (count == 0 || radius == 0.0) return kCentre;
  // Start at the top and go clockwise on screen.
  const double a = -std::numbers::pi / 2 + 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(count);
  return {0.5 + radius * std::cos(a), 0.5 + radius * std::sin(a)};
}

inline Point clamp_unit(Point p) { return {std::clamp(p.x, 0.0, 1.0), std::clamp(p.y, 0.0, 1.0)}; }

// Highest degree, smallest index on ties.
inline Vertex max_degree_vertex(const Graph& g) {
  Vertex best = 0;
  for (Vertex v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) > g.degree(best)) best = v;
  return best;
}

// BFS depth from a set of sources; unreachable vertices get one level past
// the deepest reachable one. Returns the per-vertex level and level count.
inline std::pair<std::vector<std::size_t>, std::size_t> levels_from(const Graph& g, std::span<const Vertex> sources) {
  const auto n = g.vertex_count();
  std::vector<std::size_t> level(n, kUnreached);
  std::vector<Vertex> queue(sources.begin(), sources.end());
  for (Vertex s : sources) level[s] = 0;
  std::size_t deepest = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    deepest = std::max(deepest, level[u]);
    for (Vertex w : g.neighbours(u)) {
      if (level[w] != kUnreached) continue;
      level[w] = level[u] + 1;
      queue.push_back(w);
    }
  }
  std::size_t count = deepest + 1;
  if (queue.size() < n) {
    for (auto& l : level)
      if (l == kUnreached) l = deepest + 1;
    ++count;
  }
  return {std::move(level), count};
}

// Members of each level, in index order.
inline std::vector<std::vector<Vertex>> group_levels(const std::vector<std::size_t>& level, std::size_t count) {
  std::vector<std::vector<Vertex>> rows(count);
  for (Vertex v = 0; v < level.size(); ++v) rows[level[v]].push_back(v);
  return rows;
}

inline void check_decoration(const Graph& g, const LayoutDecoration& d) {
  if (d.colouring && !is_proper_colouring(g, *d.colouring)) {
    throw Error(ErrorCode::InvalidParameters, "colouring decoration is not a proper colouring of the graph");
  }
  if (d.cycle && !is_cycle(g, d.cycle->sequence)) {
    throw Error(ErrorCode::InvalidParameters, "cycle decoration is not a cycle of the graph");
  }
}

}  // namespace detail

inline LayoutResult layout(const Graph& g, LayoutKind kind, LayoutDecoration decoration = {},
                           const Limits& limits = {}) {
  const auto n = g.vertex_count();
  if (n > limits.layout_cap) {
    throw Error(ErrorCode::TooLargeForLayout, std::to_string(n) + " vertices exceeds layout cap of " +
                                                  std::to_string(limits.layout_cap));
  }
  if (kind == LayoutKind::CycleOuter && !decoration.cycle) {
    throw Error(ErrorCode::MissingCycle, "cycle-outer layout needs a cycle");
  }
  detail::check_decoration(g, decoration);

  LayoutResult out{kind, std::vector<Point>(n, detail::kCentre), std::move(decoration)};
  if (n <= 1) return out;
  auto& xy = out.coords;

  switch (kind) {
    case LayoutKind::Radial: {
      const Vertex root = detail::max_degree_vertex(g);
      const auto [level, count] = detail::levels_from(g, std::span(&root, 1));
      const auto rows = detail::group_levels(level, count);
      for (std::size_t l = 0; l < count; ++l) {
        const double r = 0.5 * static_cast<double>(l) / static_cast<double>(count);
        for (std::size_t i = 0; i < rows[l].size(); ++i) xy[rows[l][i]] = detail::on_circle(r, i, rows[l].size());
      }
      break;
    }
    case LayoutKind::Grid: {
      const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
      for (Vertex v = 0; v < n; ++v) {
        xy[v] = {(static_cast<double>(v % side) + 0.5) / static_cast<double>(side),
                 (static_cast<double>(v / side) + 0.5) / static_cast<double>(side)};
      }
      break;
    }
    case LayoutKind::Tree: {
      const Vertex root = detail::max_degree_vertex(g);
      const auto [level, count] = detail::levels_from(g, std::span(&root, 1));
      const auto rows = detail::group_levels(level, count);
      for (std::size_t l = 0; l < count; ++l) {
        const double y = (static_cast<double>(l) + 0.5) / static_cast<double>(count);
        for (std::size_t i = 0; i < rows[l].size(); ++i) {
          xy[rows[l][i]] = {(static_cast<double>(i) + 0.5) / static_cast<double>(rows[l].size()), y};
        }
      }
      break;
    }
    case LayoutKind::Circular: {
      for (Vertex v = 0; v < n; ++v) xy[v] = detail::on_circle(0.5, v, n);
      break;
    }
    case LayoutKind::CycleOuter: {
      const auto& seq = out.decoration.cycle->sequence;
      for (std::size_t i = 0; i < seq.size(); ++i) xy[seq[i]] = detail::on_circle(0.5, i, seq.size());
      // Everything else on rings inside, by distance from the cycle.
      const auto [level, count] = detail::levels_from(g, seq);
      const auto rows = detail::group_levels(level, count);
      for (std::size_t l = 1; l < count; ++l) {
        const double r = 0.5 * (1.0 - static_cast<double>(l) / static_cast<double>(count));
        for (std::size_t i = 0; i < rows[l].size(); ++i) xy[rows[l][i]] = detail::on_circle(r, i, rows[l].size());
      }
      break;
    }
  }
  for (auto& p : xy) p = detail::clamp_unit(p);
  return out;
}

// --- rendering -------------------------------------------------------------

inline constexpr std::array<std::string_view, 16> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#393b79", "#637939", "#8c6d31", "#843c39", "#7b4173", "#3182bd"};

struct SvgOptions {
  double size = 640.0;
  double margin = 24.0;
  double vertex_radius = 0.0;  // 0 picks one from n
  bool labels = false;
};

namespace detail {
inline std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string fmt2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}
}  // namespace detail

/// SVG 1.1 drawing: one <line> per edge, one <circle> per vertex. Cycle
/// edges carry class "edge cycle"; colour classes pick fills from kPalette.
inline void render_svg(std::ostream& os, const LayoutResult& lr, const Graph& g, const SvgOptions& opt = {}) {
  const auto n = g.vertex_count();
  if (lr.coords.size() != n) throw Error(ErrorCode::InvalidParameters, "layout does not match graph");
  const double span = opt.size - 2 * opt.margin;
  const auto px = [&](double u) { return detail::fmt2(opt.margin + u * span); };
  const double radius =
      opt.vertex_radius > 0 ? opt.vertex_radius
                            : std::clamp(span / (4.0 * std::sqrt(static_cast<double>(std::max<std::size_t>(n, 1)))), 1.5, 12.0);

  std::vector<std::uint64_t> cycle_edges;
  if (lr.decoration.cycle) {
    const auto& seq = lr.decoration.cycle->sequence;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      cycle_edges.push_back(detail::edge_key(seq[i], seq[(i + 1) % seq.size()]));
    }
    std::sort(cycle_edges.begin(), cycle_edges.end());
  }

  const auto size = detail::fmt2(opt.size);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
     << "<style>.edge{stroke:#9a9a9a;stroke-width:1}.edge.cycle{stroke:#d62728;stroke-width:3}"
        ".vertex{stroke:#333;stroke-width:0.8}text{font:10px sans-serif}</style>\n";
  if (n == 0) {
    os << "</svg>\n";
    return;
  }
  os << "<g class=\"edges\">\n";
  for (auto [u, v] : g.edges()) {
    const bool hot = std::binary_search(cycle_edges.begin(), cycle_edges.end(), detail::edge_key(u, v));
    os << "<line class=\"" << (hot ? "edge cycle" : "edge") << "\" x1=\"" << px(lr.coords[u].x) << "\" y1=\""
       << px(lr.coords[u].y) << "\" x2=\"" << px(lr.coords[v].x) << "\" y2=\"" << px(lr.coords[v].y) << "\"/>\n";
  }
  os << "</g>\n<g class=\"vertices\">\n";
  const auto r = detail::fmt2(radius);
  for (Vertex v = 0; v < n; ++v) {
    const auto fill = lr.decoration.colouring ? kPalette[lr.decoration.colouring->colour[v] % kPalette.size()]
                                              : std::string_view("#ffffff");
    os << "<circle class=\"vertex\" id=\"v" << v + 1 << "\" cx=\"" << px(lr.coords[v].x) << "\" cy=\""
       << px(lr.coords[v].y) << "\" r=\"" << r << "\" fill=\"" << fill << "\"/>\n";
  }
  if (opt.labels) {
    for (Vertex v = 0; v < n; ++v) {
      const auto text = g.has_labels() && !g.label(v).empty() ? detail::xml_escape(g.label(v)) : std::to_string(v + 1);
      os << "<text x=\"" << detail::fmt2(opt.margin + lr.coords[v].x * span + radius + 2) << "\" y=\""
         << detail::fmt2(opt.margin + lr.coords[v].y * span - radius - 2) << "\">" << text << "</text>\n";
    }
  }
  os << "</g>\n</svg>\n";
}

inline std::string render_svg(const LayoutResult& lr, const Graph& g, const SvgOptions& opt = {}) {
  std::ostringstream os;
  render_svg(os, lr, g, opt);
  return os.str();
}

/// "vertex,x,y" with 1-based vertex ids.
inline std::string layout_csv(const LayoutResult& lr) {
  std::string out = "vertex,x,y\n";
  char buf[96];
  for (std::size_t v = 0; v < lr.coords.size(); ++v) {
    std::snprintf(buf, sizeof buf, "%zu,%.6f,%.6f\n", v + 1, lr.coords[v].x, lr.coords[v].y);
    out += buf;
  }
  return out;
}

}  // namespace gcx
