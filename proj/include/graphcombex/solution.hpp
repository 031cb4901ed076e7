#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "graph.hpp"

namespace gcx {

enum class SetKind { Clique, IndependentSet, DominatingSet, CliqueCoverClass, ReachSet };

constexpr std::string_view to_string(SetKind kind) {
  switch (kind) {
    case SetKind::Clique: return "clique";
    case SetKind::IndependentSet: return "independent-set";
    case SetKind::DominatingSet: return "dominating-set";
    case SetKind::CliqueCoverClass: return "clique-cover-class";
    case SetKind::ReachSet: return "reach-set";
  }
  return "unknown";
}

struct VertexSet {
  SetKind kind = SetKind::Clique;
  std::vector<Vertex> members;

  std::size_t size() const noexcept { return members.size(); }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

/// Proper colouring witness; colours are 0..count-1.
struct Colouring {
  std::vector<std::size_t> colour;
  std::size_t count = 0;

  friend bool operator==(const Colouring&, const Colouring&) = default;
};

/// Partition of the vertex set into cliques.
struct CliqueCover {
  std::vector<std::vector<Vertex>> classes;

  std::size_t size() const noexcept { return classes.size(); }
  friend bool operator==(const CliqueCover&, const CliqueCover&) = default;
};

struct CycleWitness {
  std::vector<Vertex> sequence;

  std::size_t length() const noexcept { return sequence.size(); }
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

using Witness = std::variant<VertexSet, Colouring, CliqueCover, CycleWitness>;

/// A witness together with the objective it certifies and where it came from.
struct Solution {
  Witness witness;
  std::size_t objective = 0;
  std::string algorithm;
  double wall_ms = 0.0;
};

// --- validity predicates -------------------------------------------------

namespace detail {
inline bool distinct_in_range(const Graph& g, std::span<const Vertex> vs) {
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex v : vs) {
    if (v >= g.vertex_count() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}
}  // namespace detail

inline bool is_clique(const Graph& g, std::span<const Vertex> vs) {
  if (!detail::distinct_in_range(g, vs)) return false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

inline bool is_independent_set(const Graph& g, std::span<const Vertex> vs) {
  if (!detail::distinct_in_range(g, vs)) return false;
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : vs) in[v] = 1;
  for (Vertex v : vs) {
    for (Vertex w : g.neighbours(v)) {
      if (in[w]) return false;
    }
  }
  return true;
}

inline bool is_dominating_set(const Graph& g, std::span<const Vertex> vs) {
  if (!detail::distinct_in_range(g, vs)) return false;
  std::vector<char> covered(g.vertex_count(), 0);
  for (Vertex v : vs) {
    covered[v] = 1;
    for (Vertex w : g.neighbours(v)) covered[w] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

inline bool is_proper_colouring(const Graph& g, const Colouring& c) {
  if (c.colour.size() != g.vertex_count()) return false;
  std::vector<char> used(c.count, 0);
  for (auto col : c.colour) {
    if (col >= c.count) return false;
    used[col] = 1;
  }
  if (std::find(used.begin(), used.end(), 0) != used.end()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.neighbours(v)) {
      if (c.colour[v] == c.colour[w]) return false;
    }
  }
  return true;
}

inline bool is_clique_cover(const Graph& g, const CliqueCover& cover) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::size_t total = 0;
  for (const auto& cls : cover.classes) {
    if (cls.empty() || !is_clique(g, cls)) return false;
    for (Vertex v : cls) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
    total += cls.size();
  }
  return total == g.vertex_count();
}

inline bool is_cycle(const Graph& g, std::span<const Vertex> seq) {
  if (seq.size() < 3 || !detail::distinct_in_range(g, seq)) return false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!g.adjacent(seq[i], seq[(i + 1) % seq.size()])) return false;
  }
  return true;
}

inline bool is_valid(const Graph& g, const Witness& w) {
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, VertexSet>) {
          switch (x.kind) {
            case SetKind::Clique:
            case SetKind::CliqueCoverClass: return is_clique(g, x.members);
            case SetKind::IndependentSet: return is_independent_set(g, x.members);
            case SetKind::DominatingSet: return is_dominating_set(g, x.members);
            case SetKind::ReachSet: return detail::distinct_in_range(g, x.members);
          }
          return false;
        } else if constexpr (std::is_same_v<T, Colouring>) {
          return is_proper_colouring(g, x);
        } else if constexpr (std::is_same_v<T, CliqueCover>) {
          return is_clique_cover(g, x);
        } else {
          return is_cycle(g, x.sequence);
        }
      },
      w);
}

inline std::size_t objective_of(const Witness& w) {
  return std::visit(
      [](const auto& x) -> std::size_t {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, VertexSet>) return x.size();
        else if constexpr (std::is_same_v<T, Colouring>) return x.count;
        else if constexpr (std::is_same_v<T, CliqueCover>) return x.size();
        else return x.length();
      },
      w);
}

/// Colour classes as vertex lists, ordered by colour; members ascending.
inline std::vector<std::vector<Vertex>> colour_classes(const Colouring& c) {
  std::vector<std::vector<Vertex>> classes(c.count);
  for (Vertex v = 0; v < c.colour.size(); ++v) classes[c.colour[v]].push_back(v);
  return classes;
}

}  // namespace gcx
