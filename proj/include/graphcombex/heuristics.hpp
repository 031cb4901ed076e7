#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stop_token>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "heap.hpp"
#include "kernels.hpp"
#include "metrics.hpp"
#include "rng.hpp"
#include "solution.hpp"
#include "transforms.hpp"
#include "traversal.hpp"

namespace gcx {

/// Grows a maximal clique from the highest-degree vertex, each step adding
/// the highest-degree candidate adjacent to every member so far.
inline VertexSet greedy_clique(const Graph& g) {
  const auto n = g.vertex_count();
  if (n == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  IndexedHeap<std::size_t, MaxKeyFirst> all(n);
  for (Vertex v = 0; v < n; ++v) all.push(v, g.degree(v));
  VertexSet clique{SetKind::Clique, {all.top()}};

  // Candidates are neighbours of the first member, taken in the same
  // degree order; a popped candidate either extends the clique or is dead.
  IndexedHeap<std::size_t, MaxKeyFirst> candidates(n);
  for (Vertex w : g.neighbours(clique.members.front())) candidates.push(w, g.degree(w));
  while (!candidates.empty()) {
    const Vertex v = candidates.pop();
    const bool fits = std::all_of(clique.members.begin() + 1, clique.members.end(),
                                  [&](Vertex u) { return g.adjacent(v, u); });
    if (fits) clique.members.push_back(v);
  }
  return clique;
}

/// Brélaz's DSATUR: colour next the vertex seeing the most distinct colours
/// among its neighbours (ties: larger degree, then smaller index) with the
/// smallest colour it can take.
inline Colouring dsatur_colouring(const Graph& g) {
  const auto n = g.vertex_count();
  constexpr auto kNone = static_cast<std::size_t>(-1);
  struct Key {
    std::size_t saturation;
    std::size_t degree;
  };
  struct Before {
    bool operator()(const Key& a, Vertex va, const Key& b, Vertex vb) const {
      if (a.saturation != b.saturation) return a.saturation > b.saturation;
      if (a.degree != b.degree) return a.degree > b.degree;
      return va < vb;
    }
  };
  IndexedHeap<Key, Before> queue(n);
  for (Vertex v = 0; v < n; ++v) queue.push(v, {0, g.degree(v)});

  Colouring c;
  c.colour.assign(n, kNone);
  // Distinct colours seen by each uncoloured vertex, kept sorted; released
  // once the vertex is coloured.
  std::vector<std::vector<std::uint32_t>> seen(n);
  std::vector<std::size_t> stamp;
  while (!queue.empty()) {
    const Vertex v = queue.pop();
    for (Vertex w : g.neighbours(v)) {
      if (c.colour[w] != kNone) stamp[c.colour[w]] = std::size_t{v} + 1;
    }
    std::size_t col = 0;
    while (col < c.count && stamp[col] == std::size_t{v} + 1) ++col;
    if (col == c.count) {
      ++c.count;
      stamp.push_back(0);
    }
    c.colour[v] = col;
    std::vector<std::uint32_t>().swap(seen[v]);

    for (Vertex w : g.neighbours(v)) {
      if (c.colour[w] != kNone) continue;
      auto& s = seen[w];
      const auto it = std::lower_bound(s.begin(), s.end(), static_cast<std::uint32_t>(col));
      if (it != s.end() && *it == col) continue;
      s.insert(it, static_cast<std::uint32_t>(col));
      queue.update(w, {s.size(), g.degree(w)});
    }
  }
  return c;
}

/// Minimum-degree greedy: take the vertex of least residual degree, delete
/// its closed neighbourhood, repeat. Yields at least n/(Δ+1) vertices.
inline VertexSet greedy_independent_set(const Graph& g) {
  const auto n = g.vertex_count();
  IndexedHeap<std::size_t, MinKeyFirst> queue(n);
  for (Vertex v = 0; v < n; ++v) queue.push(v, g.degree(v));
  VertexSet out{SetKind::IndependentSet, {}};
  while (!queue.empty()) {
    const Vertex v = queue.pop();
    out.members.push_back(v);
    for (Vertex w : g.neighbours(v)) {
      if (!queue.contains(w)) continue;
      queue.erase(w);
      for (Vertex x : g.neighbours(w)) {
        if (queue.contains(x)) queue.update(x, queue.key(x) - 1);
      }
    }
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

/// Set-cover greedy: repeatedly pick the vertex whose closed neighbourhood
/// covers the most still-uncovered vertices.
inline VertexSet greedy_dominating_set(const Graph& g) {
  const auto n = g.vertex_count();
  IndexedHeap<std::size_t, MaxKeyFirst> queue(n);
  for (Vertex v = 0; v < n; ++v) queue.push(v, g.degree(v) + 1);
  std::vector<char> covered(n, 0);
  std::size_t remaining = n;
  VertexSet out{SetKind::DominatingSet, {}};

  const auto cover = [&](Vertex u) {
    if (covered[u]) return;
    covered[u] = 1;
    --remaining;
    // u no longer counts towards any closed neighbourhood containing it.
    if (queue.contains(u)) queue.update(u, queue.key(u) - 1);
    for (Vertex x : g.neighbours(u)) {
      if (queue.contains(x)) queue.update(x, queue.key(x) - 1);
    }
  };
  while (remaining > 0) {
    const Vertex v = queue.pop();
    out.members.push_back(v);
    cover(v);
    for (Vertex w : g.neighbours(v)) cover(w);
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

struct CycleSearchBudget {
  std::size_t restarts = 64;
  std::optional<std::chrono::milliseconds> time_limit;
};

/// Randomised depth-first search for long cycles. Each restart runs a DFS
/// from a random root with neighbour lists scanned from a random offset; a
/// back edge to a vertex on the stack closes the cycle formed by the stack
/// segment above it. The longest cycle over all restarts is kept.
class DfsCycleSearch {
 public:
  DfsCycleSearch(const Graph& g, std::uint64_t seed)
      : g_(g),
        rng_(seed, streams::longest_cycle),
        visit_epoch_(g.vertex_count(), 0),
        stack_pos_(g.vertex_count(), kOff) {
    const auto n = g.vertex_count();
    cyclic_ = n >= 3 && g.edge_count() + connected_components(g).count() > n;
  }

  bool cyclic() const noexcept { return cyclic_; }
  const std::optional<CycleWitness>& best() const noexcept { return best_; }
  std::size_t restarts() const noexcept { return epoch_; }

  /// One DFS from a fresh random root. Returns true if it found a longer
  /// cycle. Abandons the traversal early if `stop` fires.
  bool restart(std::stop_token stop = {}) {
    if (!cyclic_) return false;
    const auto before = best_ ? best_->length() : 0;
    ++epoch_;
    const auto push = [&](Vertex v) {
      visit_epoch_[v] = epoch_;
      stack_pos_[v] = stack_.size();
      const auto d = g_.degree(v);
      stack_.push_back({v, d == 0 ? 0 : rng_.below(d), 0});
    };
    push(static_cast<Vertex>(rng_.below(g_.vertex_count())));
    std::size_t steps = 0;
    while (!stack_.empty()) {
      if ((++steps & 0xffff) == 0 && stop.stop_requested()) break;
      auto& top = stack_.back();
      const auto nb = g_.neighbours(top.v);
      if (top.next == nb.size()) {
        stack_pos_[top.v] = kOff;
        stack_.pop_back();
        continue;
      }
      const Vertex w = nb[(top.offset + top.next++) % nb.size()];
      if (visit_epoch_[w] != epoch_) {
        push(w);
      } else if (stack_pos_[w] != kOff) {
        const auto from = stack_pos_[w];
        const auto len = stack_.size() - from;
        if (len >= 3 && (!best_ || len > best_->length())) {
          CycleWitness c;
          c.sequence.reserve(len);
          for (auto i = from; i < stack_.size(); ++i) c.sequence.push_back(stack_[i].v);
          best_ = std::move(c);
        }
      }
    }
    for (const auto& f : stack_) stack_pos_[f.v] = kOff;
    stack_.clear();
    return best_ && best_->length() > before;
  }

 private:
  static constexpr auto kOff = static_cast<std::size_t>(-1);
  struct Frame {
    Vertex v;
    std::size_t offset;  // rotation applied to v's neighbour list
    std::size_t next;    // neighbours scanned so far
  };

  const Graph& g_;
  Rng rng_;
  bool cyclic_ = false;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> visit_epoch_;
  std::vector<std::size_t> stack_pos_;
  std::vector<Frame> stack_;
  std::optional<CycleWitness> best_;
};

/// Runs DfsCycleSearch until the budget is spent or a Hamiltonian cycle
/// turns up. Returns nullopt for acyclic graphs.
inline std::optional<CycleWitness> longest_cycle_dfs(const Graph& g, std::uint64_t seed,
                                                     const CycleSearchBudget& budget = {},
                                                     std::stop_token stop = {}) {
  DfsCycleSearch search(g, seed);
  if (!search.cyclic()) return std::nullopt;
  const auto started = std::chrono::steady_clock::now();
  for (std::size_t run = 0; run < budget.restarts; ++run) {
    if (stop.stop_requested()) break;
    if (budget.time_limit && std::chrono::steady_clock::now() - started >= *budget.time_limit) break;
    if (search.best() && search.best()->length() == g.vertex_count()) break;
    search.restart(stop);
  }
  return search.best();
}

/// Sum over components of ceil(|C| / (Δ_C + 1)); no vertex dominates more
/// than Δ+1 vertices.
inline std::size_t domset_lower_bound(const Graph& g) {
  if (g.empty()) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  const auto comps = connected_components(g);
  std::vector<std::size_t> max_deg(comps.count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    max_deg[comps.id[v]] = std::max(max_deg[comps.id[v]], g.degree(v));
  }
  std::size_t total = 0;
  for (std::size_t c = 0; c < comps.count(); ++c) {
    total += (comps.size[c] + max_deg[c]) / (max_deg[c] + 1);
  }
  return total;
}

/// Size of the largest component left after iterated leaf pruning: every
/// cycle lives inside one such component.
inline std::size_t cycle_upper_bound(const Graph& g) {
  const auto core = prune_leaves(g);
  if (core.graph.empty()) return 0;
  const auto comps = connected_components(core.graph);
  return *std::max_element(comps.size.begin(), comps.size.end());
}

// --- bounds report -----------------------------------------------------------

enum class Problem {
  MaxClique,
  ChromaticNumber,
  MaxIndependentSet,
  MinCliqueCover,
  MinDominatingSet,
  LongestCycle,
};

inline constexpr std::array<Problem, 6> kAllProblems = {
    Problem::MaxClique,      Problem::ChromaticNumber,  Problem::MaxIndependentSet,
    Problem::MinCliqueCover, Problem::MinDominatingSet, Problem::LongestCycle};

constexpr std::string_view to_string(Problem p) {
  switch (p) {
    case Problem::MaxClique: return "max_clique";
    case Problem::ChromaticNumber: return "chromatic_number";
    case Problem::MaxIndependentSet: return "max_independent_set";
    case Problem::MinCliqueCover: return "min_clique_cover";
    case Problem::MinDominatingSet: return "dominating_set";
    case Problem::LongestCycle: return "longest_cycle";
  }
  return "unknown";
}

/// Interval [lower, upper] on an optimum, with the witnesses behind each end
/// when the bound comes from a concrete solution.
struct Interval {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::optional<Solution> lower_witness;
  std::optional<Solution> upper_witness;

  bool closed() const noexcept { return lower == upper; }
};

struct BoundsReport {
  std::array<Interval, 6> intervals{};

  Interval& operator[](Problem p) { return intervals[static_cast<std::size_t>(p)]; }
  const Interval& operator[](Problem p) const { return intervals[static_cast<std::size_t>(p)]; }

  /// Raises a lower / lowers an upper bound if the new value is tighter.
  void offer_lower(Problem p, Solution s) {
    auto& iv = (*this)[p];
    if (s.objective > iv.lower) {
      iv.lower = s.objective;
      iv.lower_witness = std::move(s);
    }
  }
  void offer_upper(Problem p, Solution s) {
    auto& iv = (*this)[p];
    if (s.objective < iv.upper) {
      iv.upper = s.objective;
      iv.upper_witness = std::move(s);
    }
  }
};

namespace detail {
template <typename F>
Solution timed(std::string_view algorithm, F&& produce) {
  const auto t0 = std::chrono::steady_clock::now();
  Witness w = produce();
  const auto t1 = std::chrono::steady_clock::now();
  const auto objective = objective_of(w);
  return {std::move(w), objective, std::string(algorithm),
          std::chrono::duration<double, std::milli>(t1 - t0).count()};
}

inline std::vector<Vertex> identity_order(std::size_t n) {
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  return order;
}

// Restarts scaled down for large graphs so one bounds pass stays roughly
// linear; deterministic in the graph size.
inline std::size_t default_cycle_restarts(const Graph& g) {
  const auto work = g.vertex_count() + g.edge_count();
  return std::clamp<std::size_t>(50'000'000 / std::max<std::size_t>(work, 1), 1, 64);
}
}  // namespace detail

/// One pass of every constructive heuristic, assembled into intervals.
inline BoundsReport compute_bounds(const Graph& g, std::uint64_t seed = 1) {
  BoundsReport r;
  if (g.empty()) return r;

  const auto clique = detail::timed("greedy-clique", [&] { return greedy_clique(g); });
  const auto colouring = detail::timed("dsatur", [&] { return dsatur_colouring(g); });
  for (auto p : {Problem::MaxClique, Problem::ChromaticNumber}) {
    r[p] = {clique.objective, colouring.objective, clique, colouring};
  }

  const auto indep = detail::timed("greedy-independent-set", [&] { return greedy_independent_set(g); });
  const auto cover = detail::timed("greedy-clique-cover", [&] {
    return greedy_cover_constructive(g, detail::identity_order(g.vertex_count()));
  });
  for (auto p : {Problem::MaxIndependentSet, Problem::MinCliqueCover}) {
    r[p] = {indep.objective, cover.objective, indep, cover};
  }

  const auto dom = detail::timed("greedy-dominating-set", [&] { return greedy_dominating_set(g); });
  r[Problem::MinDominatingSet] = {domset_lower_bound(g), dom.objective, std::nullopt, dom};

  auto& cyc = r[Problem::LongestCycle];
  cyc.upper = cycle_upper_bound(g);
  if (cyc.upper > 0) {
    const auto t0 = std::chrono::steady_clock::now();
    auto found = longest_cycle_dfs(g, seed, {detail::default_cycle_restarts(g), std::nullopt});
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (found) {
      cyc.lower = found->length();
      cyc.lower_witness = Solution{std::move(*found), cyc.lower, "dfs-longest-cycle", ms};
    } else {
      cyc.lower = girth(g).value_or(0);
    }
  }
  return r;
}

}  // namespace gcx
