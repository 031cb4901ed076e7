#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <stop_token>
#include <string>
#include <string_view>
#include <vector>

#include "heuristics.hpp"
#include "kernels.hpp"
#include "metrics.hpp"
#include "progress.hpp"
#include "rng.hpp"
#include "solution.hpp"

namespace gcx {

enum class JobKind {
  IgColouring,
  IgCover,
  RlsClique,
  RlsMis,
  LongestCycle,
  TriangleCount,
  Clustering,
  Girth,
  Diameter,
};

inline constexpr std::array<JobKind, 9> kAllJobKinds = {
    JobKind::IgColouring,   JobKind::IgCover,    JobKind::RlsClique,
    JobKind::RlsMis,        JobKind::LongestCycle, JobKind::TriangleCount,
    JobKind::Clustering,    JobKind::Girth,      JobKind::Diameter};

constexpr std::string_view to_string(JobKind k) {
  switch (k) {
    case JobKind::IgColouring: return "ig-colouring";
    case JobKind::IgCover: return "ig-cover";
    case JobKind::RlsClique: return "rls-clique";
    case JobKind::RlsMis: return "rls-mis";
    case JobKind::LongestCycle: return "longest-cycle";
    case JobKind::TriangleCount: return "triangle-count";
    case JobKind::Clustering: return "clustering";
    case JobKind::Girth: return "girth";
    case JobKind::Diameter: return "diameter";
  }
  return "unknown";
}

inline std::optional<JobKind> parse_job_kind(std::string_view s) {
  for (auto k : kAllJobKinds)
    if (to_string(k) == s) return k;
  if (s == "ig-coloring") return JobKind::IgColouring;
  return std::nullopt;
}

/// Minimisation jobs report a shrinking objective; everything else grows.
constexpr bool minimising(JobKind k) { return k == JobKind::IgColouring || k == JobKind::IgCover; }

/// Metric jobs carry a value and a progress fraction instead of an objective.
constexpr bool is_metric_job(JobKind k) {
  return k == JobKind::TriangleCount || k == JobKind::Clustering || k == JobKind::Girth ||
         k == JobKind::Diameter;
}

enum class JobStatus { Running, Done, Cancelled, Failed };

constexpr std::string_view to_string(JobStatus s) {
  switch (s) {
    case JobStatus::Running: return "running";
    case JobStatus::Done: return "done";
    case JobStatus::Cancelled: return "cancelled";
    case JobStatus::Failed: return "failed";
  }
  return "unknown";
}

enum class EmitReason { Start, Improvement, Periodic, Final };

constexpr std::string_view to_string(EmitReason r) {
  switch (r) {
    case EmitReason::Start: return "start";
    case EmitReason::Improvement: return "improvement";
    case EmitReason::Periodic: return "periodic";
    case EmitReason::Final: return "final";
  }
  return "unknown";
}

struct ImproverConfig {
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> max_iterations = 1000;
  std::optional<std::chrono::milliseconds> max_time;
  std::chrono::milliseconds snapshot_period{500};
  // Class reordering mix for iterated greedy.
  double reverse_weight = 0.5;
  double random_weight = 0.3;
  double size_weight = 0.2;
  // Move-to-front mutations of the companion RLS per IG iteration.
  std::uint64_t rls_jumps = 64;
  // IG jobs stop early once their two bounds meet.
  bool stop_when_closed = true;

  void validate() const {
    if (!max_iterations && !max_time) {
      throw Error(ErrorCode::InvalidParameters, "need max_iterations or max_time");
    }
    if (reverse_weight < 0 || random_weight < 0 || size_weight < 0 ||
        !(reverse_weight + random_weight + size_weight > 0)) {
      throw Error(ErrorCode::InvalidParameters, "reorder weights must be >= 0 with a positive sum");
    }
  }
};

struct JobSnapshot {
  std::string job_id;
  JobKind kind = JobKind::IgColouring;
  JobStatus status = JobStatus::Running;
  EmitReason reason = EmitReason::Start;
  std::optional<std::size_t> best;  // primary objective
  std::optional<Solution> witness;
  std::optional<std::size_t> bound;  // clique for ig-colouring, independent set for ig-cover
  std::optional<Solution> bound_witness;
  std::optional<double> value;  // metric jobs
  std::string note;
  std::uint64_t iterations = 0;
  double elapsed_ms = 0.0;
  double progress = 0.0;
  std::string error;
};

using SnapshotSink = std::function<void(const JobSnapshot&)>;

// --- order-based randomised local search -------------------------------------

enum class DecodeMode { Clique, Independent };

/// Keeps a vertex permutation whose greedy decode is a clique or an
/// independent set. A step moves one uniform vertex to the front and keeps
/// the new order if the decoded set is at least as large.
class OrderRls {
 public:
  OrderRls(const Graph& g, DecodeMode mode, std::vector<Vertex> order)
      : g_(g), mode_(mode), order_(std::move(order)), pos_(g.vertex_count()), blocked_(g.vertex_count(), 0) {
    check_permutation(g, order_);
    for (std::size_t i = 0; i < order_.size(); ++i) pos_[order_[i]] = i;
    decode(best_);
  }

  std::size_t size() const noexcept { return best_.size(); }
  const std::vector<Vertex>& members() const noexcept { return best_; }

  VertexSet solution() const {
    VertexSet s{mode_ == DecodeMode::Clique ? SetKind::Clique : SetKind::IndependentSet, best_};
    std::sort(s.members.begin(), s.members.end());
    return s;
  }

  /// Returns true when the step strictly enlarged the set.
  bool step(Rng& rng) {
    if (order_.size() < 2) return false;
    const auto i = rng.below(order_.size());
    if (i == 0) return false;
    move_to_front(i);
    decode(trial_);
    if (trial_.size() >= best_.size()) {
      const bool grew = trial_.size() > best_.size();
      best_.swap(trial_);
      return grew;
    }
    undo_move(i);
    return false;
  }

 private:
  void move_to_front(std::size_t i) {
    std::rotate(order_.begin(), order_.begin() + static_cast<std::ptrdiff_t>(i),
                order_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    for (std::size_t j = 0; j <= i; ++j) pos_[order_[j]] = j;
  }
  void undo_move(std::size_t i) {
    std::rotate(order_.begin(), order_.begin() + 1, order_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    for (std::size_t j = 0; j <= i; ++j) pos_[order_[j]] = j;
  }

  void decode(std::vector<Vertex>& out) {
    out.clear();
    if (order_.empty()) return;
    if (mode_ == DecodeMode::Clique) {
      // Only neighbours of the first vertex can join, in permutation order.
      const Vertex head = order_.front();
      out.push_back(head);
      cand_.assign(g_.neighbours(head).begin(), g_.neighbours(head).end());
      std::sort(cand_.begin(), cand_.end(), [&](Vertex a, Vertex b) { return pos_[a] < pos_[b]; });
      for (Vertex v : cand_) {
        const bool fits = std::all_of(out.begin() + 1, out.end(), [&](Vertex u) { return g_.adjacent(u, v); });
        if (fits) out.push_back(v);
      }
      return;
    }
    ++stamp_;
    if (stamp_ == 0) {
      std::fill(blocked_.begin(), blocked_.end(), 0);
      stamp_ = 1;
    }
    for (Vertex v : order_) {
      if (blocked_[v] == stamp_) continue;
      out.push_back(v);
      for (Vertex w : g_.neighbours(v)) blocked_[w] = stamp_;
    }
  }

  const Graph& g_;
  DecodeMode mode_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> pos_;
  std::vector<std::uint32_t> blocked_;
  std::uint32_t stamp_ = 0;
  std::vector<Vertex> best_, trial_, cand_;
};

namespace detail {

// Greedy clique members first, then everything else by descending degree.
inline std::vector<Vertex> clique_seed_order(const Graph& g) {
  std::vector<Vertex> order;
  if (g.empty()) return order;
  const auto seed = greedy_clique(g);
  std::vector<char> used(g.vertex_count(), 0);
  for (Vertex v : seed.members) {
    order.push_back(v);
    used[v] = 1;
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!used[v]) rest.push_back(v);
  std::stable_sort(rest.begin(), rest.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  order.insert(order.end(), rest.begin(), rest.end());
  return order;
}

// Greedy independent set first, then everything else by ascending degree.
inline std::vector<Vertex> independent_seed_order(const Graph& g) {
  const auto seed = greedy_independent_set(g);
  std::vector<char> used(g.vertex_count(), 0);
  std::vector<Vertex> order;
  for (Vertex v : seed.members) {
    order.push_back(v);
    used[v] = 1;
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!used[v]) rest.push_back(v);
  std::stable_sort(rest.begin(), rest.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  order.insert(order.end(), rest.begin(), rest.end());
  return order;
}

enum class Reorder { Reverse, Random, SizeDescending };

inline Reorder pick_reorder(const ImproverConfig& cfg, Rng& rng) {
  const double x = rng.uniform() * (cfg.reverse_weight + cfg.random_weight + cfg.size_weight);
  if (x < cfg.reverse_weight) return Reorder::Reverse;
  if (x < cfg.reverse_weight + cfg.random_weight) return Reorder::Random;
  return Reorder::SizeDescending;
}

// Reorders whole classes and concatenates them into the next permutation.
inline std::vector<Vertex> reorder_classes(std::vector<std::vector<Vertex>> classes, Reorder how, Rng& rng) {
  switch (how) {
    case Reorder::Reverse: std::reverse(classes.begin(), classes.end()); break;
    case Reorder::Random: rng.shuffle(std::span(classes)); break;
    case Reorder::SizeDescending:
      std::stable_sort(classes.begin(), classes.end(),
                       [](const auto& a, const auto& b) { return a.size() > b.size(); });
      break;
  }
  std::vector<Vertex> order;
  for (const auto& c : classes) order.insert(order.end(), c.begin(), c.end());
  return order;
}

// Colour classes with members kept in permutation order.
inline std::vector<std::vector<Vertex>> classes_in_order(const Colouring& c, std::span<const Vertex> order) {
  std::vector<std::vector<Vertex>> out(c.count);
  for (Vertex v : order) out[c.colour[v]].push_back(v);
  return out;
}

/// Bookkeeping shared by every anytime loop: budgets, cancellation,
/// snapshot emission.
class Runner {
 public:
  using Clock = std::chrono::steady_clock;

  Runner(JobKind kind, const ImproverConfig& cfg, const SnapshotSink& emit, std::stop_token stop)
      : cfg_(cfg), emit_(emit), stop_(std::move(stop)), started_(Clock::now()), last_emit_(started_) {
    snap_.kind = kind;
  }

  JobSnapshot& snap() { return snap_; }
  const std::stop_token& stop_token() const { return stop_; }

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - started_).count();
  }

  /// False once a budget is spent or cancellation is requested.
  bool keep_going() {
    if (stop_.stop_requested()) {
      cancelled_ = true;
      return false;
    }
    if (cfg_.max_iterations && snap_.iterations >= *cfg_.max_iterations) return false;
    if (cfg_.max_time && Clock::now() - started_ >= *cfg_.max_time) return false;
    return true;
  }

  void update_progress() {
    double p = 0.0;
    if (cfg_.max_iterations && *cfg_.max_iterations > 0) {
      p = static_cast<double>(snap_.iterations) / static_cast<double>(*cfg_.max_iterations);
    }
    if (cfg_.max_time && cfg_.max_time->count() > 0) {
      p = std::max(p, elapsed_ms() / static_cast<double>(cfg_.max_time->count()));
    }
    snap_.progress = std::min(1.0, p);
  }

  void emit(EmitReason why) {
    snap_.reason = why;
    snap_.elapsed_ms = elapsed_ms();
    last_emit_ = Clock::now();
    if (emit_) emit_(snap_);
  }

  /// Emits a periodic snapshot if the period has elapsed.
  void tick() {
    if (Clock::now() - last_emit_ >= cfg_.snapshot_period) {
      update_progress();
      emit(EmitReason::Periodic);
    }
  }

  JobSnapshot finish() {
    if (stop_.stop_requested()) cancelled_ = true;
    snap_.status = cancelled_ ? JobStatus::Cancelled : JobStatus::Done;
    if (!cancelled_) snap_.progress = 1.0;
    emit(EmitReason::Final);
    return snap_;
  }

 private:
  const ImproverConfig& cfg_;
  const SnapshotSink& emit_;
  std::stop_token stop_;
  Clock::time_point started_;
  Clock::time_point last_emit_;
  JobSnapshot snap_;
  bool cancelled_ = false;
};

inline Solution make_solution(Witness w, std::string_view algorithm, double ms) {
  const auto obj = objective_of(w);
  return {std::move(w), obj, std::string(algorithm), ms};
}

}  // namespace detail

/// Iterated greedy colouring: regroup the current colour classes, greedily
/// recolour in the concatenated order, repeat. The colour count can never go
/// up. A move-to-front RLS clique runs alongside and supplies the lower bound.
inline JobSnapshot ig_colouring(const Graph& g, const ImproverConfig& cfg, const SnapshotSink& emit = {},
                                std::stop_token stop = {}) {
  cfg.validate();
  detail::Runner run(JobKind::IgColouring, cfg, emit, stop);
  auto& snap = run.snap();
  if (g.empty()) {
    snap.best = 0;
    snap.bound = 0;
    return run.finish();
  }
  Rng rng(cfg.seed, streams::improver);
  Colouring current = dsatur_colouring(g);
  std::vector<Vertex> order(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return current.colour[a] < current.colour[b]; });
  OrderRls clique(g, DecodeMode::Clique, detail::clique_seed_order(g));

  const auto publish_colouring = [&] {
    snap.best = current.count;
    snap.witness = detail::make_solution(current, "ig-colouring", run.elapsed_ms());
  };
  const auto publish_clique = [&] {
    snap.bound = clique.size();
    snap.bound_witness = detail::make_solution(clique.solution(), "rls-clique", run.elapsed_ms());
  };
  publish_colouring();
  publish_clique();
  run.emit(EmitReason::Start);

  while (!(cfg.stop_when_closed && *snap.bound == *snap.best) && run.keep_going()) {
    order = detail::reorder_classes(detail::classes_in_order(current, order), detail::pick_reorder(cfg, rng), rng);
    Colouring next = greedy_colouring_constructive(g, order);
    if (next.count > current.count) throw std::logic_error("iterated greedy increased the colour count");
    const bool better = next.count < current.count;
    current = std::move(next);

    bool grew = false;
    for (std::uint64_t j = 0; j < cfg.rls_jumps; ++j) grew |= clique.step(rng);
    ++snap.iterations;
    if (better) publish_colouring();
    if (grew) publish_clique();
    if (better || grew) {
      run.update_progress();
      run.emit(EmitReason::Improvement);
    } else {
      run.tick();
    }
  }
  return run.finish();
}

/// Iterated greedy clique covering with an interleaved RLS independent set;
/// the same scheme as ig_colouring on the complement.
inline JobSnapshot ig_clique_cover_with_rls_mis(const Graph& g, const ImproverConfig& cfg,
                                                const SnapshotSink& emit = {}, std::stop_token stop = {}) {
  cfg.validate();
  detail::Runner run(JobKind::IgCover, cfg, emit, stop);
  auto& snap = run.snap();
  if (g.empty()) {
    snap.best = 0;
    snap.bound = 0;
    return run.finish();
  }
  Rng rng(cfg.seed, streams::improver);
  CliqueCover current = greedy_cover_constructive(g, detail::identity_order(g.vertex_count()));
  OrderRls indep(g, DecodeMode::Independent, detail::independent_seed_order(g));

  const auto publish_cover = [&] {
    snap.best = current.size();
    snap.witness = detail::make_solution(current, "ig-clique-cover", run.elapsed_ms());
  };
  const auto publish_indep = [&] {
    snap.bound = indep.size();
    snap.bound_witness = detail::make_solution(indep.solution(), "rls-independent-set", run.elapsed_ms());
  };
  publish_cover();
  publish_indep();
  run.emit(EmitReason::Start);

  while (!(cfg.stop_when_closed && *snap.bound == *snap.best) && run.keep_going()) {
    const auto order = detail::reorder_classes(current.classes, detail::pick_reorder(cfg, rng), rng);
    CliqueCover next = greedy_cover_constructive(g, order);
    if (next.size() > current.size()) throw std::logic_error("iterated greedy increased the cover size");
    const bool better = next.size() < current.size();
    current = std::move(next);

    bool grew = false;
    for (std::uint64_t j = 0; j < cfg.rls_jumps; ++j) grew |= indep.step(rng);
    ++snap.iterations;
    if (better) publish_cover();
    if (grew) publish_indep();
    if (better || grew) {
      run.update_progress();
      run.emit(EmitReason::Improvement);
    } else {
      run.tick();
    }
  }
  return run.finish();
}

namespace detail {
inline JobSnapshot rls_job(JobKind kind, DecodeMode mode, const Graph& g, const ImproverConfig& cfg,
                           const SnapshotSink& emit, std::stop_token stop) {
  cfg.validate();
  Runner run(kind, cfg, emit, stop);
  auto& snap = run.snap();
  if (g.empty()) {
    snap.best = 0;
    return run.finish();
  }
  const auto algorithm = mode == DecodeMode::Clique ? "rls-clique" : "rls-independent-set";
  Rng rng(cfg.seed, streams::improver);
  OrderRls rls(g, mode, mode == DecodeMode::Clique ? clique_seed_order(g) : independent_seed_order(g));
  const auto publish = [&] {
    snap.best = rls.size();
    snap.witness = make_solution(rls.solution(), algorithm, run.elapsed_ms());
  };
  publish();
  run.emit(EmitReason::Start);
  // One iteration is one mutation.
  while (run.keep_going()) {
    const bool grew = rls.step(rng);
    ++snap.iterations;
    if (grew) {
      publish();
      run.update_progress();
      run.emit(EmitReason::Improvement);
    } else if ((snap.iterations & 0x3ff) == 0) {
      run.tick();
    }
  }
  return run.finish();
}
}  // namespace detail

/// Order-based RLS for a large clique; iterations count mutations.
inline JobSnapshot rls_clique(const Graph& g, const ImproverConfig& cfg, const SnapshotSink& emit = {},
                              std::stop_token stop = {}) {
  return detail::rls_job(JobKind::RlsClique, DecodeMode::Clique, g, cfg, emit, std::move(stop));
}

/// Order-based RLS for a large independent set; iterations count mutations.
inline JobSnapshot rls_mis(const Graph& g, const ImproverConfig& cfg, const SnapshotSink& emit = {},
                           std::stop_token stop = {}) {
  return detail::rls_job(JobKind::RlsMis, DecodeMode::Independent, g, cfg, emit, std::move(stop));
}

/// Repeated DFS restarts; one restart per iteration. Stops early on a
/// Hamiltonian cycle.
inline JobSnapshot longest_cycle_job(const Graph& g, const ImproverConfig& cfg, const SnapshotSink& emit = {},
                                     std::stop_token stop = {}) {
  cfg.validate();
  detail::Runner run(JobKind::LongestCycle, cfg, emit, stop);
  auto& snap = run.snap();
  snap.best = 0;
  DfsCycleSearch search(g, cfg.seed);
  run.emit(EmitReason::Start);
  if (!search.cyclic()) {
    snap.note = "acyclic";
    return run.finish();
  }
  while (!(snap.best == g.vertex_count()) && run.keep_going()) {
    const bool grew = search.restart(run.stop_token());
    ++snap.iterations;
    if (grew) {
      snap.best = search.best()->length();
      snap.witness = detail::make_solution(*search.best(), "dfs-longest-cycle", run.elapsed_ms());
      run.update_progress();
      run.emit(EmitReason::Improvement);
    } else {
      run.tick();
    }
  }
  return run.finish();
}

/// One of the on-demand metrics as a cancellable job. The snapshot carries
/// the value when done, and a progress fraction meanwhile.
inline JobSnapshot metric_job(JobKind kind, const Graph& g, const ImproverConfig& cfg,
                              const SnapshotSink& emit = {}, std::stop_token stop = {}) {
  if (!is_metric_job(kind)) throw Error(ErrorCode::InvalidParameters, "not a metric job");
  detail::Runner run(kind, cfg, emit, stop);
  auto& snap = run.snap();
  run.emit(EmitReason::Start);
  Progress progress{stop, [&](double f) {
                      snap.progress = f;
                      run.tick();
                    }};
  try {
    switch (kind) {
      case JobKind::TriangleCount: snap.value = static_cast<double>(triangle_count(g, progress)); break;
      case JobKind::Clustering: snap.value = mean_clustering(g, progress); break;
      case JobKind::Girth: {
        const auto gi = girth(g, progress);
        if (gi) {
          snap.value = static_cast<double>(*gi);
        } else {
          snap.note = "acyclic";
        }
        break;
      }
      case JobKind::Diameter: snap.value = static_cast<double>(max_component_diameter(g, progress)); break;
      default: break;
    }
    snap.iterations = 1;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Cancelled) throw;
  }
  return run.finish();
}

/// Dispatches any job kind synchronously.
inline JobSnapshot run_improver(JobKind kind, const Graph& g, const ImproverConfig& cfg,
                                const SnapshotSink& emit = {}, std::stop_token stop = {}) {
  switch (kind) {
    case JobKind::IgColouring: return ig_colouring(g, cfg, emit, std::move(stop));
    case JobKind::IgCover: return ig_clique_cover_with_rls_mis(g, cfg, emit, std::move(stop));
    case JobKind::RlsClique: return rls_clique(g, cfg, emit, std::move(stop));
    case JobKind::RlsMis: return rls_mis(g, cfg, emit, std::move(stop));
    case JobKind::LongestCycle: return longest_cycle_job(g, cfg, emit, std::move(stop));
    default: return metric_job(kind, g, cfg, emit, std::move(stop));
  }
}

}  // namespace gcx
