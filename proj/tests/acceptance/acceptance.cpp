// Prints one PASS/FAIL line per acceptance criterion; exit status is the
// number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "graphcombex/improvers.hpp"
#include "graphcombex/session.hpp"
#include "support/fixtures.hpp"
#include "support/mps_oracle.hpp"

using namespace gcx;
using namespace gcx::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool ok = true;
  std::string detail;
  void fail(std::string why) {
    if (ok) detail = std::move(why);
    ok = false;
  }
};

// Approximation floor bookkeeping, fed by every graph any suite touches.
struct FloorTally {
  std::size_t graphs = 0;
  std::size_t violations = 0;
  std::string first;
  void check(const Graph& g, const char* suite) {
    ++graphs;
    const auto n = g.vertex_count();
    if (n == 0) return;
    const auto floor = (n + g.max_degree()) / (g.max_degree() + 1);
    const auto got = greedy_independent_set(g).size();
    if (got < floor && violations++ == 0) {
      first = std::string(suite) + ": n=" + std::to_string(n) + " got " + std::to_string(got) + " < " +
              std::to_string(floor);
    }
  }
} g_floor;

int g_failures = 0;

void report(const char* name, const Verdict& v, double secs) {
  std::printf("%s %s (%.2fs)%s%s\n", v.ok ? "PASS" : "FAIL", name, secs, v.detail.empty() ? "" : " ",
              v.detail.c_str());
  std::fflush(stdout);
  if (!v.ok) ++g_failures;
}

// Mixed instances from all five families, sized for exhaustive or quadratic checks.
Graph mixed_graph(std::size_t i, std::uint64_t seed, std::size_t max_n) {
  Rng rng(seed, i);
  const auto pick = [&](std::size_t lo, std::size_t hi) { return lo + rng.below(hi - lo + 1); };
  GenSpec s;
  s.seed = seed * 1000 + i;
  switch (i % 6) {
    case 0:
      s.family = Family::Tree;
      s.arity = pick(1, 3);
      s.depth = pick(0, s.arity == 1 ? max_n - 1 : (s.arity == 2 ? 3 : 2));
      break;
    case 1:
      s.family = Family::UnitDisk;
      s.n = pick(1, max_n);
      s.radius = 0.1 + 0.05 * static_cast<double>(rng.below(10));
      break;
    case 2:
      s.family = Family::BarabasiAlbert;
      s.n = pick(2, max_n);
      s.attachment = pick(1, std::min<std::size_t>(4, s.n - 1));
      break;
    case 3:
      s.family = Family::GridRewire;
      s.rows = pick(1, 5);
      s.cols = pick(1, std::max<std::size_t>(1, max_n / s.rows));
      s.p_rewire = 0.1 * static_cast<double>(rng.below(6));
      break;
    case 4:
      s.family = Family::WattsStrogatz;
      s.n = pick(5, max_n);
      s.k = 2 * pick(1, 2);
      s.beta = 0.1 * static_cast<double>(rng.below(6));
      break;
    default:
      return random_gnp(pick(1, max_n), 0.05 + 0.1 * static_cast<double>(rng.below(9)), s.seed);
  }
  return generate(s);
}

void golden_sample() {
  const auto t0 = Clock::now();
  Verdict v;
  const auto g = load_col(std::string_view(kSampleGraph));
  const auto expect = [&](const char* what, double got, double want, double tol = 0) {
    if (std::fabs(got - want) > tol) v.fail(std::string(what) + "=" + std::to_string(got));
  };
  expect("triangles", static_cast<double>(triangle_count(g)), 2);
  expect("clustering", mean_clustering(g), 0.277778, 1e-6);
  expect("girth", static_cast<double>(girth(g).value_or(0)), 3);
  expect("diameter", static_cast<double>(max_component_diameter(g)), 3);

  auto r = compute_bounds(g, 1);
  ImproverConfig cfg;
  cfg.seed = 1;
  cfg.max_iterations = 1000;
  for (auto k : {JobKind::IgColouring, JobKind::IgCover, JobKind::LongestCycle}) {
    tighten_bounds(r, run_improver(k, g, cfg));
  }
  const std::pair<Problem, std::size_t> want[] = {
      {Problem::MaxClique, 3},         {Problem::ChromaticNumber, 3},  {Problem::MaxIndependentSet, 3},
      {Problem::MinCliqueCover, 3},    {Problem::MinDominatingSet, 2}, {Problem::LongestCycle, 5}};
  for (auto [p, value] : want) {
    const auto& iv = r[p];
    if (iv.lower != value || iv.upper != value) {
      v.fail(std::string(to_string(p)) + " [" + std::to_string(iv.lower) + "," + std::to_string(iv.upper) + "]");
    }
  }
  g_floor.check(g, "golden_sample");
  const double secs = seconds_since(t0);
  if (secs >= 1.0) v.fail("took " + std::to_string(secs) + "s");
  report("golden-sample", v, secs);
}

void oracle_suite() {
  const auto t0 = Clock::now();
  Verdict v;
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng(42, i);
    const auto n = 1 + rng.below(12);
    const auto g = random_gnp(n, 0.1 + 0.8 * static_cast<double>(rng.below(1000)) / 1000.0, 9000 + i);
    g_floor.check(g, "oracle");
    const auto r = compute_bounds(g, i + 1);
    const std::pair<Problem, std::size_t> truth[] = {
        {Problem::MaxClique, brute_max_clique(g)},
        {Problem::ChromaticNumber, brute_chromatic_number(g)},
        {Problem::MaxIndependentSet, brute_max_independent(g)},
        {Problem::MinCliqueCover, brute_clique_cover_number(g)},
        {Problem::MinDominatingSet, brute_domination_number(g)},
        {Problem::LongestCycle, brute_longest_cycle(g)}};
    for (auto [p, opt] : truth) {
      if (opt < r[p].lower || opt > r[p].upper) {
        v.fail("graph " + std::to_string(i) + " " + std::string(to_string(p)) + " optimum " + std::to_string(opt) +
               " outside [" + std::to_string(r[p].lower) + "," + std::to_string(r[p].upper) + "]");
      }
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 300) v.fail("took " + std::to_string(secs) + "s");
  report("oracle-suite", v, secs);
}

void validity_suite() {
  const auto t0 = Clock::now();
  Verdict v;
  std::size_t witnesses = 0;
  const auto check = [&](const Graph& g, const std::optional<Solution>& s, const std::string& where) {
    if (!s) return;
    ++witnesses;
    if (!is_valid(g, s->witness) || objective_of(s->witness) != s->objective) v.fail(where);
  };
  ImproverConfig cfg;
  cfg.max_iterations = 5;
  for (std::size_t i = 0; i < 1000; ++i) {
    const auto g = mixed_graph(i, 7, 60);
    g_floor.check(g, "validity");
    const auto tag = "graph " + std::to_string(i);
    const auto r = compute_bounds(g, i);
    for (auto p : kAllProblems) {
      check(g, r[p].lower_witness, tag + " " + std::string(to_string(p)) + " lower");
      check(g, r[p].upper_witness, tag + " " + std::string(to_string(p)) + " upper");
    }
    if (g.empty()) continue;
    cfg.seed = i;
    for (auto k : {JobKind::IgColouring, JobKind::IgCover, JobKind::RlsClique, JobKind::RlsMis,
                   JobKind::LongestCycle}) {
      const auto s = run_improver(k, g, cfg);
      check(g, s.witness, tag + " " + std::string(to_string(k)));
      check(g, s.bound_witness, tag + " " + std::string(to_string(k)) + " bound");
    }
  }
  const double secs = seconds_since(t0);
  report("validity-suite", v, secs);
  std::printf("  %zu witnesses checked\n", witnesses);
}

struct Step {
  EmitReason reason;
  std::uint64_t iterations;
  std::optional<std::size_t> best, bound;
  std::optional<Witness> witness;
  bool operator==(const Step& o) const {
    return reason == o.reason && iterations == o.iterations && best == o.best && bound == o.bound &&
           witness == o.witness;
  }
};

std::vector<Step> trace(JobKind kind, const Graph& g, const ImproverConfig& cfg) {
  std::vector<Step> out;
  run_improver(kind, g, cfg, [&](const JobSnapshot& s) {
    std::optional<Witness> w;
    if (s.witness) w = s.witness->witness;
    out.push_back({s.reason, s.iterations, s.best, s.bound, std::move(w)});
  });
  return out;
}

void monotonicity_suite() {
  const auto t0 = Clock::now();
  Verdict v;
  ImproverConfig cfg;
  cfg.max_iterations = 300;
  cfg.stop_when_closed = false;
  // Wall-clock snapshots would differ between replays.
  cfg.snapshot_period = std::chrono::hours(24);
  for (std::size_t i = 0; i < 50; ++i) {
    const auto g = random_gnp(40 + i, 0.2 + 0.01 * static_cast<double>(i), 5000 + i);
    g_floor.check(g, "monotonicity");
    cfg.seed = 100 + i;
    for (auto kind : {JobKind::IgColouring, JobKind::IgCover}) {
      const auto tag = "run " + std::to_string(i) + " " + std::string(to_string(kind));
      const auto a = trace(kind, g, cfg);
      for (std::size_t j = 1; j < a.size(); ++j) {
        if (*a[j].best > *a[j - 1].best) v.fail(tag + ": objective rose");
        if (a[j].bound < a[j - 1].bound) v.fail(tag + ": bound fell");
      }
      if (a.size() < 2 || a.back().reason != EmitReason::Final) v.fail(tag + ": malformed sequence");
      if (trace(kind, g, cfg) != a) v.fail(tag + ": replay differs");
    }
  }
  report("monotonicity-replay", v, seconds_since(t0));
}

void format_suite() {
  const auto t0 = Clock::now();
  Verdict v;
  for (std::size_t i = 0; i < 100; ++i) {
    auto g = mixed_graph(i, 31, 200);
    if (i % 3 == 0) {
      std::vector<std::string> labels(g.vertex_count());
      for (std::size_t j = 0; j < labels.size(); j += 2) labels[j] = "v" + std::to_string(j) + " label";
      g = build_graph(g.vertex_count(), g.edges(), labels);
    }
    g_floor.check(g, "format");
    const auto text = save_col(g);
    const auto back = load_col(text);
    if (!(back == g) || save_col(back) != text) v.fail("COL round trip, graph " + std::to_string(i));
  }
  for (std::size_t i = 0; i < 20; ++i) {
    const auto g = random_gnp(1 + i % 10, 0.15 + 0.04 * static_cast<double>(i), 700 + i);
    g_floor.check(g, "format");
    const auto model = parse_mps(export_domset_mps(g, false));
    const double got = solve_binary_by_enumeration(model);
    if (got != static_cast<double>(brute_domination_number(g))) v.fail("MPS graph " + std::to_string(i));
  }
  report("format-suite", v, seconds_since(t0));
}

void metrics_suite() {
  const auto t0 = Clock::now();
  Verdict v;
  for (std::size_t i = 0; i < 500; ++i) {
    const auto g = mixed_graph(i, 99, 30);
    g_floor.check(g, "metrics");
    const auto tag = "graph " + std::to_string(i);
    if (triangle_count(g) != brute_triangles(g)) v.fail(tag + " triangles");
    if (girth(g).value_or(0) != brute_girth(g)) v.fail(tag + " girth");
    if (max_component_diameter(g) != brute_diameter(g)) v.fail(tag + " diameter");
  }
  report("metrics-oracles", v, seconds_since(t0));
}

void performance() {
  {
    Verdict v;
    const auto text = save_col(gen_barabasi_albert(100'000, 3, 1));
    const auto t0 = Clock::now();
    const auto g = load_col(std::string_view(text));
    const auto stats = basic_stats(g);
    const auto clique = greedy_clique(g);
    const auto colouring = dsatur_colouring(g);
    const auto indep = greedy_independent_set(g);
    const auto dom = greedy_dominating_set(g);
    const auto cyc = longest_cycle_dfs(g, 1, {detail::default_cycle_restarts(g), std::nullopt});
    const double secs = seconds_since(t0);
    if (stats.n != 100'000 || !is_clique(g, clique.members) || !is_proper_colouring(g, colouring) ||
        !is_independent_set(g, indep.members) || !is_dominating_set(g, dom.members) || !cyc ||
        !is_cycle(g, cyc->sequence)) {
      v.fail("invalid result");
    }
    if (secs >= 60) v.fail("took " + std::to_string(secs) + "s");
    g_floor.check(g, "performance");
    report("perf-ba-100k", v, secs);
    std::printf("  omega>=%zu chi<=%zu alpha>=%zu gamma<=%zu cycle>=%zu\n", clique.size(), colouring.count,
                indep.size(), dom.size(), cyc ? cyc->length() : 0);
  }
  {
    Verdict v;
    const auto text = save_col(gen_barabasi_albert(1'000'000, 2, 1));
    const auto t0 = Clock::now();
    const auto g = load_col(std::string_view(text));
    const auto stats = basic_stats(g);
    const auto colouring = dsatur_colouring(g);
    const double secs = seconds_since(t0);
    if (stats.n != 1'000'000 || !is_proper_colouring(g, colouring)) v.fail("invalid result");
    if (secs >= 600) v.fail("took " + std::to_string(secs) + "s");
    g_floor.check(g, "performance");
    report("perf-ba-1m", v, secs);
  }
  {
    Verdict v;
    const auto t0 = Clock::now();
    const auto expect_cap = [&](const char* what, const std::function<void()>& f) {
      try {
        f();
        v.fail(std::string(what) + " accepted");
      } catch (const Error& e) {
        if (e.code() != ErrorCode::CapExceeded) v.fail(std::string(what) + ": " + e.what());
      }
    };
    const Limits defaults;
    if (defaults.vertex_cap != 5'000'000) v.fail("default cap " + std::to_string(defaults.vertex_cap));
    expect_cap("COL header", [] { load_col(std::string_view("p edge 5000001 0\n")); });
    expect_cap("generator", [] { gen_barabasi_albert(5'000'001, 2, 1); });
    try {
      load_col(std::string_view("p edge 5000000 0\n"));
    } catch (const Error& e) {
      v.fail(std::string("at cap: ") + e.what());
    }
    report("vertex-cap", v, seconds_since(t0));
  }
}

}  // namespace

int main() {
  golden_sample();
  oracle_suite();
  validity_suite();
  monotonicity_suite();
  format_suite();
  metrics_suite();
  performance();
  Verdict floor;
  if (g_floor.violations) floor.fail(std::to_string(g_floor.violations) + " violations; first " + g_floor.first);
  report("approximation-floor", floor, 0.0);
  std::printf("  %zu graphs checked\n", g_floor.graphs);
  return g_failures;
}
