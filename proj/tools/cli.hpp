#pragma once

// The gcx command-line front end. run() takes argv-style arguments and the
// output streams so tests can drive it in-process.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "graphcombex/formats.hpp"
#include "graphcombex/generators.hpp"
#include "graphcombex/heuristics.hpp"
#include "graphcombex/improvers.hpp"
#include "graphcombex/json_io.hpp"
#include "graphcombex/layouts.hpp"
#include "graphcombex/metrics.hpp"
#include "graphcombex/service.hpp"
#include "graphcombex/session.hpp"

namespace gcx::cli {

inline int exit_code(const Error& e) {
  switch (e.category()) {
    case ErrorCategory::Parse: return 2;
    case ErrorCategory::Cap: return 3;
    case ErrorCategory::Runtime: return 4;
  }
  return 4;
}

namespace detail {

inline std::string read_file(const std::string& path) {
  if (path == "-") return gcx::detail::read_all(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return gcx::detail::read_all(in);
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

inline Graph load_graph(const std::string& path, const std::string& format, const Limits& limits) {
  auto fmt = format;
  if (fmt.empty()) fmt = ends_with(path, ".gml") ? "gml" : (ends_with(path, ".json") ? "gen" : "col");
  return load_any(read_file(path), fmt, limits).graph;
}

// Writes to the named file, or to `out` when the path is empty or "-".
inline void write_output(const std::string& path, std::string_view text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed for " + path);
}

inline std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

enum class SolveProblem { Clique, Chromatic, IndependentSet, CliqueCover, DominatingSet, Cycle };

struct ProblemInfo {
  SolveProblem id;
  std::string_view name;
  std::string_view symbol;
  Problem bounds_row;
  bool maximise;
};

inline constexpr ProblemInfo kProblems[] = {
    {SolveProblem::Clique, "clique", "ω", Problem::MaxClique, true},
    {SolveProblem::Chromatic, "chromatic", "χ", Problem::ChromaticNumber, false},
    {SolveProblem::IndependentSet, "independent-set", "α", Problem::MaxIndependentSet, true},
    {SolveProblem::CliqueCover, "clique-cover", "θ", Problem::MinCliqueCover, false},
    {SolveProblem::DominatingSet, "domset", "γ", Problem::MinDominatingSet, false},
    {SolveProblem::Cycle, "cycle", "c", Problem::LongestCycle, true},
};

inline const ProblemInfo& problem_info(std::string_view s) {
  static const std::map<std::string_view, SolveProblem> alias{
      {"clique", SolveProblem::Clique},
      {"max-clique", SolveProblem::Clique},
      {"chromatic", SolveProblem::Chromatic},
      {"colouring", SolveProblem::Chromatic},
      {"coloring", SolveProblem::Chromatic},
      {"independent-set", SolveProblem::IndependentSet},
      {"mis", SolveProblem::IndependentSet},
      {"clique-cover", SolveProblem::CliqueCover},
      {"cover", SolveProblem::CliqueCover},
      {"domset", SolveProblem::DominatingSet},
      {"dominating-set", SolveProblem::DominatingSet},
      {"cycle", SolveProblem::Cycle},
      {"longest-cycle", SolveProblem::Cycle},
  };
  const auto it = alias.find(s);
  if (it == alias.end()) throw Error(ErrorCode::InvalidParameters, "unknown problem '" + std::string(s) + "'");
  for (const auto& p : kProblems)
    if (p.id == it->second) return p;
  throw Error(ErrorCode::InvalidParameters, "unknown problem");
}

// Witness as space-separated 1-based ids; colourings list each vertex's
// colour, clique covers separate classes with " | ".
inline std::string witness_text(const Witness& w) {
  std::string out;
  const auto ids = [&](std::span<const Vertex> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(std::size_t{vs[i]} + 1);
    }
  };
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, VertexSet>) {
          ids(x.members);
        } else if constexpr (std::is_same_v<T, Colouring>) {
          for (std::size_t v = 0; v < x.colour.size(); ++v) {
            if (v) out += ' ';
            out += std::to_string(x.colour[v]);
          }
        } else if constexpr (std::is_same_v<T, CliqueCover>) {
          for (std::size_t c = 0; c < x.classes.size(); ++c) {
            if (c) out += " | ";
            ids(x.classes[c]);
          }
        } else {
          ids(x.sequence);
        }
      },
      w);
  return out;
}

inline std::optional<JobKind> improver_for(SolveProblem p) {
  switch (p) {
    case SolveProblem::Clique:
    case SolveProblem::Chromatic: return JobKind::IgColouring;
    case SolveProblem::IndependentSet:
    case SolveProblem::CliqueCover: return JobKind::IgCover;
    case SolveProblem::Cycle: return JobKind::LongestCycle;
    case SolveProblem::DominatingSet: return std::nullopt;
  }
  return std::nullopt;
}

// The number the progress line reports: for IG jobs the side the problem
// asks about.
inline std::size_t progress_value(SolveProblem p, const JobSnapshot& s) {
  const bool bound_side = p == SolveProblem::Clique || p == SolveProblem::IndependentSet;
  if (bound_side && s.bound) return *s.bound;
  return s.best.value_or(0);
}

inline std::string bounds_table(const BoundsReport& r, bool csv) {
  std::string out;
  if (csv) {
    out = "problem,lower,upper,closed\n";
    for (auto p : kAllProblems) {
      const auto& iv = r[p];
      out += std::string(to_string(p)) + ',' + std::to_string(iv.lower) + ',' + std::to_string(iv.upper) + ',' +
             (iv.closed() ? "yes" : "no") + '\n';
    }
    return out;
  }
  std::size_t wl = 5, wu = 5;
  for (const auto& iv : r.intervals) {
    wl = std::max(wl, std::to_string(iv.lower).size());
    wu = std::max(wu, std::to_string(iv.upper).size());
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-20s %*s %-*s\n", "problem", static_cast<int>(wl), "lower", static_cast<int>(wu),
                "upper");
  out += buf;
  // Numbers right-aligned to their widest entry.
  std::size_t nl = 1, nu = 1;
  for (const auto& iv : r.intervals) {
    nl = std::max(nl, std::to_string(iv.lower).size());
    nu = std::max(nu, std::to_string(iv.upper).size());
  }
  for (auto p : kAllProblems) {
    const auto& iv = r[p];
    std::snprintf(buf, sizeof buf, "%-20s %*s%*zu %*zu%s\n", std::string(to_string(p)).c_str(),
                  static_cast<int>(wl - nl), "", static_cast<int>(nl), iv.lower, static_cast<int>(nu), iv.upper,
                  iv.closed() ? "  closed" : "");
    out += buf;
  }
  return out;
}

}  // namespace detail

/// Entry point; returns the process exit status.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"gcx: graph exploration, bounds and heuristics"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Limits limits;
  app.add_option("--vertex-cap", limits.vertex_cap, "Refuse graphs with more vertices")->capture_default_str();
  app.add_option("--matrix-cap", limits.matrix_export_cap, "Largest graph for matrix exports")->capture_default_str();
  app.add_option("--layout-cap", limits.layout_cap, "Largest graph for layouts")->capture_default_str();
  std::string in_format;
  app.add_option("--format", in_format, "Input format: col, gml or gen (default: by extension)");

  std::function<void()> action;

  // stats
  auto* stats = app.add_subcommand("stats", "Basic statistics and on-demand metrics");
  std::string stats_file;
  bool with_tri = false, with_clu = false, with_girth = false, with_diam = false, basic_only = false, stats_json = false;
  stats->add_option("file", stats_file, "Graph file")->required();
  stats->add_flag("--with-triangles", with_tri, "Triangle count");
  stats->add_flag("--with-clustering", with_clu, "Mean clustering coefficient");
  stats->add_flag("--with-girth", with_girth, "Girth");
  stats->add_flag("--with-diameter", with_diam, "Largest component diameter");
  stats->add_flag("--basic", basic_only, "Only the linear-time statistics");
  stats->add_flag("--json", stats_json, "JSON output");
  stats->callback([&] {
    action = [&] {
      const auto g = detail::load_graph(stats_file, in_format, limits);
      // No --with flag means every metric.
      const bool any = with_tri || with_clu || with_girth || with_diam;
      const bool all = !basic_only && !any;
      Json j = to_json(basic_stats(g));
      if (all || with_tri) j["triangles"] = triangle_count(g);
      if (all || with_clu) j["mean_clustering"] = mean_clustering(g);
      if (all || with_girth) {
        const auto gi = girth(g);
        j["girth"] = gi ? Json(*gi) : Json(nullptr);
      }
      if (all || with_diam) j["diameter"] = g.empty() ? Json(nullptr) : Json(max_component_diameter(g));
      if (stats_json) {
        out << j.dump(2) << '\n';
        return;
      }
      for (const auto& key : {"n", "m", "components", "density", "min_degree", "max_degree", "mean_degree",
                              "stddev_degree", "triangles", "mean_clustering", "girth", "diameter"}) {
        if (!j.contains(key)) continue;
        const auto& v = j[key];
        out << key << ' ';
        if (v.is_null()) {
          out << (std::string_view(key) == "girth" ? "acyclic" : "none");
        } else if (v.is_number_float()) {
          out << detail::fmt_double(v.get<double>());
        } else {
          out << v.dump();
        }
        out << '\n';
      }
    };
  });

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  GenSpec spec;
  std::string family, gen_out;
  gen->add_option("family", family, "tree | unit-disk | barabasi-albert | grid-rewire | watts-strogatz")->required();
  gen->add_option("--arity", spec.arity, "Tree arity")->capture_default_str();
  gen->add_option("--depth", spec.depth, "Tree depth")->capture_default_str();
  gen->add_option("--n", spec.n, "Vertex count")->capture_default_str();
  gen->add_option("--radius", spec.radius, "Unit-disk radius")->capture_default_str();
  gen->add_option("--attachment,--m", spec.attachment, "Edges per new vertex")->capture_default_str();
  gen->add_option("--rows", spec.rows, "Grid rows")->capture_default_str();
  gen->add_option("--cols", spec.cols, "Grid columns")->capture_default_str();
  gen->add_option("--p", spec.p_rewire, "Grid rewiring probability")->capture_default_str();
  gen->add_option("--k", spec.k, "Ring degree")->capture_default_str();
  gen->add_option("--beta", spec.beta, "Ring rewiring probability")->capture_default_str();
  gen->add_option("--seed", spec.seed, "Random seed")->capture_default_str();
  gen->add_option("-o,--output", gen_out, "Output COL file (default stdout)");
  gen->callback([&] {
    action = [&] {
      const auto fam = parse_family(family);
      if (!fam) throw Error(ErrorCode::InvalidParameters, "unknown family '" + family + "'");
      spec.family = *fam;
      detail::write_output(gen_out, save_col(generate(spec, limits)), out);
    };
  });

  // transform
  auto* tr = app.add_subcommand("transform", "complement | prune-leaves | largest-component | shortcut");
  std::string tr_kind, tr_in, tr_out;
  std::size_t tr_k = 2;
  tr->add_option("kind", tr_kind, "Transform")->required();
  tr->add_option("input", tr_in, "Input graph")->required();
  tr->add_option("--k", tr_k, "Shortcut distance")->capture_default_str();
  tr->add_option("-o,--output", tr_out, "Output COL file (default stdout)");
  tr->callback([&] {
    action = [&] {
      const auto kind = parse_transform_kind(tr_kind);
      if (!kind) throw Error(ErrorCode::InvalidParameters, "unknown transform '" + tr_kind + "'");
      const auto g = detail::load_graph(tr_in, in_format, limits);
      detail::write_output(tr_out, save_col(apply_transform(g, *kind, tr_k, limits).graph), out);
    };
  });

  // solve
  auto* solve = app.add_subcommand("solve", "Bound one problem, optionally improving with an anytime job");
  std::string problem, solve_file;
  bool improve = false, solve_csv = false;
  std::uint64_t iters = 1000, solve_seed = 1;
  double seconds = 0;
  solve->add_option("problem", problem, "clique | chromatic | independent-set | clique-cover | domset | cycle")
      ->required();
  solve->add_option("file", solve_file, "Graph file")->required();
  solve->add_flag("--improve", improve, "Run the matching improver");
  solve->add_option("--iters", iters, "Improver iteration budget")->capture_default_str();
  solve->add_option("--time", seconds, "Improver time budget in seconds (0: none)");
  solve->add_option("--seed", solve_seed, "Random seed")->capture_default_str();
  solve->add_flag("--csv", solve_csv, "CSV output");
  solve->callback([&] {
    action = [&] {
      const auto& info = detail::problem_info(problem);
      const auto g = detail::load_graph(solve_file, in_format, limits);
      auto report = compute_bounds(g, solve_seed);
      if (improve) {
        const auto kind = detail::improver_for(info.id);
        if (!kind) {
          err << "no improver for " << info.name << "; constructive bounds only\n";
        } else {
          ImproverConfig cfg;
          cfg.seed = solve_seed;
          cfg.max_iterations = iters;
          if (seconds > 0) cfg.max_time = std::chrono::milliseconds(static_cast<std::int64_t>(seconds * 1000));
          err << "iter,best,elapsed_ms\n";
          const auto last = run_improver(*kind, g, cfg, [&](const JobSnapshot& s) {
            err << s.iterations << ',' << detail::progress_value(info.id, s) << ','
                << detail::fmt_double(s.elapsed_ms) << '\n';
          });
          tighten_bounds(report, last);
        }
      }
      const auto& iv = report[info.bounds_row];
      const auto& w = info.maximise ? iv.lower_witness : iv.upper_witness;
      if (solve_csv) {
        out << "problem,lower,upper,witness\n"
            << info.name << ',' << iv.lower << ',' << iv.upper << ",\"" << (w ? detail::witness_text(w->witness) : "")
            << "\"\n";
      } else {
        out << info.name << ' ' << iv.lower << " ≤ " << info.symbol << " ≤ " << iv.upper << '\n';
        if (w) out << "witness " << detail::witness_text(w->witness) << '\n';
      }
    };
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Interval table for all six problems");
  std::string bounds_file;
  bool bounds_csv = false;
  std::uint64_t bounds_seed = 1;
  bounds->add_option("file", bounds_file, "Graph file")->required();
  bounds->add_flag("--csv", bounds_csv, "CSV output");
  bounds->add_option("--seed", bounds_seed, "Random seed")->capture_default_str();
  bounds->callback([&] {
    action = [&] {
      const auto g = detail::load_graph(bounds_file, in_format, limits);
      out << detail::bounds_table(compute_bounds(g, bounds_seed), bounds_csv);
    };
  });

  // layout
  auto* lay = app.add_subcommand("layout", "radial | grid | tree | circular | cycle-outer");
  std::string lay_kind, lay_file, lay_out, lay_format = "svg";
  bool lay_colouring = false, lay_cycle = false, lay_labels = false;
  std::uint64_t lay_seed = 1;
  lay->add_option("kind", lay_kind, "Layout kind")->required();
  lay->add_option("file", lay_file, "Graph file")->required();
  lay->add_option("-o,--output", lay_out, "Output file (default stdout)");
  lay->add_flag("--colouring,--coloring", lay_colouring, "Fill vertices by a DSATUR colouring");
  lay->add_flag("--cycle", lay_cycle, "Highlight the longest cycle found");
  lay->add_flag("--labels", lay_labels, "Draw vertex labels");
  lay->add_option("--as", lay_format, "svg | json | csv")->capture_default_str();
  lay->add_option("--seed", lay_seed, "Seed for the cycle search")->capture_default_str();
  lay->callback([&] {
    action = [&] {
      const auto kind = parse_layout_kind(lay_kind);
      if (!kind) throw Error(ErrorCode::InvalidParameters, "unknown layout '" + lay_kind + "'");
      const auto g = detail::load_graph(lay_file, in_format, limits);
      if (g.vertex_count() > limits.layout_cap) {
        throw Error(ErrorCode::TooLargeForLayout, "graph exceeds layout cap");
      }
      LayoutDecoration deco;
      if (lay_colouring) deco.colouring = dsatur_colouring(g);
      if (lay_cycle || *kind == LayoutKind::CycleOuter) {
        deco.cycle = longest_cycle_dfs(g, lay_seed, {gcx::detail::default_cycle_restarts(g), std::nullopt});
      }
      const auto lr = layout(g, *kind, std::move(deco), limits);
      std::string text;
      if (lay_format == "svg") {
        SvgOptions so;
        so.labels = lay_labels;
        text = render_svg(lr, g, so);
      } else if (lay_format == "json") {
        text = to_json(lr).dump() + "\n";
      } else if (lay_format == "csv") {
        text = layout_csv(lr);
      } else {
        throw Error(ErrorCode::InvalidParameters, "--as must be svg, json or csv");
      }
      detail::write_output(lay_out, text, out);
    };
  });

  // export
  auto* exp = app.add_subcommand("export", "col | csv-degree | csv-matrix | pbm | mps | mps-lp");
  std::string exp_format, exp_file, exp_out;
  exp->add_option("format", exp_format, "Export format")->required();
  exp->add_option("file", exp_file, "Graph file")->required();
  exp->add_option("-o,--output", exp_out, "Output file (default stdout)");
  exp->callback([&] {
    action = [&] {
      const auto g = detail::load_graph(exp_file, in_format, limits);
      detail::write_output(exp_out, export_graph(g, exp_format, limits).body, out);
    };
  });

  // convert
  auto* conv = app.add_subcommand("convert", "GML to COL");
  std::string conv_in, conv_out;
  conv->add_option("input", conv_in, "GML file")->required();
  conv->add_option("-o,--output", conv_out, "Output COL file (default stdout)");
  conv->callback([&] {
    action = [&] { detail::write_output(conv_out, save_col(convert_gml(detail::read_file(conv_in), limits)), out); };
  });

  // serve
  auto* serve = app.add_subcommand("serve", "Start the HTTP service");
  std::string host = "127.0.0.1";
  int port = kDefaultPort;
  std::size_t max_jobs = 4;
  serve->add_option("--host", host, "Bind address")->capture_default_str();
  serve->add_option("--port", port, "Port")->capture_default_str();
  serve->add_option("--max-jobs", max_jobs, "Concurrent job limit")->capture_default_str();
  serve->callback([&] {
    action = [&] {
      ServiceOptions opt;
      opt.limits = limits;
      opt.max_jobs = max_jobs;
      Service svc(opt);
      err << "listening on http://" << host << ':' << port << '\n';
      if (!svc.listen(host, port)) throw std::runtime_error("cannot listen on " + host + ":" + std::to_string(port));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  try {
    if (action) action();
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"gcx"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gcx::cli
