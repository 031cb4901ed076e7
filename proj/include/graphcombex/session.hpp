#pragma once

// Glue shared by the CLI and the HTTP service: sniffing loaders, export
// dispatch, transform dispatch, and folding job results into bounds.

#include <optional>
#include <string>
#include <string_view>

#include "formats.hpp"
#include "generators.hpp"
#include "heuristics.hpp"
#include "improvers.hpp"
#include "json_io.hpp"
#include "transforms.hpp"

namespace gcx {

/// Export payload and its media type, shared with the CLI so both emit the
/// same bytes.
struct ExportPayload {
  std::string body;
  std::string media_type;
};

inline ExportPayload export_graph(const Graph& g, std::string_view format, const Limits& limits = {}) {
  if (format == "col") return {save_col(g), "text/plain"};
  if (format == "csv-degree") return {export_degree_distribution_csv(g), "text/csv"};
  if (format == "csv-matrix") return {export_adjacency_csv(g, limits), "text/csv"};
  if (format == "pbm") return {export_adjacency_bitmap(g, limits), "image/x-portable-bitmap"};
  if (format == "mps") return {export_domset_mps(g, false), "text/plain"};
  if (format == "mps-lp") return {export_domset_mps(g, true), "text/plain"};
  throw Error(ErrorCode::InvalidParameters, "unknown export format '" + std::string(format) + "'");
}

/// Reads COL, GML or a generator spec. `format` may be "col", "gml", "gen"
/// or empty to sniff the text.
struct LoadedGraph {
  Graph graph;
  Json provenance;
};

inline LoadedGraph load_any(std::string_view text, std::string_view format, const Limits& limits) {
  if (format.empty()) {
    const auto body = detail::trim(text);
    if (!body.empty() && body.front() == '{') {
      format = "gen";
    } else if (body.find('[') != std::string_view::npos && body.find("graph") != std::string_view::npos) {
      format = "gml";
    } else {
      format = "col";
    }
  }
  if (format == "col") return {load_col(text, limits), {{"source", "col"}}};
  if (format == "gml") {
    auto imp = load_gml(text, limits);
    return {std::move(imp.graph), {{"source", "gml"}, {"original_ids", imp.original_ids}}};
  }
  if (format == "gen" || format == "json") {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
    }
    const auto spec = gen_spec_from_json(j);
    return {generate(spec, limits), {{"source", "generator"}, {"spec", to_json(spec)}}};
  }
  throw Error(ErrorCode::InvalidParameters, "unknown input format '" + std::string(format) + "'");
}

enum class TransformKind { Complement, PruneLeaves, LargestComponent, Shortcut };

inline std::optional<TransformKind> parse_transform_kind(std::string_view s) {
  if (s == "complement") return TransformKind::Complement;
  if (s == "prune-leaves" || s == "prune") return TransformKind::PruneLeaves;
  if (s == "largest-component" || s == "lcc") return TransformKind::LargestComponent;
  if (s == "shortcut") return TransformKind::Shortcut;
  return std::nullopt;
}

/// Result graph plus the parent->child mapping when vertices were dropped.
struct TransformResult {
  Graph graph;
  std::optional<Projection> mapping;
};

inline TransformResult apply_transform(const Graph& g, TransformKind kind, std::size_t k, const Limits& limits) {
  switch (kind) {
    case TransformKind::Complement: return {complement(g, limits), std::nullopt};
    case TransformKind::Shortcut: return {shortcut_graph(g, k, limits), std::nullopt};
    case TransformKind::PruneLeaves: {
      auto p = prune_leaves(g);
      Graph out = p.graph;
      return {std::move(out), std::move(p)};
    }
    case TransformKind::LargestComponent: {
      auto p = largest_component(g);
      Graph out = p.graph;
      return {std::move(out), std::move(p)};
    }
  }
  throw Error(ErrorCode::InvalidParameters, "unknown transform");
}

/// Folds improver snapshots into a bounds report: IG colouring and RLS
/// clique tighten the clique / chromatic pair, IG cover and RLS MIS the
/// independent set / cover pair, cycle jobs the longest-cycle lower end.
inline void tighten_bounds(BoundsReport& r, const JobSnapshot& s) {
  const auto lower = [&](const std::optional<Solution>& w, Problem a, Problem b) {
    if (!w) return;
    r.offer_lower(a, *w);
    r.offer_lower(b, *w);
  };
  const auto upper = [&](const std::optional<Solution>& w, Problem a, Problem b) {
    if (!w) return;
    r.offer_upper(a, *w);
    r.offer_upper(b, *w);
  };
  switch (s.kind) {
    case JobKind::IgColouring:
      upper(s.witness, Problem::ChromaticNumber, Problem::MaxClique);
      lower(s.bound_witness, Problem::MaxClique, Problem::ChromaticNumber);
      break;
    case JobKind::IgCover:
      upper(s.witness, Problem::MinCliqueCover, Problem::MaxIndependentSet);
      lower(s.bound_witness, Problem::MaxIndependentSet, Problem::MinCliqueCover);
      break;
    case JobKind::RlsClique: lower(s.witness, Problem::MaxClique, Problem::ChromaticNumber); break;
    case JobKind::RlsMis: lower(s.witness, Problem::MaxIndependentSet, Problem::MinCliqueCover); break;
    case JobKind::LongestCycle:
      if (s.witness) r.offer_lower(Problem::LongestCycle, *s.witness);
      break;
    default: break;
  }
}

}  // namespace gcx
