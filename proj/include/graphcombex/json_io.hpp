#pragma once

// JSON encodings shared by the HTTP service and the CLI. Vertex ids are
// 1-based on the wire, as in COL files; colours and class indices are 0-based.

#include <charconv>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <variant>

#include "json.hpp"

#include "error.hpp"
#include "generators.hpp"
#include "heuristics.hpp"
#include "improvers.hpp"
#include "layouts.hpp"
#include "metrics.hpp"
#include "solution.hpp"
#include "transforms.hpp"

namespace gcx {

using Json = nlohmann::json;

namespace detail {
inline Json one_based(std::span<const Vertex> vs) {
  Json a = Json::array();
  for (Vertex v : vs) a.push_back(std::size_t{v} + 1);
  return a;
}

template <typename T>
Json optional_json(const std::optional<T>& x) {
  return x ? Json(*x) : Json(nullptr);
}
}  // namespace detail

inline Json to_json(const BasicStats& s) {
  return {{"n", s.n},
          {"m", s.m},
          {"components", s.components},
          {"density", s.density},
          {"min_degree", s.min_degree},
          {"max_degree", s.max_degree},
          {"mean_degree", s.mean_degree},
          {"stddev_degree", s.stddev_degree}};
}

inline Json to_json(const Witness& w) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, VertexSet>) {
          return {{"type", "vertex_set"}, {"kind", to_string(x.kind)}, {"members", detail::one_based(x.members)}};
        } else if constexpr (std::is_same_v<T, Colouring>) {
          return {{"type", "colouring"}, {"count", x.count}, {"colour", x.colour}};
        } else if constexpr (std::is_same_v<T, CliqueCover>) {
          Json classes = Json::array();
          for (const auto& c : x.classes) classes.push_back(detail::one_based(c));
          return {{"type", "clique_cover"}, {"count", x.size()}, {"classes", std::move(classes)}};
        } else {
          return {{"type", "cycle"}, {"length", x.length()}, {"sequence", detail::one_based(x.sequence)}};
        }
      },
      w);
}

inline Json to_json(const Solution& s) {
  return {{"objective", s.objective}, {"algorithm", s.algorithm}, {"wall_ms", s.wall_ms}, {"witness", to_json(s.witness)}};
}

inline Json to_json(const std::optional<Solution>& s) { return s ? to_json(*s) : Json(nullptr); }

inline Json to_json(const Interval& iv) {
  return {{"lower", iv.lower},
          {"upper", iv.upper},
          {"closed", iv.closed()},
          {"lower_witness", to_json(iv.lower_witness)},
          {"upper_witness", to_json(iv.upper_witness)}};
}

inline Json to_json(const BoundsReport& r) {
  Json out = Json::object();
  for (auto p : kAllProblems) out[std::string(to_string(p))] = to_json(r[p]);
  return out;
}

inline Json to_json(const JobSnapshot& s) {
  return {{"job_id", s.job_id},
          {"kind", to_string(s.kind)},
          {"status", to_string(s.status)},
          {"reason", to_string(s.reason)},
          {"best", detail::optional_json(s.best)},
          {"bound", detail::optional_json(s.bound)},
          {"value", detail::optional_json(s.value)},
          {"note", s.note},
          {"iterations", s.iterations},
          {"elapsed_ms", s.elapsed_ms},
          {"progress", s.progress},
          {"witness", to_json(s.witness)},
          {"bound_witness", to_json(s.bound_witness)},
          {"error", s.error}};
}

inline Json to_json(const LayoutResult& lr) {
  Json coords = Json::array();
  for (auto p : lr.coords) coords.push_back({p.x, p.y});
  Json deco = Json::object();
  if (lr.decoration.colouring) deco["colouring"] = to_json(Witness(*lr.decoration.colouring));
  if (lr.decoration.cycle) deco["cycle"] = to_json(Witness(*lr.decoration.cycle));
  return {{"kind", to_string(lr.kind)}, {"coords", std::move(coords)}, {"decoration", std::move(deco)}};
}

inline Json to_json(const GenSpec& s) {
  Json j{{"family", to_string(s.family)}, {"seed", s.seed}};
  switch (s.family) {
    case Family::Tree: j["arity"] = s.arity; j["depth"] = s.depth; break;
    case Family::UnitDisk: j["n"] = s.n; j["radius"] = s.radius; break;
    case Family::BarabasiAlbert: j["n"] = s.n; j["attachment"] = s.attachment; break;
    case Family::GridRewire: j["rows"] = s.rows; j["cols"] = s.cols; j["p_rewire"] = s.p_rewire; break;
    case Family::WattsStrogatz: j["n"] = s.n; j["k"] = s.k; j["beta"] = s.beta; break;
  }
  return j;
}

/// Parent -> child mapping of a transform, 1-based; dropped vertices are null.
inline Json to_json(const Projection& p) {
  Json fwd = Json::array();
  for (auto x : p.new_index) fwd.push_back(x < 0 ? Json(nullptr) : Json(x + 1));
  return {{"new_index", std::move(fwd)}, {"original", detail::one_based(p.original)}};
}

// --- parsing ---------------------------------------------------------------

namespace detail {
[[noreturn]] inline void bad_field(const std::string& key, const std::string& why) {
  throw Error(ErrorCode::InvalidParameters, "field '" + key + "': " + why);
}

inline std::uint64_t get_u64(const Json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    if (v.get<std::int64_t>() < 0) bad_field(key, "must be non-negative");
    return v.get<std::uint64_t>();
  }
  // Seeds may arrive as decimal strings to dodge double rounding in clients.
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) bad_field(key, "not a decimal integer");
    return out;
  }
  bad_field(key, "expected an unsigned integer");
}

inline double get_double(const Json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_number()) bad_field(key, "expected a number");
  return v.get<double>();
}

inline bool get_bool(const Json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_boolean()) bad_field(key, "expected a boolean");
  return v.get<bool>();
}

template <typename F>
void for_each_field(const Json& j, F&& f) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidParameters, "expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) f(it.key());
}
}  // namespace detail

/// {"family": "ba", "n": 1000, "attachment": 3, "seed": 7}; omitted fields
/// keep their defaults, unknown fields are rejected.
inline GenSpec gen_spec_from_json(const Json& j) {
  GenSpec s;
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
    throw Error(ErrorCode::InvalidParameters, "generator spec needs a string 'family'");
  }
  const auto fam = parse_family(j["family"].get<std::string>());
  if (!fam) throw Error(ErrorCode::InvalidParameters, "unknown family '" + j["family"].get<std::string>() + "'");
  s.family = *fam;
  detail::for_each_field(j, [&](const std::string& k) {
    if (k == "family") return;
    if (k == "arity") s.arity = detail::get_u64(j, k);
    else if (k == "depth") s.depth = detail::get_u64(j, k);
    else if (k == "n") s.n = detail::get_u64(j, k);
    else if (k == "radius") s.radius = detail::get_double(j, k);
    else if (k == "attachment" || k == "m") s.attachment = detail::get_u64(j, k);
    else if (k == "rows") s.rows = detail::get_u64(j, k);
    else if (k == "cols") s.cols = detail::get_u64(j, k);
    else if (k == "p_rewire" || k == "p") s.p_rewire = detail::get_double(j, k);
    else if (k == "k") s.k = detail::get_u64(j, k);
    else if (k == "beta") s.beta = detail::get_double(j, k);
    else if (k == "seed") s.seed = detail::get_u64(j, k);
    else detail::bad_field(k, "unknown generator parameter");
  });
  return s;
}

inline ImproverConfig improver_config_from_json(const Json& j) {
  ImproverConfig c;
  if (j.is_null()) return c;
  detail::for_each_field(j, [&](const std::string& k) {
    if (k == "seed") c.seed = detail::get_u64(j, k);
    else if (k == "max_iterations") c.max_iterations = j[k].is_null() ? std::nullopt : std::optional(detail::get_u64(j, k));
    else if (k == "max_time_ms") {
      c.max_time = j[k].is_null() ? std::nullopt
                                  : std::optional(std::chrono::milliseconds(detail::get_u64(j, k)));
    } else if (k == "snapshot_period_ms") c.snapshot_period = std::chrono::milliseconds(detail::get_u64(j, k));
    else if (k == "reverse_weight") c.reverse_weight = detail::get_double(j, k);
    else if (k == "random_weight") c.random_weight = detail::get_double(j, k);
    else if (k == "size_weight") c.size_weight = detail::get_double(j, k);
    else if (k == "rls_jumps") c.rls_jumps = detail::get_u64(j, k);
    else if (k == "stop_when_closed") c.stop_when_closed = detail::get_bool(j, k);
    else detail::bad_field(k, "unknown config field");
  });
  c.validate();
  return c;
}

inline Json to_json(const ImproverConfig& c) {
  return {{"seed", c.seed},
          {"max_iterations", detail::optional_json(c.max_iterations)},
          {"max_time_ms", c.max_time ? Json(c.max_time->count()) : Json(nullptr)},
          {"snapshot_period_ms", c.snapshot_period.count()},
          {"reverse_weight", c.reverse_weight},
          {"random_weight", c.random_weight},
          {"size_weight", c.size_weight},
          {"rls_jumps", c.rls_jumps},
          {"stop_when_closed", c.stop_when_closed}};
}

inline Json error_json(const Error& e) {
  Json j{{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
  if (e.line()) j["error"]["line"] = *e.line();
  return j;
}

}  // namespace gcx
