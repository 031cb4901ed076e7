#pragma once

#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "httplib.h"

#include "jobs.hpp"
#include "json_io.hpp"
#include "layouts.hpp"
#include "session.hpp"

namespace gcx {

inline constexpr int kDefaultPort = 8671;

/// A graph held by the service, with where it came from.
struct SessionGraph {
  std::string id;
  std::shared_ptr<const Graph> graph;
  Json provenance;
  BasicStats stats;
};

/// Synchronised id -> graph map. Ids are never reused within a process.
class GraphRegistry {
 public:
  std::shared_ptr<const SessionGraph> add(Graph g, Json provenance) {
    auto s = std::make_shared<SessionGraph>();
    s->stats = basic_stats(g);
    s->graph = std::make_shared<const Graph>(std::move(g));
    s->provenance = std::move(provenance);
    std::lock_guard lock(mu_);
    s->id = "g" + std::to_string(++next_);
    graphs_.emplace(s->id, s);
    return s;
  }

  std::shared_ptr<const SessionGraph> get(const std::string& id) const {
    std::lock_guard lock(mu_);
    const auto it = graphs_.find(id);
    if (it == graphs_.end()) throw Error(ErrorCode::GraphNotFound, "no graph with id " + id);
    return it->second;
  }

  std::vector<std::string> ids() const {
    std::lock_guard lock(mu_);
    std::vector<std::string> out;
    for (const auto& [id, _] : graphs_) out.push_back(id);
    return out;
  }

 private:
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<const SessionGraph>> graphs_;
  std::uint64_t next_ = 0;
};

struct ServiceOptions {
  Limits limits;
  std::size_t max_jobs = 4;
  std::string cors_origin = "*";
};

inline int http_status(const Error& e) {
  switch (e.code()) {
    case ErrorCode::GraphNotFound:
    case ErrorCode::UnknownJob:
      return 404;
    case ErrorCode::TooManyJobs: return 429;
    default: break;
  }
  return e.category() == ErrorCategory::Cap ? 413 : 400;
}

/// HTTP facade over the library. Routes are installed on an httplib server
/// owned by the service; run() blocks, stop() returns it.
class Service {
 public:
  explicit Service(ServiceOptions opt = {}) : opt_(std::move(opt)), jobs_(opt_.max_jobs) { install(); }

  ~Service() { stop(); }

  GraphRegistry& graphs() { return graphs_; }
  JobManager& jobs() { return jobs_; }
  httplib::Server& server() { return http_; }

  bool listen(const std::string& host, int port) { return http_.listen(host, port); }
  int bind_any_port(const std::string& host = "127.0.0.1") { return http_.bind_to_any_port(host); }
  bool listen_after_bind() { return http_.listen_after_bind(); }
  void stop() {
    if (http_.is_running()) http_.stop();
  }
  void wait_until_ready() const { http_.wait_until_ready(); }

  /// Current report for a graph: constructive pass (cached per seed) joined
  /// with whatever its jobs have found so far.
  BoundsReport bounds(const std::string& graph_id, std::uint64_t seed = 1) {
    const auto s = graphs_.get(graph_id);
    BoundsReport r;
    {
      std::unique_lock lock(mu_);
      auto key = std::make_pair(graph_id, seed);
      auto it = bounds_cache_.find(key);
      if (it == bounds_cache_.end()) {
        lock.unlock();
        auto fresh = compute_bounds(*s->graph, seed);
        lock.lock();
        it = bounds_cache_.emplace(key, std::move(fresh)).first;
      }
      r = it->second;
    }
    for (const auto& id : jobs_of(graph_id)) tighten_bounds(r, jobs_.poll(id));
    return r;
  }

 private:
  using Req = httplib::Request;
  using Res = httplib::Response;

  std::vector<std::string> jobs_of(const std::string& graph_id) const {
    std::lock_guard lock(mu_);
    std::vector<std::string> out;
    for (const auto& [job, g] : job_graph_)
      if (g == graph_id) out.push_back(job);
    return out;
  }

  static void send_json(Res& res, int status, const Json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
  }

  static Json parse_body(const Req& req) {
    if (req.body.empty()) return Json::object();
    try {
      return Json::parse(req.body);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("malformed JSON body: ") + e.what());
    }
  }

  static std::string param(const Req& req, const std::string& key, const std::string& fallback = "") {
    return req.has_param(key) ? req.get_param_value(key) : fallback;
  }

  static std::uint64_t u64_param(const Req& req, const std::string& key, std::uint64_t fallback) {
    if (!req.has_param(key)) return fallback;
    const auto s = req.get_param_value(key);
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw Error(ErrorCode::InvalidParameters, "query parameter '" + key + "' must be a decimal integer");
    }
    return out;
  }

  Json graph_summary(const SessionGraph& s) const {
    Json j{{"id", s.id}, {"basic_stats", to_json(s.stats)}, {"provenance", s.provenance}};
    j["labels"] = s.graph->has_labels() ? Json(s.graph->labels()) : Json(nullptr);
    return j;
  }

  // Best colouring / cycle known for decoration: jobs first, then a
  // constructive fallback.
  std::optional<Colouring> best_colouring(const std::string& id, const Graph& g) {
    std::optional<Solution> best;
    for (const auto& job : jobs_of(id)) {
      const auto s = jobs_.poll(job);
      if (s.kind == JobKind::IgColouring && s.witness && (!best || s.witness->objective < best->objective)) {
        best = s.witness;
      }
    }
    if (best) return std::get<Colouring>(best->witness);
    return dsatur_colouring(g);
  }

  std::optional<CycleWitness> best_cycle(const std::string& id, const Graph& g) {
    std::optional<Solution> best;
    for (const auto& job : jobs_of(id)) {
      const auto s = jobs_.poll(job);
      if (s.kind == JobKind::LongestCycle && s.witness && (!best || s.witness->objective > best->objective)) {
        best = s.witness;
      }
    }
    if (best) return std::get<CycleWitness>(best->witness);
    return longest_cycle_dfs(g, 1, {detail::default_cycle_restarts(g), std::nullopt});
  }

  template <typename F>
  auto guarded(F f) {
    return [f = std::move(f)](const Req& req, Res& res) {
      try {
        f(req, res);
      } catch (const Error& e) {
        send_json(res, http_status(e), error_json(e));
      } catch (const std::exception& e) {
        send_json(res, 500, {{"error", {{"code", "Internal"}, {"message", e.what()}}}});
      }
    };
  }

  void install() {
    http_.set_default_headers({{"Access-Control-Allow-Origin", opt_.cors_origin}});
    http_.Options(R"(.*)", [](const Req&, Res& res) {
      res.set_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type, Accept");
      res.status = 204;
    });

    http_.Get("/health", [](const Req&, Res& res) { send_json(res, 200, {{"status", "ok"}}); });

    http_.Get("/graphs", guarded([this](const Req&, Res& res) { send_json(res, 200, {{"ids", graphs_.ids()}}); }));

    http_.Post("/graphs", guarded([this](const Req& req, Res& res) {
                 auto loaded = load_any(req.body, param(req, "format"), opt_.limits);
                 const auto s = graphs_.add(std::move(loaded.graph), std::move(loaded.provenance));
                 send_json(res, 201, {{"id", s->id}, {"basic_stats", to_json(s->stats)}});
               }));

    http_.Get(R"(/graphs/([^/]+))", guarded([this](const Req& req, Res& res) {
                send_json(res, 200, graph_summary(*graphs_.get(req.matches[1])));
              }));

    http_.Get(R"(/graphs/([^/]+)/bounds)", guarded([this](const Req& req, Res& res) {
                send_json(res, 200, to_json(bounds(req.matches[1], u64_param(req, "seed", 1))));
              }));

    http_.Post(R"(/graphs/([^/]+)/transform)", guarded([this](const Req& req, Res& res) {
                 const auto parent = graphs_.get(req.matches[1]);
                 const auto body = parse_body(req);
                 if (!body.contains("kind") || !body["kind"].is_string()) {
                   throw Error(ErrorCode::InvalidParameters, "transform needs a string 'kind'");
                 }
                 const auto kind = parse_transform_kind(body["kind"].get<std::string>());
                 if (!kind) throw Error(ErrorCode::InvalidParameters, "unknown transform kind");
                 std::size_t k = 2;
                 if (body.contains("params") && body["params"].contains("k")) k = detail::get_u64(body["params"], "k");
                 if (body.contains("k")) k = detail::get_u64(body, "k");
                 auto out = apply_transform(*parent->graph, *kind, k, opt_.limits);
                 Json prov{{"source", "transform"}, {"parent", parent->id}, {"kind", body["kind"]}};
                 if (*kind == TransformKind::Shortcut) prov["k"] = k;
                 const auto child = graphs_.add(std::move(out.graph), prov);
                 send_json(res, 201,
                           {{"id", child->id},
                            {"basic_stats", to_json(child->stats)},
                            {"mapping", out.mapping ? to_json(*out.mapping) : Json(nullptr)}});
               }));

    http_.Post(R"(/graphs/([^/]+)/jobs)", guarded([this](const Req& req, Res& res) {
                 const std::string gid = req.matches[1];
                 const auto s = graphs_.get(gid);
                 const auto body = parse_body(req);
                 if (!body.contains("kind") || !body["kind"].is_string()) {
                   throw Error(ErrorCode::InvalidParameters, "job needs a string 'kind'");
                 }
                 const auto kind = parse_job_kind(body["kind"].get<std::string>());
                 if (!kind) throw Error(ErrorCode::InvalidParameters, "unknown job kind");
                 const auto cfg = improver_config_from_json(body.value("config", Json(nullptr)));
                 const auto id = jobs_.run(*kind, s->graph, cfg);
                 {
                   std::lock_guard lock(mu_);
                   job_graph_.emplace(id, gid);
                 }
                 send_json(res, 202, {{"job_id", id}, {"graph_id", gid}});
               }));

    http_.Get(R"(/graphs/([^/]+)/jobs)", guarded([this](const Req& req, Res& res) {
                const std::string gid = req.matches[1];
                graphs_.get(gid);
                Json out = Json::array();
                for (const auto& id : jobs_of(gid)) out.push_back(to_json(jobs_.poll(id)));
                send_json(res, 200, {{"jobs", out}});
              }));

    http_.Get(R"(/jobs/([^/]+))", guarded([this](const Req& req, Res& res) {
                send_json(res, 200, to_json(jobs_.poll(req.matches[1])));
              }));

    http_.Delete(R"(/jobs/([^/]+))", guarded([this](const Req& req, Res& res) {
                   auto snap = jobs_.cancel(req.matches[1]);
                   Json j = to_json(snap);
                   j["cancel_requested"] = true;
                   send_json(res, 200, j);
                 }));

    http_.Get(R"(/graphs/([^/]+)/layout)", guarded([this](const Req& req, Res& res) {
                const std::string gid = req.matches[1];
                const auto s = graphs_.get(gid);
                const auto& g = *s->graph;
                const auto kind = parse_layout_kind(param(req, "kind", "radial"));
                if (!kind) throw Error(ErrorCode::InvalidParameters, "unknown layout kind");
                const auto decorate = param(req, "decorate", "none");
                LayoutDecoration deco;
                // Fail on the cap before spending time on decorations.
                if (g.vertex_count() > opt_.limits.layout_cap) {
                  throw Error(ErrorCode::TooLargeForLayout, "graph exceeds layout cap");
                }
                if (decorate == "colouring" || decorate == "coloring" || decorate == "both") {
                  deco.colouring = best_colouring(gid, g);
                }
                if (decorate == "cycle" || decorate == "both" || *kind == LayoutKind::CycleOuter) {
                  deco.cycle = best_cycle(gid, g);
                } else if (decorate != "none" && decorate != "colouring" && decorate != "coloring") {
                  throw Error(ErrorCode::InvalidParameters, "decorate must be none, colouring, cycle or both");
                }
                const auto lr = layout(g, *kind, std::move(deco), opt_.limits);
                auto format = param(req, "format");
                if (format.empty()) {
                  const auto accept = req.get_header_value("Accept");
                  format = accept.find("image/svg+xml") != std::string::npos ? "svg" : "json";
                }
                if (format == "svg") {
                  SvgOptions so;
                  so.labels = param(req, "labels") == "1" || param(req, "labels") == "true";
                  res.set_content(render_svg(lr, g, so), "image/svg+xml");
                } else if (format == "csv") {
                  res.set_content(layout_csv(lr), "text/csv");
                } else if (format == "json") {
                  send_json(res, 200, to_json(lr));
                } else {
                  throw Error(ErrorCode::InvalidParameters, "layout format must be json, svg or csv");
                }
              }));

    http_.Get(R"(/graphs/([^/]+)/export)", guarded([this](const Req& req, Res& res) {
                const auto s = graphs_.get(req.matches[1]);
                auto out = export_graph(*s->graph, param(req, "format", "col"), opt_.limits);
                res.set_content(std::move(out.body), out.media_type);
              }));
  }

  ServiceOptions opt_;
  GraphRegistry graphs_;
  JobManager jobs_;
  httplib::Server http_;
  mutable std::mutex mu_;
  std::map<std::string, std::string> job_graph_;
  std::map<std::pair<std::string, std::uint64_t>, BoundsReport> bounds_cache_;
};

}  // namespace gcx
