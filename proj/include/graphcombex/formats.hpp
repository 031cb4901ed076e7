#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graph.hpp"

namespace gcx {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Splits off the next whitespace-delimited token from `s`.
inline std::string_view next_token(std::string_view& s) {
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  std::size_t j = i;
  while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
  auto tok = s.substr(i, j - i);
  s.remove_prefix(j);
  return tok;
}

template <typename Int>
bool parse_int(std::string_view tok, Int& out) {
  if (tok.empty()) return false;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

inline std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace detail

// --- extended DIMACS COL --------------------------------------------------

/// Parses the extended COL format: "c <id> <label>" vertex labels, one
/// "p edge <n> <m>" line, and "e <u> <v>" edges, all ids 1-based. Comment
/// lines that are not of the label form are ignored.
inline Graph load_col(std::string_view text, const Limits& limits = {}) {
  struct PendingLabel {
    std::size_t id;
    std::string text;
    std::size_t line;
  };
  std::vector<PendingLabel> pending;
  std::vector<Edge> edges;
  bool have_problem = false;
  std::size_t n = 0;
  std::size_t declared_m = 0;
  std::size_t edge_lines = 0;

  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::string_view rest = line;
    const auto kind = detail::next_token(rest);
    if (kind.empty()) continue;

    if (kind == "c") {
      std::string_view after_id = rest;
      std::size_t id = 0;
      if (detail::parse_int(detail::next_token(after_id), id)) {
        const auto label = detail::trim(after_id);
        if (!label.empty()) pending.push_back({id, std::string(label), line_no});
      }
      continue;
    }

    if (kind == "p") {
      if (have_problem) throw Error(ErrorCode::ParseError, line_no, "duplicate problem line");
      const auto format = detail::next_token(rest);
      if (format != "edge" && format != "col") {
        throw Error(ErrorCode::ParseError, line_no, "expected 'p edge <n> <m>'");
      }
      if (!detail::parse_int(detail::next_token(rest), n) ||
          !detail::parse_int(detail::next_token(rest), declared_m) ||
          !detail::trim(rest).empty()) {
        throw Error(ErrorCode::ParseError, line_no, "malformed problem line");
      }
      if (n > limits.vertex_cap) {
        throw Error(ErrorCode::CapExceeded, std::to_string(n) + " vertices exceeds cap of " +
                                                std::to_string(limits.vertex_cap));
      }
      edges.reserve(declared_m);
      have_problem = true;
      continue;
    }

    if (kind == "e") {
      if (!have_problem) throw Error(ErrorCode::ParseError, line_no, "edge before problem line");
      std::size_t u = 0;
      std::size_t v = 0;
      if (!detail::parse_int(detail::next_token(rest), u) ||
          !detail::parse_int(detail::next_token(rest), v) || !detail::trim(rest).empty()) {
        throw Error(ErrorCode::ParseError, line_no, "malformed edge line");
      }
      if (u < 1 || u > n || v < 1 || v > n) {
        throw Error(ErrorCode::ParseError, line_no,
                    "vertex id out of range [1, " + std::to_string(n) + "]");
      }
      if (u == v) throw Error(ErrorCode::SelfLoop, line_no, "self-loop on vertex " + std::to_string(u));
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      ++edge_lines;
      continue;
    }

    throw Error(ErrorCode::ParseError, line_no, "unknown line type '" + std::string(kind) + "'");
  }

  if (!have_problem) throw Error(ErrorCode::ParseError, line_no, "missing problem line");
  if (edge_lines != declared_m) {
    throw Error(ErrorCode::CountMismatch, "problem line declares " + std::to_string(declared_m) +
                                              " edges but " + std::to_string(edge_lines) +
                                              " edge lines were read");
  }

  std::vector<std::string> labels;
  if (!pending.empty()) {
    labels.resize(n);
    for (auto& p : pending) {
      if (p.id < 1 || p.id > n) {
        throw Error(ErrorCode::ParseError, p.line, "label for vertex id out of range");
      }
      labels[p.id - 1] = std::move(p.text);
    }
  }
  return build_graph(n, edges, std::move(labels), limits);
}

inline Graph load_col(std::istream& in, const Limits& limits = {}) {
  return load_col(std::string_view(detail::read_all(in)), limits);
}

inline std::string save_col(const Graph& g) {
  std::string out;
  out.reserve(32 + g.edge_count() * 16);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!g.label(v).empty()) {
      out += "c ";
      out += std::to_string(v + 1);
      out += ' ';
      out += g.label(v);
      out += '\n';
    }
  }
  out += "p edge " + std::to_string(g.vertex_count()) + ' ' + std::to_string(g.edge_count()) + '\n';
  char buf[48];
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbours(u)) {
      if (u < v) {
        const int len = std::snprintf(buf, sizeof buf, "e %u %u\n", u + 1, v + 1);
        out.append(buf, static_cast<std::size_t>(len));
      }
    }
  }
  return out;
}

// --- GML subset -------------------------------------------------------------

struct GmlImport {
  Graph graph;
  std::vector<std::int64_t> original_ids;  // original GML id of each vertex
};

namespace detail {

class GmlLexer {
 public:
  enum class Kind { Key, Int, Real, String, Open, Close, End };
  struct Token {
    Kind kind;
    std::string_view text;
    std::size_t line;
  };

  explicit GmlLexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    if (pos_ >= src_.size()) return {Kind::End, {}, line_};
    const char c = src_[pos_];
    const auto start = pos_;
    if (c == '[') return ++pos_, Token{Kind::Open, src_.substr(start, 1), line_};
    if (c == ']') return ++pos_, Token{Kind::Close, src_.substr(start, 1), line_};
    if (c == '"') {
      const auto line = line_;
      ++pos_;
      while (pos_ < src_.size() && src_[pos_] != '"') {
        if (src_[pos_] == '\n') ++line_;
        ++pos_;
      }
      if (pos_ >= src_.size()) throw Error(ErrorCode::ParseError, line, "unterminated string");
      ++pos_;
      return {Kind::String, src_.substr(start + 1, pos_ - start - 2), line};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.') {
      bool real = false;
      ++pos_;
      while (pos_ < src_.size()) {
        const char d = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(d))) {
        } else if (d == '.' || d == 'e' || d == 'E' ||
                   ((d == '-' || d == '+') && (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E'))) {
          real = true;
        } else {
          break;
        }
        ++pos_;
      }
      return {real ? Kind::Real : Kind::Int, src_.substr(start, pos_ - start), line_};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      return {Kind::Key, src_.substr(start, pos_ - start), line_};
    }
    throw Error(ErrorCode::ParseError, line_, std::string("unexpected character '") + c + "'");
  }

 private:
  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

}  // namespace detail

/// Reads the GML subset `graph [ node [ id <int> label "<str>" ] edge [
/// source <int> target <int> ] ]`. Unknown keys and nested lists are skipped.
/// Vertices are numbered in order of first node declaration.
inline GmlImport load_gml(std::string_view text, const Limits& limits = {}) {
  using Lexer = detail::GmlLexer;
  using Kind = Lexer::Kind;
  Lexer lex(text);

  auto expect_value = [&](Lexer::Token key) {
    auto v = lex.next();
    if (v.kind == Kind::End || v.kind == Kind::Close || v.kind == Kind::Key) {
      throw Error(ErrorCode::ParseError, key.line,
                  "missing value for key '" + std::string(key.text) + "'");
    }
    return v;
  };
  // Consumes the rest of a list whose '[' was already read.
  auto skip_list = [&](std::size_t open_line) {
    int depth = 1;
    while (depth > 0) {
      const auto t = lex.next();
      if (t.kind == Kind::Open) ++depth;
      else if (t.kind == Kind::Close) --depth;
      else if (t.kind == Kind::End) throw Error(ErrorCode::ParseError, open_line, "unterminated list");
    }
  };
  auto as_int = [](Lexer::Token t, std::int64_t& out) {
    if (t.kind != Kind::Int || !detail::parse_int(t.text, out)) {
      throw Error(ErrorCode::ParseError, t.line, "expected integer, got '" + std::string(t.text) + "'");
    }
  };

  std::vector<std::int64_t> ids;
  std::vector<std::string> labels;
  std::unordered_map<std::int64_t, Vertex> index;
  struct RawEdge {
    std::int64_t source, target;
    std::size_t line;
  };
  std::vector<RawEdge> raw_edges;
  bool saw_graph = false;

  for (auto t = lex.next(); t.kind != Kind::End; t = lex.next()) {
    if (t.kind != Kind::Key) throw Error(ErrorCode::ParseError, t.line, "expected key");
    auto v = expect_value(t);
    if (t.text != "graph" || v.kind != Kind::Open) {
      if (v.kind == Kind::Open) skip_list(v.line);
      continue;
    }
    saw_graph = true;
    for (auto k = lex.next(); k.kind != Kind::Close; k = lex.next()) {
      if (k.kind == Kind::End) throw Error(ErrorCode::ParseError, v.line, "unterminated graph list");
      if (k.kind != Kind::Key) throw Error(ErrorCode::ParseError, k.line, "expected key");
      auto val = expect_value(k);
      const bool is_node = k.text == "node";
      const bool is_edge = k.text == "edge";
      if ((!is_node && !is_edge) || val.kind != Kind::Open) {
        if (val.kind == Kind::Open) skip_list(val.line);
        continue;
      }
      std::optional<std::int64_t> id, source, target;
      std::string label;
      for (auto a = lex.next(); a.kind != Kind::Close; a = lex.next()) {
        if (a.kind == Kind::End) throw Error(ErrorCode::ParseError, val.line, "unterminated list");
        if (a.kind != Kind::Key) throw Error(ErrorCode::ParseError, a.line, "expected key");
        auto av = expect_value(a);
        std::int64_t x = 0;
        if (av.kind == Kind::Open) {
          skip_list(av.line);
        } else if (is_node && a.text == "id") {
          as_int(av, x);
          id = x;
        } else if (is_node && a.text == "label") {
          label = std::string(av.text);
        } else if (is_edge && a.text == "source") {
          as_int(av, x);
          source = x;
        } else if (is_edge && a.text == "target") {
          as_int(av, x);
          target = x;
        }
      }
      if (is_node) {
        if (!id) throw Error(ErrorCode::ParseError, val.line, "node without id");
        if (index.contains(*id)) {
          throw Error(ErrorCode::ParseError, val.line, "duplicate node id " + std::to_string(*id));
        }
        index.emplace(*id, static_cast<Vertex>(ids.size()));
        ids.push_back(*id);
        labels.push_back(std::move(label));
        if (ids.size() > limits.vertex_cap) {
          throw Error(ErrorCode::CapExceeded, "node count exceeds cap of " + std::to_string(limits.vertex_cap));
        }
      } else {
        if (!source || !target) throw Error(ErrorCode::ParseError, val.line, "edge without source/target");
        raw_edges.push_back({*source, *target, val.line});
      }
    }
  }
  if (!saw_graph) throw Error(ErrorCode::ParseError, 1, "no 'graph [ ... ]' block");

  std::vector<Edge> edges;
  edges.reserve(raw_edges.size());
  for (const auto& e : raw_edges) {
    const auto s = index.find(e.source);
    const auto t = index.find(e.target);
    if (s == index.end() || t == index.end()) {
      const auto missing = s == index.end() ? e.source : e.target;
      throw Error(ErrorCode::UnknownNodeReference, e.line,
                  "edge references undeclared node " + std::to_string(missing));
    }
    if (s->second == t->second) {
      throw Error(ErrorCode::SelfLoop, e.line, "self-loop on node " + std::to_string(e.source));
    }
    edges.emplace_back(s->second, t->second);
  }
  return {build_graph(ids.size(), edges, std::move(labels), limits), std::move(ids)};
}

inline Graph convert_gml(std::string_view text, const Limits& limits = {}) {
  return load_gml(text, limits).graph;
}

// --- matrix and distribution exports --------------------------------------

namespace detail {
inline void check_matrix_cap(const Graph& g, const Limits& limits) {
  if (g.vertex_count() > limits.matrix_export_cap) {
    throw Error(ErrorCode::TooLargeForMatrixExport,
                std::to_string(g.vertex_count()) + " vertices exceeds matrix export cap of " +
                    std::to_string(limits.matrix_export_cap));
  }
}

// Writes one adjacency-matrix row via `put(bit)` for each column.
template <typename Put>
void matrix_row(const Graph& g, Vertex v, Put&& put) {
  const auto row = g.neighbours(v);
  auto it = row.begin();
  for (Vertex c = 0; c < g.vertex_count(); ++c) {
    const bool bit = it != row.end() && *it == c;
    if (bit) ++it;
    put(c, bit);
  }
}
}  // namespace detail

inline std::string export_adjacency_csv(const Graph& g, const Limits& limits = {}) {
  detail::check_matrix_cap(g, limits);
  std::string out;
  out.reserve(g.vertex_count() * g.vertex_count() * 2);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    detail::matrix_row(g, v, [&](Vertex c, bool bit) {
      if (c > 0) out += ',';
      out += bit ? '1' : '0';
    });
    out += '\n';
  }
  return out;
}

/// Plain PBM (P1) image of the adjacency matrix; raster lines wrap at 70
/// characters as the format requires.
inline std::string export_adjacency_bitmap(const Graph& g, const Limits& limits = {}) {
  detail::check_matrix_cap(g, limits);
  const auto n = g.vertex_count();
  std::string out = "P1\n" + std::to_string(n) + ' ' + std::to_string(n) + '\n';
  for (Vertex v = 0; v < n; ++v) {
    std::size_t col = 0;
    detail::matrix_row(g, v, [&](Vertex, bool bit) {
      if (col == 70) {
        out += '\n';
        col = 0;
      }
      out += bit ? '1' : '0';
      ++col;
    });
    out += '\n';
  }
  return out;
}

inline std::string export_degree_distribution_csv(const Graph& g) {
  std::vector<std::size_t> counts(g.max_degree() + 1, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) ++counts[g.degree(v)];
  std::string out = "degree,count\n";
  for (std::size_t d = 0; d < counts.size(); ++d) {
    if (counts[d] > 0) out += std::to_string(d) + ',' + std::to_string(counts[d]) + '\n';
  }
  return out;
}

// --- MPS ---------------------------------------------------------------------

namespace detail {
// Fixed-field MPS line: fields start at columns 2, 5, 15, 25, 40, 50.
inline std::string mps_line(std::string_view f1, std::string_view f2, std::string_view f3,
                            std::string_view f4 = {}, std::string_view f5 = {},
                            std::string_view f6 = {}) {
  std::string line(61, ' ');
  const std::pair<std::size_t, std::string_view> fields[] = {{1, f1}, {4, f2},  {14, f3},
                                                             {24, f4}, {39, f5}, {49, f6}};
  for (const auto& [col, text] : fields) line.replace(col, text.size(), text);
  const auto last = line.find_last_not_of(' ');
  line.resize(last == std::string::npos ? 0 : last + 1);
  line += '\n';
  return line;
}

inline std::string mps_name(char prefix, std::size_t one_based) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%c%06zu", prefix, one_based);
  return buf;
}
}  // namespace detail

/// Minimum dominating set as a 0/1 program: minimise the sum of x_v subject
/// to one covering row per vertex over its closed neighbourhood. The relaxed
/// model drops the integrality markers and keeps the [0, 1] bounds.
inline std::string export_domset_mps(const Graph& g, bool relaxed) {
  using detail::mps_line;
  using detail::mps_name;
  std::string out;
  out += relaxed ? "NAME          DOMSETLP\n" : "NAME          DOMSET\n";
  out += "ROWS\n";
  out += mps_line("N", "COST", "");
  for (Vertex v = 0; v < g.vertex_count(); ++v) out += mps_line("G", mps_name('C', v + 1), "");
  out += "COLUMNS\n";
  if (!relaxed) out += mps_line("", "MARKER", "'MARKER'", "", "'INTORG'");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto col = mps_name('X', v + 1);
    out += mps_line("", col, "COST", "1");
    // Closed neighbourhood in ascending order.
    const auto row = g.neighbours(v);
    auto it = row.begin();
    while (it != row.end() && *it < v) out += mps_line("", col, mps_name('C', *it++ + 1), "1");
    out += mps_line("", col, mps_name('C', v + 1), "1");
    while (it != row.end()) out += mps_line("", col, mps_name('C', *it++ + 1), "1");
  }
  if (!relaxed) out += mps_line("", "MARKER", "'MARKER'", "", "'INTEND'");
  out += "RHS\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out += mps_line("", "RHS", mps_name('C', v + 1), "1");
  out += "BOUNDS\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out += mps_line("UP", "BND", mps_name('X', v + 1), "1");
  }
  out += "ENDATA\n";
  return out;
}

}  // namespace gcx
