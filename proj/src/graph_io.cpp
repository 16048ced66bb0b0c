/* Copyright 2026 The wildgraph Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "wildgraph/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "json.hpp"
#include "wildgraph/errors.hpp"
#include "wildgraph/text.hpp"

namespace wildgraph {

DiagramFormat parse_diagram_format(std::string_view name) {
  if (name == "json") return DiagramFormat::Json;
  if (name == "dot") return DiagramFormat::Dot;
  if (name == "matrix") return DiagramFormat::Matrix;
  throw Error(ErrorKind::UnknownFormat, "unknown diagram format '" + std::string(name) + "'");
}

namespace {

template <class M, class F>
std::string join_rows(const M& B, F&& cell) {
  std::string out;
  for (const auto& row : B) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += cell(row[j]);
    }
    out += '\n';
  }
  return out;
}

bool has_circles(const Diagram& d) { return !d.circles.empty(); }

std::string vertex_label(const DecoratedDiagram& d, std::size_t i) {
  std::string label = has_circles(d.diagram) ? format_circle(d.diagram.circles[i]) : d.diagram.vertices[i];
  if (has_circles(d.diagram) || d.r[i] != 1) label += "\\nr=" + std::to_string(d.r[i]);
  return label;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out;
}

void dot_edges(std::ostringstream& os, std::size_t i, std::size_t j, std::int64_t count) {
  const std::string e = "  n" + std::to_string(i) + " -- n" + std::to_string(j);
  if (count == 0) return;
  if (count < 0) {
    os << e << " [style=dashed, label=\"" << count << "\"];\n";
  } else if (count <= 2) {
    for (std::int64_t k = 0; k < count; ++k) os << e << ";\n";
  } else {
    os << e << " [label=\"" << count << "\"];\n";
  }
}

std::string emit_dot(const DecoratedDiagram& d) {
  const auto& D = d.diagram;
  std::ostringstream os;
  os << "graph diagram {\n  node [shape=ellipse, fontsize=11];\n";
  for (std::size_t i = 0; i < D.size(); ++i) {
    os << "  n" << i << " [label=\"" << dot_escape(vertex_label(d, i)) << "\"];\n";
  }
  for (std::size_t i = 0; i < D.size(); ++i) {
    dot_edges(os, i, i, D.B[i][i] / 2);
    for (std::size_t j = i + 1; j < D.size(); ++j) dot_edges(os, i, j, D.B[i][j]);
  }
  os << "}\n";
  return os.str();
}

std::string emit_json(const DecoratedDiagram& d) {
  using nlohmann::ordered_json;
  const auto& D = d.diagram;
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (std::size_t i = 0; i < D.size(); ++i) {
    ordered_json v;
    v["id"] = D.vertices[i];
    v["circle"] = has_circles(D) ? ordered_json(format_circle(D.circles[i])) : ordered_json(nullptr);
    v["ram"] = d.r[i];
    v["mult"] = D.multiplicities ? ordered_json((*D.multiplicities)[i]) : ordered_json(nullptr);
    j["vertices"].push_back(std::move(v));
  }
  j["B"] = D.B;
  return j.dump(2) + "\n";
}

[[noreturn]] void fail(std::size_t offset, const std::string& message) {
  throw ParseError(ErrorKind::Parse, offset, message);
}

std::int64_t json_int(const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer()) fail(0, std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

DecoratedDiagram from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(e.byte > 0 ? e.byte - 1 : 0, "invalid JSON");
  }
  const nlohmann::json* matrix = &j;
  const nlohmann::json* vertices = nullptr;
  if (j.is_object()) {
    if (!j.contains("B")) fail(0, "JSON diagram needs a \"B\" matrix");
    matrix = &j["B"];
    if (j.contains("vertices")) vertices = &j["vertices"];
  }
  if (!matrix->is_array()) fail(0, "matrix must be an array of rows");
  DecoratedDiagram out;
  auto& D = out.diagram;
  for (const auto& row : *matrix) {
    if (!row.is_array()) fail(0, "matrix row must be an array");
    std::vector<std::int64_t> r;
    for (const auto& x : row) r.push_back(json_int(x, "matrix entry"));
    D.B.push_back(std::move(r));
  }
  const std::size_t n = D.B.size();
  out.r.assign(n, 1);
  if (!vertices) {
    for (std::size_t i = 0; i < n; ++i) D.vertices.push_back(std::to_string(i));
  } else {
    if (!vertices->is_array() || vertices->size() != n) {
      throw Error(ErrorKind::DimensionMismatch, "vertex list does not match the matrix");
    }
    bool any_circle = false, any_mult = false;
    std::vector<std::optional<StokesCircle>> circles;
    std::vector<std::int64_t> mults;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& v = (*vertices)[i];
      if (v.is_string()) {
        D.vertices.push_back(v.get<std::string>());
        circles.emplace_back();
        mults.push_back(1);
        continue;
      }
      if (!v.is_object() || !v.contains("id") || !v["id"].is_string()) fail(0, "vertex needs a string \"id\"");
      D.vertices.push_back(v["id"].get<std::string>());
      if (v.contains("circle") && !v["circle"].is_null()) {
        if (!v["circle"].is_string()) fail(0, "circle must be a string");
        circles.push_back(circle_of(parse_factor(v["circle"].get<std::string>())));
        any_circle = true;
      } else {
        circles.emplace_back();
      }
      if (v.contains("ram")) out.r[i] = json_int(v["ram"], "ram");
      if (out.r[i] <= 0) fail(0, "ram must be positive");
      if (v.contains("mult") && !v["mult"].is_null()) {
        mults.push_back(json_int(v["mult"], "mult"));
        any_mult = true;
      } else {
        mults.push_back(1);
      }
    }
    if (any_circle) {
      for (auto& c : circles) {
        if (!c) fail(0, "either every vertex or none carries a circle");
        D.circles.push_back(*c);
      }
    }
    if (any_mult) D.multiplicities = mults;
  }
  D.validate();
  return out;
}

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> split(std::string_view line, std::size_t base, bool commas) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto sep = [&](char c) { return std::isspace(static_cast<unsigned char>(c)) || (commas && c == ','); };
  while (i < line.size()) {
    while (i < line.size() && sep(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !sep(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), base + start});
  }
  return out;
}

std::int64_t to_int(const Token& t) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size()) {
    fail(t.offset, "expected an integer, got '" + std::string(t.text) + "'");
  }
  return v;
}

DecoratedDiagram from_inline_matrix(std::string_view text) {
  DecoratedDiagram out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    auto cells = split(text.substr(start, end - start), start, true);
    std::vector<std::int64_t> row;
    for (const auto& c : cells) row.push_back(to_int(c));
    // A trailing ';' leaves an empty last row.
    if (!row.empty() || end != text.size()) {
      if (row.empty()) fail(start, "empty matrix row");
      out.diagram.B.push_back(std::move(row));
    }
    start = end + 1;
  }
  for (std::size_t i = 0; i < out.diagram.B.size(); ++i) out.diagram.vertices.push_back(std::to_string(i));
  out.r.assign(out.diagram.B.size(), 1);
  out.diagram.validate();
  return out;
}

DecoratedDiagram from_edge_list(std::string_view text) {
  std::vector<std::string> names;
  std::map<std::string, std::size_t, std::less<>> index;
  struct Edge {
    std::size_t u, v;
    std::int64_t m;
    std::size_t offset;
  };
  std::vector<Edge> edges;
  auto vertex = [&](std::string_view name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    names.emplace_back(name);
    index.emplace(std::string(name), names.size() - 1);
    return names.size() - 1;
  };
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split(line, start, false);
    if (tok.size() == 1) {
      vertex(tok[0].text);
    } else if (tok.size() == 2 || tok.size() == 3) {
      std::size_t u = vertex(tok[0].text), v = vertex(tok[1].text);
      std::int64_t m = tok.size() == 3 ? to_int(tok[2]) : 1;
      edges.push_back({u, v, m, tok[0].offset});
    } else if (tok.size() > 3) {
      fail(tok[3].offset, "edge line has more than three fields");
    }
    start = end + 1;
  }
  DecoratedDiagram out;
  auto& D = out.diagram;
  D.vertices = names;
  D.B.assign(names.size(), std::vector<std::int64_t>(names.size(), 0));
  std::vector<std::vector<char>> seen(names.size(), std::vector<char>(names.size(), 0));
  for (const auto& e : edges) {
    if (seen[e.u][e.v]) fail(e.offset, "repeated edge " + names[e.u] + " " + names[e.v]);
    seen[e.u][e.v] = seen[e.v][e.u] = 1;
    if (e.u == e.v) {
      D.B[e.u][e.u] = 2 * e.m;
    } else {
      D.B[e.u][e.v] = D.B[e.v][e.u] = e.m;
    }
  }
  out.r.assign(names.size(), 1);
  D.validate();
  return out;
}

}  // namespace

std::string format_matrix(const IntMatrix& B) {
  return join_rows(B, [](std::int64_t x) { return std::to_string(x); });
}

std::string format_matrix(const RatMatrix& B) {
  return join_rows(B, [](const Rational& x) { return x.str(); });
}

std::string emit_diagram(const DecoratedDiagram& d, DiagramFormat format) {
  switch (format) {
    case DiagramFormat::Matrix: return format_matrix(d.diagram.B);
    case DiagramFormat::Dot: return emit_dot(d);
    case DiagramFormat::Json: return emit_json(d);
  }
  throw Error(ErrorKind::UnknownFormat, "unknown diagram format");
}

DecoratedDiagram parse_diagram(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first == text.size()) fail(first, "empty diagram");
  if (text[first] == '{' || text[first] == '[') return from_json(text);
  if (text.find(';') != std::string_view::npos) return from_inline_matrix(text);
  return from_edge_list(text);
}

}  // namespace wildgraph
