// Copyright 2026 The fkreg Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fkreg/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <tuple>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace fkreg::io {
namespace {

using nlohmann::json;

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && !(line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void fail(std::string_view source, std::size_t line, const std::string& what) {
  throw InputError(std::string(source) + ":" + std::to_string(line) + ": " + what);
}

Index parse_index(std::string_view tok, std::string_view source, std::size_t line) {
  Index v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(source, line, "bad vertex index '" + std::string(tok) + "'");
  return v;
}

double parse_weight(std::string_view tok, std::string_view source, std::size_t line) {
  double w = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), w);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(source, line, "bad weight '" + std::string(tok) + "'");
  if (!(w >= 0.0 && w <= 1.0)) fail(source, line, "weight must lie in [0,1]");
  return w;
}

struct EdgeLine {
  Index u;
  Index v;
  double w;
  std::size_t line;
};

json set_to_json(const VertexSet& s) {
  json a = json::array();
  for (Index v : s) a.push_back(v);
  return a;
}

VertexSet set_from_json(const json& a, Index n) {
  if (!a.is_array()) throw InputError("vertex set must be an array");
  std::vector<Index> v;
  v.reserve(a.size());
  for (const auto& x : a) {
    if (!x.is_number_unsigned()) throw InputError("vertex index must be a non-negative integer");
    v.push_back(x.get<Index>());
  }
  return VertexSet(std::move(v), n);
}

double number_field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  if (it->is_string()) return parse_hex_double(it->get<std::string>());
  if (it->is_number()) return it->get<double>();
  throw InputError(std::string("field '") + key + "' must be a number");
}

}  // namespace

GraphInput parse_graph(std::istream& in, std::string_view source) {
  std::optional<Index> declared;
  std::vector<EdgeLine> edges;
  Index max_index = 0;
  bool any = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split_tokens(line);
    if (tok.empty()) continue;
    if (tok[0] == "n") {
      if (tok.size() != 2) fail(source, line_no, "header must be 'n <count>'");
      if (declared || any) fail(source, line_no, "header must precede all edges and appear once");
      declared = parse_index(tok[1], source, line_no);
      continue;
    }
    if (tok.size() != 2 && tok.size() != 3) fail(source, line_no, "expected 'u v' or 'u v w'");
    const Index u = parse_index(tok[0], source, line_no);
    const Index v = parse_index(tok[1], source, line_no);
    const double w = tok.size() == 3 ? parse_weight(tok[2], source, line_no) : 1.0;
    if (u == v) fail(source, line_no, "self-loop on vertex " + std::to_string(u));
    if (declared && std::max(u, v) >= *declared) fail(source, line_no, "vertex index exceeds declared n");
    max_index = std::max({max_index, u, v});
    any = true;
    edges.push_back({std::min(u, v), std::max(u, v), w, line_no});
  }
  {
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const auto& x = edges[a];
      const auto& y = edges[b];
      return std::tie(x.u, x.v, x.line) < std::tie(y.u, y.v, y.line);
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
      const auto& prev = edges[order[i - 1]];
      const auto& cur = edges[order[i]];
      if (prev.u == cur.u && prev.v == cur.v) {
        fail(source, cur.line, "duplicate edge " + std::to_string(cur.u) + " " + std::to_string(cur.v));
      }
    }
  }
  GraphInput out;
  out.n = declared ? *declared : (any ? max_index + 1 : 0);
  if (out.n == 0) return out;
  WeightedGraph g(out.n);
  for (const auto& e : edges) g.set_edge(e.u, e.v, e.w);
  out.graph = std::move(g);
  return out;
}

GraphInput parse_graph_text(std::string_view text, std::string_view source) {
  std::istringstream in{std::string(text)};
  return parse_graph(in, source);
}

GraphInput load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_graph(in, path);
}

std::string format_graph(const WeightedGraph& g) {
  std::string out = "n " + std::to_string(g.n()) + "\n";
  char buf[64];
  for (Index u = 0; u < g.n(); ++u)
    for (Index v = u + 1; v < g.n(); ++v) {
      const double w = g.weight(u, v);
      if (w == 0.0) continue;
      out += std::to_string(u) + " " + std::to_string(v);
      if (w != 1.0) {
        std::snprintf(buf, sizeof buf, " %.17g", w);
        out += buf;
      }
      out += "\n";
    }
  return out;
}

PatternGraph parse_pattern(std::string_view name) {
  if (name == "edge") return PatternGraph::edge();
  if (name == "triangle") return PatternGraph::triangle();
  if (name == "c4") return PatternGraph::cycle(4);
  if (name == "k4") return PatternGraph::complete(4);
  if (name.substr(0, 5) == "file:") {
    const auto in = load_graph(std::string(name.substr(5)));
    std::vector<PatternGraph::Edge> edges;
    for (Index u = 0; u < in.n; ++u)
      for (Index v = u + 1; v < in.n; ++v) {
        const double w = in.graph.weight(u, v);
        if (w == 0.0) continue;
        if (w != 1.0) throw InputError("pattern edges must be unweighted");
        edges.emplace_back(u, v);
      }
    return PatternGraph(in.n, std::move(edges));
  }
  throw InputError("unknown pattern '" + std::string(name) + "' (edge|triangle|c4|k4|file:PATH)");
}

std::string hex_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", x);
  return buf;
}

double parse_hex_double(std::string_view text) {
  const std::string s(text);
  char* end = nullptr;
  const double x = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(x)) {
    throw InputError("bad number '" + s + "'");
  }
  return x;
}

std::string format_decomposition(const DecompositionFile& file) {
  const auto& d = file.decomposition;
  json terms = json::array();
  for (const auto& t : d.terms) {
    terms.push_back(json{{"c", hex_double(t.weight)}, {"S", set_to_json(t.rows)}, {"T", set_to_json(t.cols)}});
  }
  json j{{"n", d.n},
         {"epsilon", hex_double(d.epsilon)},
         {"mode", std::string(to_string(d.mode))},
         {"base", hex_double(d.base)},
         {"terms", std::move(terms)},
         {"provenance",
          {{"tool", file.tool},
           {"version", file.version},
           {"certified", d.certified},
           {"complete", d.complete},
           {"iterations", file.iterations}}}};
  return j.dump(1) + "\n";
}

DecompositionFile parse_decomposition(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("decomposition file: ") + e.what());
  }
  try {
    DecompositionFile f;
    auto& d = f.decomposition;
    if (!j.is_object()) throw InputError("decomposition file must be a JSON object");
    d.n = j.at("n").get<Index>();
    d.epsilon = number_field(j, "epsilon");
    d.mode = parse_mode(j.at("mode").get<std::string>());
    d.base = number_field(j, "base");
    for (const auto& t : j.at("terms")) {
      CutTerm term{set_from_json(t.at("S"), d.n), set_from_json(t.at("T"), d.n), number_field(t, "c")};
      d.terms.push_back(std::move(term));
    }
    if (const auto p = j.find("provenance"); p != j.end()) {
      f.tool = p->value("tool", std::string("fkreg"));
      f.version = p->value("version", std::string());
      d.certified = p->value("certified", false);
      d.complete = p->value("complete", true);
      f.iterations = p->value("iterations", std::uint64_t{0});
    }
    return f;
  } catch (const json::exception& e) {
    throw InputError(std::string("decomposition file: ") + e.what());
  }
}

DecompositionFile load_decomposition(const std::string& path) { return parse_decomposition(read_file(path)); }

std::string format_partition(const FKPartition& p, double epsilon, std::uint64_t terms) {
  json densities = json::array();
  for (Index i = 0; i < p.part_count; ++i) {
    json row = json::array();
    for (Index j = 0; j < p.part_count; ++j) row.push_back(hex_double(p.density(i, j)));
    densities.push_back(std::move(row));
  }
  json j{{"n", p.part_of.size()},
         {"epsilon", hex_double(epsilon)},
         {"terms", terms},
         {"part_count", p.part_count},
         {"part_of", p.part_of},
         {"densities", std::move(densities)}};
  return j.dump(1) + "\n";
}

FKPartition parse_partition(std::string_view text) {
  try {
    const json j = json::parse(text);
    FKPartition p;
    p.part_of = j.at("part_of").get<std::vector<Index>>();
    p.part_count = j.at("part_count").get<Index>();
    const auto& rows = j.at("densities");
    if (rows.size() != p.part_count) throw InputError("density table has the wrong size");
    for (const auto& row : rows) {
      if (row.size() != p.part_count) throw InputError("density table has the wrong size");
      for (const auto& x : row) p.densities.push_back(parse_hex_double(x.get<std::string>()));
    }
    for (Index v : p.part_of)
      if (v >= p.part_count) throw InputError("part id out of range");
    return p;
  } catch (const json::exception& e) {
    throw InputError(std::string("partition file: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw InputError("failed writing '" + path + "'");
}

}  // namespace fkreg::io
