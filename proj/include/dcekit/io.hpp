// Copyright 2026 The dcekit Authors.
//
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

#pragma once

// Text formats. Instances:
//
//   c free text
//   p dce <n> <m> <k> <r> [e+|e-|v-]
//   p dsc <n> <m> <k> <property> [params...] [maxdeg <D>]
//   e <u> <v>
//   t <v> <d1> <d2> ...
//
// Indices are 1-based. A vertex without a `t` line has an empty list.
// Solutions are `NO`, or `YES <s>` followed by s lines `add u v`,
// `del u v` or `rm v`.

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dcekit/dce.hpp"
#include "dcekit/dsc.hpp"
#include "dcekit/error.hpp"

namespace dcekit {

using Instance = std::variant<DceInstance, DscInstance>;

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline long long parse_int(std::string_view tok, std::size_t line, const char* what) {
  long long v = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || end != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(tok) + "'");
  }
  return v;
}

inline int parse_count(std::string_view tok, std::size_t line, const char* what) {
  long long v = parse_int(tok, line, what);
  if (v < 0 || v > 1'000'000'000) throw ParseError(line, std::string(what) + " out of range");
  return static_cast<int>(v);
}

inline Vertex parse_vertex(std::string_view tok, std::size_t line, int n) {
  long long v = parse_int(tok, line, "vertex");
  if (v < 1 || v > n) {
    throw ParseError(line, "vertex " + std::string(tok) + " out of range 1.." + std::to_string(n));
  }
  return static_cast<Vertex>(v - 1);
}

}  // namespace detail

inline Instance parse_instance(std::string_view text) {
  enum class Kind { None, Dce, Dsc } kind = Kind::None;
  int n = 0, m = 0, k = 0, r = 0;
  OpKind op = OpKind::EdgeAddition;
  std::string prop_name;
  std::vector<int> prop_params;
  std::optional<int> maxdeg;
  std::size_t header_line = 0;
  std::vector<Edge> edges;
  std::vector<std::pair<Edge, std::size_t>> edge_lines;
  std::vector<std::vector<int>> lists;
  std::vector<char> has_list;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;

    if (tok[0] == "p") {
      if (kind != Kind::None) throw ParseError(lineno, "second problem line");
      header_line = lineno;
      if (tok.size() < 2) throw ParseError(lineno, "problem line needs a kind");
      if (tok[1] == "dce") {
        if (tok.size() != 6 && tok.size() != 7) throw ParseError(lineno, "expected 'p dce n m k r [op]'");
        kind = Kind::Dce;
        n = detail::parse_count(tok[2], lineno, "n");
        m = detail::parse_count(tok[3], lineno, "m");
        k = detail::parse_count(tok[4], lineno, "k");
        r = detail::parse_count(tok[5], lineno, "r");
        if (tok.size() == 7) {
          auto parsed = parse_op_kind(tok[6]);
          if (!parsed) throw ParseError(lineno, "unknown edit operation '" + std::string(tok[6]) + "'");
          op = *parsed;
        }
      } else if (tok[1] == "dsc") {
        if (tok.size() < 6) throw ParseError(lineno, "expected 'p dsc n m k property [params] [maxdeg D]'");
        kind = Kind::Dsc;
        n = detail::parse_count(tok[2], lineno, "n");
        m = detail::parse_count(tok[3], lineno, "m");
        k = detail::parse_count(tok[4], lineno, "k");
        prop_name = std::string(tok[5]);
        std::size_t i = 6;
        for (; i < tok.size() && tok[i] != "maxdeg"; ++i) {
          prop_params.push_back(static_cast<int>(detail::parse_int(tok[i], lineno, "property parameter")));
        }
        if (i < tok.size()) {
          if (i + 2 != tok.size()) throw ParseError(lineno, "expected 'maxdeg D' at the end of the problem line");
          maxdeg = detail::parse_count(tok[i + 1], lineno, "maxdeg");
        }
      } else {
        throw ParseError(lineno, "unknown problem kind '" + std::string(tok[1]) + "'");
      }
      lists.assign(static_cast<std::size_t>(n), {});
      has_list.assign(static_cast<std::size_t>(n), 0);
      continue;
    }

    if (kind == Kind::None) throw ParseError(lineno, "'" + std::string(tok[0]) + "' line before the problem line");
    if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError(lineno, "expected 'e u v'");
      Vertex u = detail::parse_vertex(tok[1], lineno, n);
      Vertex v = detail::parse_vertex(tok[2], lineno, n);
      if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u + 1));
      edge_lines.emplace_back(Edge(u, v), lineno);
    } else if (tok[0] == "t") {
      if (kind != Kind::Dce) throw ParseError(lineno, "degree lists are not used by dsc instances");
      if (tok.size() < 2) throw ParseError(lineno, "expected 't v d1 d2 ...'");
      Vertex v = detail::parse_vertex(tok[1], lineno, n);
      if (has_list[v]) throw ParseError(lineno, "second degree list for vertex " + std::to_string(v + 1));
      has_list[v] = 1;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        long long d = detail::parse_int(tok[i], lineno, "degree");
        if (d < 0 || d > r) {
          throw ParseError(lineno, "degree " + std::string(tok[i]) + " outside 0..r = " + std::to_string(r));
        }
        lists[v].push_back(static_cast<int>(d));
      }
    } else {
      throw ParseError(lineno, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (kind == Kind::None) throw ParseError(lineno, "missing problem line");

  std::sort(edge_lines.begin(), edge_lines.end(),
            [](const auto& a, const auto& b) { return a.first < b.first || (a.first == b.first && a.second < b.second); });
  for (std::size_t i = 0; i < edge_lines.size(); ++i) {
    if (i > 0 && edge_lines[i].first == edge_lines[i - 1].first) {
      throw ParseError(edge_lines[i].second, "duplicate edge " + std::to_string(edge_lines[i].first.u + 1) + " " +
                                                 std::to_string(edge_lines[i].first.v + 1));
    }
    edges.push_back(edge_lines[i].first);
  }
  if (static_cast<int>(edges.size()) != m) {
    throw ParseError(header_line, "problem line announces " + std::to_string(m) + " edges, file has " +
                                      std::to_string(edges.size()));
  }
  Graph g(n, edges);
  if (kind == Kind::Dce) return DceInstance{std::move(g), k, DegreeListFunction(r, std::move(lists)), op};
  PiProperty prop;
  try {
    prop = make_property(prop_name, prop_params);
  } catch (const InvalidInput& e) {
    throw ParseError(header_line, e.what());
  }
  if (maxdeg && *maxdeg < g.max_degree()) throw ParseError(header_line, "maxdeg is below the maximum degree");
  return DscInstance{std::move(g), k, std::move(prop), maxdeg};
}

inline std::string serialize_instance(const DceInstance& inst) {
  std::ostringstream out;
  out << "p dce " << inst.graph.vertex_count() << ' ' << inst.graph.edge_count() << ' ' << inst.k << ' ' << inst.r();
  if (inst.op != OpKind::EdgeAddition) out << ' ' << to_string(inst.op);
  out << '\n';
  for (const Edge& e : inst.graph.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  for (Vertex v = 0; v < inst.graph.vertex_count(); ++v) {
    const auto& l = inst.tau.list(v);
    if (l.empty()) continue;
    out << "t " << v + 1;
    for (int d : l) out << ' ' << d;
    out << '\n';
  }
  return out.str();
}

inline std::string serialize_instance(const DscInstance& inst) {
  std::ostringstream out;
  out << "p dsc " << inst.graph.vertex_count() << ' ' << inst.graph.edge_count() << ' ' << inst.k << ' '
      << inst.property.describe();
  if (inst.delta_prime) out << " maxdeg " << *inst.delta_prime;
  out << '\n';
  for (const Edge& e : inst.graph.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

inline std::string serialize_instance(const Instance& inst) {
  return std::visit([](const auto& x) { return serialize_instance(x); }, inst);
}

inline std::string serialize_solution(const std::optional<EditSolution>& sol) {
  if (!sol) return "NO\n";
  std::ostringstream out;
  out << "YES " << sol->size() << '\n';
  for (const Edit& e : sol->edits) {
    switch (e.kind) {
      case EditKind::AddEdge: out << "add " << e.u + 1 << ' ' << e.v + 1 << '\n'; break;
      case EditKind::DeleteEdge: out << "del " << e.u + 1 << ' ' << e.v + 1 << '\n'; break;
      case EditKind::DeleteVertex: out << "rm " << e.u + 1 << '\n'; break;
    }
  }
  return out.str();
}

inline std::string serialize_solution(const std::optional<std::vector<Edge>>& edges) {
  if (!edges) return serialize_solution(std::optional<EditSolution>{});
  return serialize_solution(std::optional<EditSolution>(additions(*edges)));
}

/// Reads a solution for an instance on n vertices.
inline std::optional<EditSolution> parse_solution(std::string_view text, int n) {
  std::optional<EditSolution> out;
  bool seen_header = false;
  std::size_t expected = 0;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto tok = detail::split_ws(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++lineno;
    if (tok.empty() || tok[0] == "c") continue;
    if (!seen_header) {
      seen_header = true;
      if (tok[0] == "NO" && tok.size() == 1) continue;
      if (tok[0] != "YES" || tok.size() != 2) throw ParseError(lineno, "expected 'YES s' or 'NO'");
      expected = static_cast<std::size_t>(detail::parse_count(tok[1], lineno, "solution size"));
      out = EditSolution{};
      continue;
    }
    if (!out) throw ParseError(lineno, "edits after NO");
    if ((tok[0] == "add" || tok[0] == "del") && tok.size() == 3) {
      Vertex u = detail::parse_vertex(tok[1], lineno, n);
      Vertex v = detail::parse_vertex(tok[2], lineno, n);
      if (u == v) throw ParseError(lineno, "self-loop in edit");
      out->edits.push_back(tok[0] == "add" ? Edit::add(u, v) : Edit::del(u, v));
    } else if (tok[0] == "rm" && tok.size() == 2) {
      out->edits.push_back(Edit::remove(detail::parse_vertex(tok[1], lineno, n)));
    } else {
      throw ParseError(lineno, "expected 'add u v', 'del u v' or 'rm v'");
    }
  }
  if (!seen_header) throw ParseError(lineno, "empty solution");
  if (out && out->size() != expected) {
    throw ParseError(lineno, "solution announces " + std::to_string(expected) + " edits, found " +
                                 std::to_string(out->size()));
  }
  return out;
}

}  // namespace dcekit
