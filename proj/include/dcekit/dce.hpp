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

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dcekit/error.hpp"
#include "dcekit/graph.hpp"

namespace dcekit {

enum class OpKind { EdgeAddition, EdgeDeletion, VertexDeletion };

inline std::string_view to_string(OpKind op) {
  switch (op) {
    case OpKind::EdgeAddition: return "e+";
    case OpKind::EdgeDeletion: return "e-";
    case OpKind::VertexDeletion: return "v-";
  }
  return "?";
}

inline std::optional<OpKind> parse_op_kind(std::string_view s) {
  if (s == "e+") return OpKind::EdgeAddition;
  if (s == "e-") return OpKind::EdgeDeletion;
  if (s == "v-") return OpKind::VertexDeletion;
  return std::nullopt;
}

/// Per-vertex sets of admissible degrees, every value in {0..r}.
/// Lists are kept sorted and duplicate-free; an empty list is legal.
class DegreeListFunction {
 public:
  DegreeListFunction() = default;

  DegreeListFunction(int r, std::vector<std::vector<int>> lists) : r_(r), lists_(std::move(lists)) {
    if (r_ < 0) throw InvalidInput("degree bound r must be nonnegative");
    for (std::size_t v = 0; v < lists_.size(); ++v) {
      auto& list = lists_[v];
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      if (!list.empty() && (list.front() < 0 || list.back() > r_)) {
        throw InvalidInput("degree list of vertex " + std::to_string(v) + " leaves 0.." + std::to_string(r_));
      }
    }
  }

  /// The same list for n vertices.
  static DegreeListFunction uniform(int n, int r, std::vector<int> list) {
    return DegreeListFunction(r, std::vector<std::vector<int>>(static_cast<std::size_t>(n), std::move(list)));
  }

  int r() const noexcept { return r_; }
  int size() const noexcept { return static_cast<int>(lists_.size()); }
  const std::vector<int>& list(Vertex v) const { return lists_.at(v); }

  bool allows(Vertex v, int degree) const {
    const auto& list = lists_.at(v);
    return std::binary_search(list.begin(), list.end(), degree);
  }

  /// max tau(v), or nullopt for an empty list.
  std::optional<int> max_of(Vertex v) const {
    const auto& list = lists_.at(v);
    if (list.empty()) return std::nullopt;
    return list.back();
  }

  /// Encoding size |tau|: one unit per listed degree, at least one per vertex.
  std::size_t encoding_size() const noexcept {
    std::size_t total = 0;
    for (const auto& list : lists_) total += std::max<std::size_t>(1, list.size());
    return total;
  }

  const std::vector<std::vector<int>>& lists() const noexcept { return lists_; }

  friend bool operator==(const DegreeListFunction&, const DegreeListFunction&) = default;

 private:
  int r_ = 0;
  std::vector<std::vector<int>> lists_;
};

struct DceInstance {
  Graph graph;
  int k = 0;
  DegreeListFunction tau;
  OpKind op = OpKind::EdgeAddition;

  int r() const noexcept { return tau.r(); }

  friend bool operator==(const DceInstance&, const DceInstance&) = default;
};

inline void validate(const DceInstance& inst) {
  if (inst.k < 0) throw InvalidInput("budget k must be nonnegative");
  if (inst.tau.size() != inst.graph.vertex_count()) {
    throw InvalidInput("degree list function covers " + std::to_string(inst.tau.size()) +
                       " vertices, graph has " + std::to_string(inst.graph.vertex_count()));
  }
}

enum class EditKind { AddEdge, DeleteEdge, DeleteVertex };

/// One editing operation. For DeleteVertex only `u` is meaningful and `v` is -1.
struct Edit {
  EditKind kind = EditKind::AddEdge;
  Vertex u = 0;
  Vertex v = -1;

  static Edit add(Vertex a, Vertex b) { return {EditKind::AddEdge, std::min(a, b), std::max(a, b)}; }
  static Edit del(Vertex a, Vertex b) { return {EditKind::DeleteEdge, std::min(a, b), std::max(a, b)}; }
  static Edit remove(Vertex a) { return {EditKind::DeleteVertex, a, -1}; }

  friend auto operator<=>(const Edit&, const Edit&) = default;
  friend bool operator==(const Edit&, const Edit&) = default;
};

inline EditKind edit_kind_for(OpKind op) {
  switch (op) {
    case OpKind::EdgeAddition: return EditKind::AddEdge;
    case OpKind::EdgeDeletion: return EditKind::DeleteEdge;
    case OpKind::VertexDeletion: return EditKind::DeleteVertex;
  }
  return EditKind::AddEdge;
}

struct EditSolution {
  std::vector<Edit> edits;

  std::size_t size() const noexcept { return edits.size(); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (const Edit& e : edits) {
      if (e.kind != EditKind::DeleteVertex) out.emplace_back(e.u, e.v);
    }
    return out;
  }

  friend bool operator==(const EditSolution&, const EditSolution&) = default;
};

inline EditSolution additions(std::span<const Edge> edges) {
  EditSolution out;
  for (const Edge& e : edges) out.edits.push_back(Edit::add(e.u, e.v));
  return out;
}

/// The graph left after applying `sol`, with survivors mapped back to their
/// original indices. Throws Conflict/InvalidInput on inconsistent edits.
inline InducedSubgraph apply_solution(const Graph& g, const EditSolution& sol) {
  std::vector<Edge> added;
  std::vector<Edge> deleted;
  std::vector<Vertex> removed;
  for (const Edit& e : sol.edits) {
    switch (e.kind) {
      case EditKind::AddEdge: added.emplace_back(e.u, e.v); break;
      case EditKind::DeleteEdge: deleted.emplace_back(e.u, e.v); break;
      case EditKind::DeleteVertex:
        if (e.u < 0 || e.u >= g.vertex_count()) throw InvalidInput("vertex " + std::to_string(e.u) + " out of range");
        removed.push_back(e.u);
        break;
    }
  }
  std::sort(removed.begin(), removed.end());
  if (std::adjacent_find(removed.begin(), removed.end()) != removed.end()) {
    throw Conflict("vertex deleted twice");
  }
  auto touches_removed = [&removed](const Edge& e) {
    return std::binary_search(removed.begin(), removed.end(), e.u) ||
           std::binary_search(removed.begin(), removed.end(), e.v);
  };
  for (const auto* list : {&added, &deleted}) {
    for (const Edge& e : *list) {
      if (touches_removed(e)) throw Conflict("edge edit incident to a deleted vertex");
    }
  }
  Graph edited = add_edges(delete_edges(g, deleted), added);
  return remove_vertices(edited, removed);
}

/// nullopt when `sol` is a valid solution of `inst`; otherwise the reason.
inline std::optional<std::string> check_solution(const DceInstance& inst, const EditSolution& sol) {
  if (static_cast<long long>(sol.size()) > inst.k) {
    return "solution uses " + std::to_string(sol.size()) + " edits, budget is " + std::to_string(inst.k);
  }
  const EditKind allowed = edit_kind_for(inst.op);
  for (const Edit& e : sol.edits) {
    if (e.kind != allowed) return "edit kind does not match operation " + std::string(to_string(inst.op));
  }
  InducedSubgraph result;
  try {
    result = apply_solution(inst.graph, sol);
  } catch (const std::exception& ex) {
    return ex.what();
  }
  for (Vertex v = 0; v < result.graph.vertex_count(); ++v) {
    Vertex orig = result.to_original[v];
    if (!inst.tau.allows(orig, result.graph.degree(v))) {
      return "vertex " + std::to_string(orig) + " ends with degree " + std::to_string(result.graph.degree(v)) +
             " not on its list";
    }
  }
  return std::nullopt;
}

/// U: vertices whose current degree is not on their list.
inline std::vector<Vertex> unsatisfied_vertices(const DceInstance& inst) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < inst.graph.vertex_count(); ++v) {
    if (!inst.tau.allows(v, inst.graph.degree(v))) out.push_back(v);
  }
  return out;
}

/// {i in 0..r : deg(v) + i in tau(v)}, ascending. Type 0 means satisfied.
inline std::vector<int> vertex_types(const DceInstance& inst, Vertex v) {
  const int deg = inst.graph.degree(v);
  std::vector<int> out;
  for (int d : inst.tau.list(v)) {
    if (d >= deg) out.push_back(d - deg);
  }
  return out;
}

}  // namespace dcekit
