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

// Type-set kernelization for edge-addition instances: the trivial-no rule
// (too many unsatisfied vertices, or a degree already above its list) and
// the removal of every satisfied vertex outside a core set that keeps,
// for each type i, up to alpha = k * (maxdeg + 2) representatives.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "dcekit/dce.hpp"

namespace dcekit {

/// An instance with its vertices mapped back to the instance it came from.
struct ReducedInstance {
  DceInstance instance;
  std::vector<Vertex> to_original;
};

/// Marker for instances decided "no" without search.
struct TrivialNo {
  std::string reason;
};

/// Deletes `vs` and shifts each survivor's list down by the number of
/// deleted neighbours; shifted values below zero are dropped.
inline ReducedInstance safely_remove(const DceInstance& inst, std::span<const Vertex> vs) {
  validate(inst);
  const Graph& g = inst.graph;
  std::vector<char> gone(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : vs) {
    if (v < 0 || v >= g.vertex_count()) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    gone[v] = 1;
  }
  std::vector<Vertex> keep;
  keep.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  auto sub = induced_subgraph(g, keep);
  std::vector<std::vector<int>> lists(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const int lost = g.degree(keep[i]) - sub.graph.degree(static_cast<Vertex>(i));
    for (int d : inst.tau.list(keep[i])) {
      if (d >= lost) lists[i].push_back(d - lost);
    }
  }
  return {DceInstance{std::move(sub.graph), inst.k, DegreeListFunction(inst.r(), std::move(lists)), inst.op},
          std::move(sub.to_original)};
}

/// The magic number k * (maxdeg + 2).
inline std::int64_t core_alpha(const DceInstance& inst) {
  return static_cast<std::int64_t>(inst.k) * (inst.graph.max_degree() + 2);
}

/// Core set in one pass: every unsatisfied vertex, plus each satisfied
/// vertex that is among the first alpha satisfied vertices of at least one
/// of its types i >= 1. Linear in m + |tau|.
inline std::vector<Vertex> core_set(const DceInstance& inst) {
  validate(inst);
  if (inst.op != OpKind::EdgeAddition) throw InvalidInput("core sets are defined for edge addition only");
  const Graph& g = inst.graph;
  const std::int64_t alpha = core_alpha(inst);
  std::vector<std::int64_t> seen(static_cast<std::size_t>(inst.r()) + 1, 0);
  std::vector<Vertex> core;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int deg = g.degree(v);
    bool satisfied = false;
    bool take = false;
    for (int d : inst.tau.list(v)) {
      if (d == deg) satisfied = true;
      if (d > deg && seen[d - deg] < alpha) take = true;
    }
    if (!satisfied) {
      core.push_back(v);
      continue;
    }
    if (take) core.push_back(v);
    for (int d : inst.tau.list(v)) {
      if (d > deg) ++seen[d - deg];
    }
  }
  return core;
}

/// Fires when more than 2k vertices are unsatisfied or some vertex already
/// exceeds every degree on its list (an empty list counts).
inline std::optional<TrivialNo> rule2_check(const DceInstance& inst) {
  validate(inst);
  if (inst.op != OpKind::EdgeAddition) throw InvalidInput("rule 2 applies to edge addition only");
  std::int64_t unsatisfied = 0;
  for (Vertex v = 0; v < inst.graph.vertex_count(); ++v) {
    const int deg = inst.graph.degree(v);
    auto top = inst.tau.max_of(v);
    if (!top || deg > *top) {
      return TrivialNo{"vertex " + std::to_string(v) + " has degree " + std::to_string(deg) +
                       " above every listed degree"};
    }
    if (!inst.tau.allows(v, deg)) ++unsatisfied;
  }
  if (unsatisfied > 2 * static_cast<std::int64_t>(inst.k)) {
    return TrivialNo{std::to_string(unsatisfied) + " unsatisfied vertices exceed 2k = " + std::to_string(2 * inst.k)};
  }
  return std::nullopt;
}

using KrKernel = std::variant<TrivialNo, ReducedInstance>;

/// Vertex bound 2k + r*k*(r+2) of the (k, r) kernel.
inline std::int64_t kr_kernel_bound(std::int64_t k, std::int64_t r) { return 2 * k + r * k * (r + 2); }

/// Rule 2, then one application of Rule 1. The result has at most
/// 2k + r*k*(r+2) vertices and is equivalent to the input.
inline KrKernel kernelize_kr(const DceInstance& inst) {
  if (auto no = rule2_check(inst)) return *no;
  auto core = core_set(inst);
  std::vector<char> in_core(static_cast<std::size_t>(inst.graph.vertex_count()), 0);
  for (Vertex v : core) in_core[v] = 1;
  std::vector<Vertex> outside;
  for (Vertex v = 0; v < inst.graph.vertex_count(); ++v) {
    if (!in_core[v]) outside.push_back(v);
  }
  return safely_remove(inst, outside);
}

/// Maps a solution of a reduced instance back onto the original indices.
inline EditSolution lift_solution(const EditSolution& sol, std::span<const Vertex> to_original) {
  EditSolution out;
  for (const Edit& e : sol.edits) {
    Edit lifted = e;
    lifted.u = to_original[e.u];
    if (e.kind != EditKind::DeleteVertex) {
      lifted.v = to_original[e.v];
      if (lifted.u > lifted.v) std::swap(lifted.u, lifted.v);
    }
    out.edits.push_back(lifted);
  }
  std::sort(out.edits.begin(), out.edits.end());
  return out;
}

}  // namespace dcekit
