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

// Exact solvers for all three edit operations.
//
// exhaustive_enumeration tries every edit set of size 0, 1, ..., k in
// turn and is the trusted reference. bounded_search is a branching
// algorithm: some unsatisfied vertex must be touched by any solution, so
// branch over the edits touching it (earlier siblings are frozen in later
// branches, so no edit set is visited twice). brute_force_solve picks the
// enumeration whenever its search space fits the budget.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "dcekit/dce.hpp"
#include "dcekit/kernel.hpp"

namespace dcekit {

struct SearchLimits {
  /// Edit sets the plain enumeration may visit.
  std::uint64_t max_enumerated = 20'000'000;
  /// Nodes the branching search may expand.
  std::uint64_t max_nodes = 200'000'000;
  /// Largest vertex count for the branching search (it keeps an n x n table).
  int max_vertices = 3000;
};

namespace detail {

class EditState {
 public:
  explicit EditState(const DceInstance& inst)
      : g_(inst.graph),
        op_(inst.op),
        n_(inst.graph.vertex_count()),
        r_(inst.r()),
        deg_(inst.graph.degrees()),
        alive_(static_cast<std::size_t>(n_), 1),
        allowed_(static_cast<std::size_t>(n_) * (r_ + 1), 0) {
    for (Vertex v = 0; v < n_; ++v) {
      for (int d : inst.tau.list(v)) allowed_[static_cast<std::size_t>(v) * (r_ + 1) + d] = 1;
    }
    for (Vertex v = 0; v < n_; ++v) unsatisfied_ += is_unsatisfied(v) ? 1 : 0;
  }

  int n() const { return n_; }
  int degree(Vertex v) const { return deg_[v]; }
  bool alive(Vertex v) const { return alive_[v] != 0; }
  int unsatisfied() const { return unsatisfied_; }

  bool allows(Vertex v, int d) const {
    return d >= 0 && d <= r_ && allowed_[static_cast<std::size_t>(v) * (r_ + 1) + d];
  }
  bool is_unsatisfied(Vertex v) const { return alive_[v] && !allows(v, deg_[v]); }

  /// Smallest listed degree >= current degree, or -1.
  int next_up(Vertex v) const {
    for (int d = std::max(deg_[v], 0); d <= r_; ++d) {
      if (allows(v, d)) return d;
    }
    return -1;
  }
  /// Largest listed degree <= current degree, or -1.
  int next_down(Vertex v) const {
    for (int d = std::min(deg_[v], r_); d >= 0; --d) {
      if (allows(v, d)) return d;
    }
    return -1;
  }

  void apply(const Edit& e) { change(e, +1); }
  void undo(const Edit& e) { change(e, -1); }

 private:
  void shift_degree(Vertex v, int delta) {
    unsatisfied_ -= is_unsatisfied(v) ? 1 : 0;
    deg_[v] += delta;
    unsatisfied_ += is_unsatisfied(v) ? 1 : 0;
  }

  void change(const Edit& e, int dir) {
    switch (e.kind) {
      case EditKind::AddEdge:
        shift_degree(e.u, dir);
        shift_degree(e.v, dir);
        break;
      case EditKind::DeleteEdge:
        shift_degree(e.u, -dir);
        shift_degree(e.v, -dir);
        break;
      case EditKind::DeleteVertex:
        if (dir > 0) {
          unsatisfied_ -= is_unsatisfied(e.u) ? 1 : 0;
          alive_[e.u] = 0;
          for (Vertex w : g_.neighbors(e.u)) {
            if (alive_[w]) shift_degree(w, -1);
          }
        } else {
          for (Vertex w : g_.neighbors(e.u)) {
            if (alive_[w]) shift_degree(w, +1);
          }
          alive_[e.u] = 1;
          unsatisfied_ += is_unsatisfied(e.u) ? 1 : 0;
        }
        break;
    }
  }

  const Graph& g_;
  OpKind op_;
  int n_;
  int r_;
  std::vector<int> deg_;
  std::vector<char> alive_;
  std::vector<char> allowed_;
  int unsatisfied_ = 0;
};

inline std::vector<Edit> candidate_edits(const DceInstance& inst) {
  const Graph& g = inst.graph;
  std::vector<Edit> out;
  switch (inst.op) {
    case OpKind::EdgeAddition:
      for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
          if (!g.has_edge(u, v)) out.push_back(Edit::add(u, v));
        }
      }
      break;
    case OpKind::EdgeDeletion:
      for (const Edge& e : g.edges()) out.push_back(Edit::del(e.u, e.v));
      break;
    case OpKind::VertexDeletion:
      for (Vertex v = 0; v < g.vertex_count(); ++v) out.push_back(Edit::remove(v));
      break;
  }
  return out;
}

/// sum_{s=0..k} C(n, s), saturated at `cap + 1`.
inline std::uint64_t subsets_up_to(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  long double total = 0;
  long double term = 1;
  for (std::uint64_t s = 0; s <= k && s <= n; ++s) {
    if (s > 0) term = term * static_cast<long double>(n - s + 1) / static_cast<long double>(s);
    total += term;
    if (total > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::uint64_t>(total);
}

class Enumerator {
 public:
  Enumerator(const DceInstance& inst, std::vector<Edit> candidates)
      : state_(inst), candidates_(std::move(candidates)), edge_op_(inst.op != OpKind::VertexDeletion) {}

  std::optional<EditSolution> run(int k) {
    for (int size = 0; size <= k; ++size) {
      if (choose(0, size)) return EditSolution{chosen_};
    }
    return std::nullopt;
  }

 private:
  bool choose(std::size_t from, int left) {
    if (left == 0) return state_.unsatisfied() == 0;
    // Each edge edit changes exactly two degrees.
    if (edge_op_ && state_.unsatisfied() > 2 * left) return false;
    for (std::size_t i = from; i + left <= candidates_.size(); ++i) {
      state_.apply(candidates_[i]);
      chosen_.push_back(candidates_[i]);
      if (choose(i + 1, left - 1)) return true;
      chosen_.pop_back();
      state_.undo(candidates_[i]);
    }
    return false;
  }

  EditState state_;
  std::vector<Edit> candidates_;
  bool edge_op_;
  std::vector<Edit> chosen_;
};

class BranchingSearch {
 public:
  BranchingSearch(const DceInstance& inst, const SearchLimits& limits)
      : inst_(inst),
        state_(inst),
        limits_(limits),
        n_(inst.graph.vertex_count()),
        marks_(inst.op == OpKind::VertexDeletion ? static_cast<std::size_t>(n_)
                                                 : static_cast<std::size_t>(n_) * n_,
               0) {}

  std::optional<EditSolution> run(int k) {
    for (int budget = 0; budget <= k; ++budget) {
      if (descend(budget)) {
        EditSolution out{chosen_};
        std::sort(out.edits.begin(), out.edits.end());
        return out;
      }
    }
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  static constexpr char kFree = 0;
  static constexpr char kChosen = 1;
  static constexpr char kFrozen = 2;

  char& pair_mark(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return marks_[static_cast<std::size_t>(a) * n_ + b];
  }

  // Edits that would move v's degree, excluding frozen ones.
  void options_for(Vertex v, std::vector<Edit>& out) {
    out.clear();
    const Graph& g = inst_.graph;
    switch (inst_.op) {
      case OpKind::EdgeAddition:
        for (Vertex w = 0; w < n_; ++w) {
          if (w != v && pair_mark(v, w) == kFree && !g.has_edge(v, w)) out.push_back(Edit::add(v, w));
        }
        break;
      case OpKind::EdgeDeletion:
        for (Vertex w : g.neighbors(v)) {
          if (pair_mark(v, w) == kFree) out.push_back(Edit::del(v, w));
        }
        break;
      case OpKind::VertexDeletion:
        if (marks_[v] == kFree) out.push_back(Edit::remove(v));
        for (Vertex w : g.neighbors(v)) {
          if (state_.alive(w) && marks_[w] == kFree) out.push_back(Edit::remove(w));
        }
        break;
    }
  }

  char& mark_of(const Edit& e) {
    return e.kind == EditKind::DeleteVertex ? marks_[e.u] : pair_mark(e.u, e.v);
  }

  bool descend(int budget) {
    if (++nodes_ > limits_.max_nodes) {
      throw ResourceLimit("branching search exceeded " + std::to_string(limits_.max_nodes) + " nodes");
    }
    if (state_.unsatisfied() == 0) return true;
    if (budget == 0) return false;

    std::int64_t need_total = 0;
    Vertex pick = -1;
    std::size_t pick_options = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < n_; ++v) {
      if (!state_.is_unsatisfied(v)) continue;
      options_for(v, scratch_);
      int need = 1;
      if (inst_.op == OpKind::EdgeAddition) {
        int target = state_.next_up(v);
        if (target < 0) return false;
        need = target - state_.degree(v);
      } else if (inst_.op == OpKind::EdgeDeletion) {
        int target = state_.next_down(v);
        if (target < 0) return false;
        need = state_.degree(v) - target;
      }
      if (scratch_.size() < static_cast<std::size_t>(inst_.op == OpKind::VertexDeletion ? 1 : need)) return false;
      need_total += need;
      if (scratch_.size() < pick_options) {
        pick_options = scratch_.size();
        pick = v;
      }
    }
    const std::int64_t lower_bound = inst_.op == OpKind::VertexDeletion ? 1 : (need_total + 1) / 2;
    if (lower_bound > budget) return false;

    std::vector<Edit> options;
    options_for(pick, options);
    std::vector<Edit> frozen;
    bool found = false;
    for (const Edit& e : options) {
      state_.apply(e);
      mark_of(e) = kChosen;
      chosen_.push_back(e);
      if (descend(budget - 1)) {
        found = true;
        break;
      }
      chosen_.pop_back();
      state_.undo(e);
      mark_of(e) = kFrozen;
      frozen.push_back(e);
    }
    for (const Edit& e : frozen) mark_of(e) = kFree;
    return found;
  }

  const DceInstance& inst_;
  EditState state_;
  SearchLimits limits_;
  int n_;
  std::vector<char> marks_;
  std::vector<Edit> chosen_;
  std::vector<Edit> scratch_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Minimum-size solution by trying every edit set in order of size.
/// Throws ResourceLimit when more than limits.max_enumerated sets exist.
inline std::optional<EditSolution> exhaustive_enumeration(const DceInstance& inst, const SearchLimits& limits = {}) {
  validate(inst);
  auto candidates = detail::candidate_edits(inst);
  auto count = detail::subsets_up_to(candidates.size(), static_cast<std::uint64_t>(inst.k), limits.max_enumerated);
  if (count > limits.max_enumerated) {
    throw ResourceLimit("exhaustive enumeration over " + std::to_string(candidates.size()) +
                        " candidate edits with k = " + std::to_string(inst.k) + " exceeds " +
                        std::to_string(limits.max_enumerated) + " edit sets");
  }
  return detail::Enumerator(inst, std::move(candidates)).run(inst.k);
}

/// Minimum-size solution by a bounded search tree.
inline std::optional<EditSolution> bounded_search(const DceInstance& inst, const SearchLimits& limits = {}) {
  validate(inst);
  if (inst.graph.vertex_count() > limits.max_vertices) {
    throw ResourceLimit("branching search supports at most " + std::to_string(limits.max_vertices) +
                        " vertices, instance has " + std::to_string(inst.graph.vertex_count()));
  }
  return detail::BranchingSearch(inst, limits).run(inst.k);
}

/// Minimum-cardinality solution of any edit operation, or nullopt.
inline std::optional<EditSolution> brute_force_solve(const DceInstance& inst, const SearchLimits& limits = {}) {
  validate(inst);
  const auto candidates = detail::candidate_edits(inst).size();
  if (detail::subsets_up_to(candidates, static_cast<std::uint64_t>(inst.k), limits.max_enumerated) <=
      limits.max_enumerated) {
    return exhaustive_enumeration(inst, limits);
  }
  return bounded_search(inst, limits);
}

/// Kernelize with the (k, r) kernel, search inside it, and lift back.
inline std::optional<EditSolution> solve_e_plus(const DceInstance& inst, const SearchLimits& limits = {}) {
  if (inst.op != OpKind::EdgeAddition) throw InvalidInput("solve_e_plus expects an edge-addition instance");
  auto kernel = kernelize_kr(inst);
  if (std::holds_alternative<TrivialNo>(kernel)) return std::nullopt;
  const auto& reduced = std::get<ReducedInstance>(kernel);
  auto inner = brute_force_solve(reduced.instance, limits);
  if (!inner) return std::nullopt;
  EditSolution lifted = lift_solution(*inner, reduced.to_original);
  if (auto why = check_solution(inst, lifted)) {
    throw InvariantViolation("lifted kernel solution is invalid: " + *why);
  }
  return lifted;
}

}  // namespace dcekit
