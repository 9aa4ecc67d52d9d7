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

// Win-win kernel in r alone: either a large solution is found directly from
// the degree arithmetic, or k can be capped at r(r+1)^2.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dcekit/dce.hpp"
#include "dcekit/kernel.hpp"
#include "dcekit/matching.hpp"
#include "dcekit/nce.hpp"

namespace dcekit {

struct TrivialYes {
  EditSolution witness;
};

using KernelResult = std::variant<TrivialYes, TrivialNo, ReducedInstance>;

inline std::int64_t winwin_threshold(std::int64_t r) { return r * (r + 1) * (r + 1); }

namespace detail {

// Havel-Hakimi style pass on the complement: serve the vertex with the most
// remaining demand from the neighbours with the most remaining demand.
inline std::optional<std::vector<Edge>> greedy_realize(const Graph& g, const std::vector<Vertex>& a,
                                                       std::vector<int> left) {
  std::vector<Edge> out;
  std::vector<std::size_t> order(a.size());
  for (;;) {
    std::size_t top = a.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (left[i] > 0 && (top == a.size() || left[i] > left[top])) top = i;
    }
    if (top == a.size()) return out;
    order.clear();
    for (std::size_t i = 0; i < a.size(); ++i) {
      // Served vertices drop to zero, so no pair is ever offered twice.
      if (i != top && left[i] > 0 && !g.has_edge(a[top], a[i])) {
        order.push_back(i);
      }
    }
    if (order.size() < static_cast<std::size_t>(left[top])) return std::nullopt;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return left[x] > left[y]; });
    for (int t = 0, want = left[top]; t < want; ++t) {
      out.emplace_back(a[top], a[order[t]]);
      --left[order[t]];
    }
    left[top] = 0;
  }
}

}  // namespace detail

/// New edges raising every vertex v by exactly demand[v], or nullopt.
inline std::optional<std::vector<Edge>> realize_demands(const Graph& g, const DemandFunction& demand) {
  const int n = g.vertex_count();
  if (static_cast<int>(demand.size()) != n) throw InvalidInput("demand function size does not match the graph");
  std::int64_t total = 0;
  std::vector<Vertex> a;
  for (Vertex v = 0; v < n; ++v) {
    if (demand[v] < 0) throw InvalidInput("negative demand at vertex " + std::to_string(v));
    if (demand[v] > n - 1 - g.degree(v)) return std::nullopt;
    total += demand[v];
    if (demand[v] > 0) a.push_back(v);
  }
  if (total % 2 != 0) return std::nullopt;
  if (a.empty()) return std::vector<Edge>{};

  std::vector<int> f(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) f[i] = demand[a[i]];
  if (auto quick = detail::greedy_realize(g, a, f)) {
    std::sort(quick->begin(), quick->end());
    return quick;
  }
  auto sub = induced_subgraph(g, a);
  auto factor = f_factor(complement(sub.graph), f);
  if (!factor) return std::nullopt;
  std::vector<Edge> out;
  out.reserve(factor->size());
  for (const Edge& e : *factor) out.emplace_back(sub.to_original[e.u], sub.to_original[e.v]);
  std::sort(out.begin(), out.end());
  return out;
}

/// Smallest k' in [r(r+1)^2, k] whose degree arithmetic admits a k'-edge
/// completion, realized as an edge set. Requires k >= r(r+1)^2.
inline std::optional<EditSolution> try_large_solution(const DceInstance& inst) {
  validate(inst);
  if (inst.op != OpKind::EdgeAddition) throw InvalidInput("try_large_solution expects an edge-addition instance");
  const std::int64_t r = inst.r();
  const std::int64_t threshold = winwin_threshold(r);
  if (inst.k < threshold) {
    throw InvalidInput("try_large_solution needs k >= r(r+1)^2 = " + std::to_string(threshold));
  }
  const Graph& g = inst.graph;
  const int n = g.vertex_count();
  std::vector<int> degrees = g.degrees();
  std::vector<std::vector<int>> phi(static_cast<std::size_t>(n));
  std::int64_t reachable = 0;
  for (Vertex v = 0; v < n; ++v) {
    const auto& list = inst.tau.list(v);
    phi[v].assign(list.begin(), list.end());
    if (auto top = inst.tau.max_of(v); top && *top > degrees[v]) reachable += *top - degrees[v];
  }
  const std::int64_t k_max = std::min<std::int64_t>(2 * static_cast<std::int64_t>(inst.k), reachable);
  if (2 * threshold > k_max) return std::nullopt;
  detail::NceTable table(degrees, k_max, phi);

  for (std::int64_t kp = threshold; 2 * kp <= k_max; ++kp) {
    if (!table.feasible(2 * kp)) continue;
    auto target = table.traceback(2 * kp);
    DemandFunction demand(static_cast<std::size_t>(n));
    std::int64_t affected = 0;
    for (Vertex v = 0; v < n; ++v) {
      demand[v] = (*target)[v] - degrees[v];
      if (demand[v] < 0) throw InvariantViolation("negative demand from nce traceback");
      if (demand[v] > 0) ++affected;
    }
    if (kp == 0) return EditSolution{};
    if (affected < 2 * (r + 1) * (r + 1)) {
      throw InvariantViolation("only " + std::to_string(affected) + " affected vertices, expected at least " +
                               std::to_string(2 * (r + 1) * (r + 1)));
    }
    auto edges = realize_demands(g, demand);
    if (!edges) {
      throw InvariantViolation("demands for k' = " + std::to_string(kp) + " are not realizable");
    }
    return additions(*edges);
  }
  return std::nullopt;
}

/// Kernel with O(r^5) vertices, or a decided instance.
inline KernelResult kernelize_r(const DceInstance& inst) {
  validate(inst);
  if (inst.op != OpKind::EdgeAddition) throw InvalidInput("kernelize_r expects an edge-addition instance");
  const std::int64_t threshold = winwin_threshold(inst.r());
  DceInstance work = inst;
  if (work.k > threshold) {
    if (auto sol = try_large_solution(inst)) return TrivialYes{std::move(*sol)};
    work.k = static_cast<int>(threshold);
  }
  auto kr = kernelize_kr(work);
  if (auto* no = std::get_if<TrivialNo>(&kr)) return *no;
  return std::get<ReducedInstance>(std::move(kr));
}

}  // namespace dcekit
