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

// Seeded instance generators. Output depends only on the arguments.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dcekit/dce.hpp"
#include "dcekit/error.hpp"
#include "dcekit/graph.hpp"
#include "dcekit/reductions.hpp"

namespace dcekit {

/// G(n, p).
inline Graph gen_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InvalidInput("n must be nonnegative");
  if (p < 0.0 || p > 1.0) throw InvalidInput("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

/// G(n, p) with every degree d in 0..r listed independently with
/// probability list_density.
inline DceInstance gen_random_dce(int n, double edge_prob, int k, int r, double list_density, std::uint64_t seed,
                                  OpKind op = OpKind::EdgeAddition) {
  if (k < 0 || r < 0) throw InvalidInput("k and r must be nonnegative");
  if (list_density < 0.0 || list_density > 1.0) throw InvalidInput("list density must lie in [0, 1]");
  Graph g = gen_gnp(n, edge_prob, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::bernoulli_distribution coin(list_density);
  std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));
  for (auto& l : lists) {
    for (int d = 0; d <= r; ++d) {
      if (coin(rng)) l.push_back(d);
    }
  }
  return DceInstance{std::move(g), k, DegreeListFunction(r, std::move(lists)), op};
}

/// Uniform-ish simple d-regular graph: configuration model, then random
/// edge switches to remove loops and parallel pairs.
inline Graph gen_regular(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 0 || d >= n || (static_cast<std::int64_t>(n) * d) % 2 != 0) {
    throw InvalidInput("no simple " + std::to_string(d) + "-regular graph on " + std::to_string(n) + " vertices");
  }
  std::mt19937_64 rng(seed);
  auto key = [](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  };
  const std::size_t m = static_cast<std::size_t>(n) * d / 2;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Vertex> stubs;
    stubs.reserve(2 * m);
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), static_cast<std::size_t>(d), v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<std::pair<Vertex, Vertex>> pairs(m);
    std::unordered_map<std::uint64_t, int> count;
    count.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      pairs[i] = {stubs[2 * i], stubs[2 * i + 1]};
      ++count[key(pairs[i].first, pairs[i].second)];
    }
    auto bad = [&](std::size_t i) {
      return pairs[i].first == pairs[i].second || count[key(pairs[i].first, pairs[i].second)] > 1;
    };
    std::uniform_int_distribution<std::size_t> pick(0, m == 0 ? 0 : m - 1);
    std::uint64_t budget = 200 * static_cast<std::uint64_t>(m) + 1000;
    for (;;) {
      std::vector<std::size_t> broken;
      for (std::size_t i = 0; i < m; ++i) {
        if (bad(i)) broken.push_back(i);
      }
      if (broken.empty()) {
        std::vector<Edge> edges;
        edges.reserve(m);
        for (const auto& [a, b] : pairs) edges.emplace_back(a, b);
        return Graph(n, edges);
      }
      for (std::size_t i : broken) {
        while (bad(i) && budget > 0) {
          --budget;
          std::size_t j = pick(rng);
          if (j == i) continue;
          auto [a, b] = pairs[i];
          auto [c, e] = pairs[j];
          if (rng() & 1) std::swap(c, e);
          if (a == c || b == e || key(a, c) == key(b, e)) continue;
          if (count[key(a, c)] > 0 || count[key(b, e)] > 0) continue;
          --count[key(a, b)];
          --count[key(pairs[j].first, pairs[j].second)];
          pairs[i] = {a, c};
          pairs[j] = {b, e};
          ++count[key(a, c)];
          ++count[key(b, e)];
        }
        if (budget == 0) break;
      }
      if (budget == 0) break;
    }
  }
  throw ResourceLimit("could not build a simple " + std::to_string(d) + "-regular graph on " + std::to_string(n) +
                      " vertices");
}

/// Random simple cubic graph; n must be even and at least 4.
inline Graph gen_cubic(int n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw InvalidInput("cubic graphs need an even n >= 4, got " + std::to_string(n));
  return gen_regular(n, 3, seed);
}

/// Random source graph meeting the reduction's preconditions, reduced.
/// Clique reductions retry G(n, p) until every degree is at least h.
inline ReductionOutput gen_from_reduction(ReductionKind kind, int n, double edge_prob, int h, std::uint64_t seed) {
  if (kind == ReductionKind::IndependentSet) return is_to_dce_eplus(gen_cubic(n, seed), h);
  for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
    Graph g = gen_gnp(n, edge_prob, seed + attempt);
    if (kind == ReductionKind::VertexCover) return vc_to_dce_vminus(g, h);
    if (g.vertex_count() > 0 && g.min_degree() >= h) return reduce(kind, g, h);
  }
  throw InvalidInput("no G(" + std::to_string(n) + ", p) sample with minimum degree >= " + std::to_string(h));
}

}  // namespace dcekit
