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

// Maximum-cardinality matching in general graphs and exact f-factors built
// on top of it.

#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <vector>

#include "dcekit/error.hpp"
#include "dcekit/graph.hpp"

namespace dcekit {

/// Per-vertex number of incident edges requested (f-factor degrees, or
/// edge-addition demands).
using DemandFunction = std::vector<int>;

namespace detail {

// Edmonds' blossom algorithm with explicit base relabelling; O(n^3).
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const std::vector<std::vector<Vertex>>& adj)
      : adj_(adj), n_(static_cast<int>(adj.size())), match_(adj.size(), -1) {}

  std::vector<Vertex> run() {
    // Greedy warm start; every augmentation afterwards adds one edge.
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (Vertex w : adj_[v]) {
        if (match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (match_[root] != -1) continue;
      Vertex end = find_augmenting_path(root);
      while (end != -1) {
        Vertex pv = parent_[end];
        Vertex next = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = next;
      }
    }
    return match_;
  }

 private:
  Vertex lowest_common_base(Vertex a, Vertex b) {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    used_.assign(static_cast<std::size_t>(n_), 0);
    parent_.assign(static_cast<std::size_t>(n_), -1);
    base_.resize(static_cast<std::size_t>(n_));
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      for (Vertex to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          Vertex b = lowest_common_base(v, to);
          in_blossom_.assign(static_cast<std::size_t>(n_), 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const std::vector<std::vector<Vertex>>& adj_;
  int n_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

inline std::vector<Vertex> mate_vector(const std::vector<std::vector<Vertex>>& adj) {
  return BlossomMatcher(adj).run();
}

}  // namespace detail

/// A maximum-cardinality matching, edges in lexicographic order.
inline std::vector<Edge> max_matching(const Graph& g) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    adj[v].assign(nb.begin(), nb.end());
  }
  auto mate = detail::mate_vector(adj);
  std::vector<Edge> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (mate[v] > v) out.emplace_back(v, mate[v]);
  }
  return out;
}

/// Spanning subgraph with deg(v) = f(v) everywhere, if one exists.
///
/// Vertices with f(v) = 0 are dropped up front (none of their edges can be
/// used). On the rest, every vertex v becomes deg(v) edge stubs plus
/// deg(v) - f(v) filler vertices joined completely to the stubs, and each
/// edge joins its two stubs. Perfect matchings of that gadget graph are in
/// one-to-one correspondence with f-factors up to filler permutation: the
/// stubs of v not covered by fillers are exactly the f(v) chosen edges.
inline std::optional<std::vector<Edge>> f_factor(const Graph& g, std::span<const int> f) {
  const int n = g.vertex_count();
  if (static_cast<int>(f.size()) != n) {
    throw InvalidInput("demand function covers " + std::to_string(f.size()) + " vertices, graph has " +
                       std::to_string(n));
  }
  long long total = 0;
  std::vector<Vertex> support;
  for (Vertex v = 0; v < n; ++v) {
    if (f[v] < 0 || f[v] > g.degree(v)) return std::nullopt;
    total += f[v];
    if (f[v] > 0) support.push_back(v);
  }
  if (total % 2 != 0) return std::nullopt;
  if (support.empty()) return std::vector<Edge>{};

  auto [h, to_original] = induced_subgraph(g, support);
  const int hn = h.vertex_count();
  std::vector<int> need(static_cast<std::size_t>(hn));
  for (Vertex v = 0; v < hn; ++v) {
    need[v] = f[to_original[v]];
    if (need[v] > h.degree(v)) return std::nullopt;
  }

  // Stub layout: stub_begin[v] + position of the neighbour in v's list.
  std::vector<int> stub_begin(static_cast<std::size_t>(hn) + 1, 0);
  for (Vertex v = 0; v < hn; ++v) stub_begin[v + 1] = stub_begin[v] + h.degree(v);
  const int stub_count = stub_begin[hn];
  int filler_count = 0;
  for (Vertex v = 0; v < hn; ++v) filler_count += h.degree(v) - need[v];

  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(stub_count + filler_count));
  auto link = [&adj](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  int next_filler = stub_count;
  for (Vertex v = 0; v < hn; ++v) {
    auto nb = h.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      Vertex w = nb[i];
      if (v < w) {
        auto pos = std::lower_bound(h.neighbors(w).begin(), h.neighbors(w).end(), v) - h.neighbors(w).begin();
        link(stub_begin[v] + static_cast<int>(i), stub_begin[w] + static_cast<int>(pos));
      }
    }
    for (int j = 0; j < h.degree(v) - need[v]; ++j, ++next_filler) {
      for (int s = stub_begin[v]; s < stub_begin[v + 1]; ++s) link(next_filler, s);
    }
  }

  auto mate = detail::mate_vector(adj);
  for (int x : mate) {
    if (x == -1) return std::nullopt;
  }
  std::vector<Edge> out;
  for (Vertex v = 0; v < hn; ++v) {
    auto nb = h.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      int stub = stub_begin[v] + static_cast<int>(i);
      if (v < nb[i] && mate[stub] < stub_count) out.emplace_back(to_original[v], to_original[nb[i]]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Sufficient condition for every f: V -> {1..r} with even sum to admit an
/// f-factor: minimum degree at least n - r - 1 and n >= (r+1)^2.
inline bool kt_condition_holds(long long n, long long min_degree, long long r) {
  if (r < 1) throw InvalidInput("degree bound r must be at least 1");
  return min_degree >= n - r - 1 && n >= (r + 1) * (r + 1);
}

}  // namespace dcekit
