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
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dcekit/error.hpp"

namespace dcekit {

/// Vertex index, 0-based.
using Vertex = int;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with sorted adjacency lists. Immutable once built.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : adj_(static_cast<std::size_t>(check_count(n))) {}

  /// Throws InvalidInput on out-of-range endpoints or self-loops and
  /// Conflict on repeated edges.
  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v >= n) {
        throw InvalidInput("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           "} has an endpoint outside 0.." + std::to_string(n - 1));
      }
      if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      auto& list = adj_[v];
      std::sort(list.begin(), list.end());
      auto dup = std::adjacent_find(list.begin(), list.end());
      if (dup != list.end()) {
        throw Conflict("parallel edge {" + std::to_string(v) + "," + std::to_string(*dup) + "}");
      }
    }
    edge_count_ = edges.size();
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count()) return false;
    const auto& list = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
    Vertex other = adj_[a].size() <= adj_[b].size() ? b : a;
    return std::binary_search(list.begin(), list.end(), other);
  }

  int max_degree() const noexcept {
    int best = 0;
    for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
    return best;
  }

  /// 0 for the empty graph.
  int min_degree() const noexcept {
    if (adj_.empty()) return 0;
    int best = static_cast<int>(adj_.front().size());
    for (const auto& list : adj_) best = std::min(best, static_cast<int>(list.size()));
    return best;
  }

  std::vector<int> degrees() const {
    std::vector<int> out(adj_.size());
    for (std::size_t v = 0; v < adj_.size(); ++v) out[v] = static_cast<int>(adj_[v].size());
    return out;
  }

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u) {
      for (Vertex w : adj_[u]) {
        if (u < w) out.emplace_back(u, w);
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  static int check_count(int n) {
    if (n < 0) throw InvalidInput("negative vertex count");
    return n;
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// Vertex degrees in nonincreasing order.
struct DegreeSequence {
  std::vector<int> values;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

inline DegreeSequence make_degree_sequence(std::vector<int> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  return DegreeSequence{std::move(values)};
}

inline DegreeSequence degree_sequence(const Graph& g) { return make_degree_sequence(g.degrees()); }

inline Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  const std::size_t pairs = n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<Edge> edges;
  edges.reserve(pairs - g.edge_count());
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    auto it = std::upper_bound(nb.begin(), nb.end(), u);
    for (Vertex w = u + 1; w < n; ++w) {
      if (it != nb.end() && *it == w) {
        ++it;
        continue;
      }
      edges.emplace_back(u, w);
    }
  }
  return Graph(n, edges);
}

/// G[vs] together with the map from new indices to the original ones.
/// New vertex i corresponds to the i-th smallest vertex of vs.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vs) {
  const int n = g.vertex_count();
  std::vector<Vertex> keep(vs.begin(), vs.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<Vertex> to_new(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= n) {
      throw InvalidInput("vertex " + std::to_string(keep[i]) + " out of range");
    }
    to_new[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex u : keep) {
    for (Vertex w : g.neighbors(u)) {
      if (u < w && to_new[w] >= 0) edges.emplace_back(to_new[u], to_new[w]);
    }
  }
  return {Graph(static_cast<int>(keep.size()), edges), std::move(keep)};
}

/// G - vs.
inline InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> vs) {
  std::vector<char> drop(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : vs) {
    if (v < 0 || v >= g.vertex_count()) {
      throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    }
    drop[v] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

/// G + es. Every edge must be new and distinct.
inline Graph add_edges(const Graph& g, std::span<const Edge> es) {
  std::vector<Edge> edges = g.edges();
  std::vector<Edge> added(es.begin(), es.end());
  for (const Edge& e : added) {
    if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= g.vertex_count()) {
      throw InvalidInput("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} out of range");
    }
    if (g.has_edge(e.u, e.v)) {
      throw Conflict("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} already present");
    }
  }
  std::sort(added.begin(), added.end());
  if (auto dup = std::adjacent_find(added.begin(), added.end()); dup != added.end()) {
    throw Conflict("edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "} added twice");
  }
  edges.insert(edges.end(), added.begin(), added.end());
  return Graph(g.vertex_count(), edges);
}

/// G - es. Every edge must be present and distinct.
inline Graph delete_edges(const Graph& g, std::span<const Edge> es) {
  std::vector<Edge> removed(es.begin(), es.end());
  std::sort(removed.begin(), removed.end());
  if (auto dup = std::adjacent_find(removed.begin(), removed.end()); dup != removed.end()) {
    throw Conflict("edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "} deleted twice");
  }
  for (const Edge& e : removed) {
    if (!g.has_edge(e.u, e.v)) {
      throw Conflict("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not present");
    }
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(removed.begin(), removed.end(), e)) kept.push_back(e);
  }
  return Graph(g.vertex_count(), kept);
}

}  // namespace dcekit
