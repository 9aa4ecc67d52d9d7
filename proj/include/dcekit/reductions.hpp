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

// Hardness constructions as instance transformers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcekit/dce.hpp"
#include "dcekit/error.hpp"
#include "dcekit/graph.hpp"

namespace dcekit {

struct ReductionOutput {
  DceInstance instance;
  /// Role of every constructed vertex, e.g. "copy(2,v5)", "tree(3)", "leaf(1)".
  std::vector<std::string> provenance;
  /// Vertex cover used by the clique constructions (empty otherwise).
  std::vector<Vertex> cover;
  /// Copies built by the clique constructions (0 otherwise).
  int copies = 0;
};

/// Deleting at most h vertices leaves an edgeless graph iff g has a vertex cover of size h.
inline ReductionOutput vc_to_dce_vminus(const Graph& g, int h) {
  if (h < 0) throw InvalidInput("h must be nonnegative");
  ReductionOutput out{DceInstance{g, h, DegreeListFunction::uniform(g.vertex_count(), 0, {0}), OpKind::VertexDeletion},
                      {}, {}, 0};
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.provenance.push_back("vertex(" + std::to_string(v) + ")");
  return out;
}

/// Cubic g has an independent set of size h iff a new vertex of target
/// degree h can be wired to it (h more edges close the chosen set to a clique).
inline ReductionOutput is_to_dce_eplus(const Graph& g, int h) {
  if (h < 1) throw InvalidInput("h must be at least 1");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) throw InvalidInput("input graph is not cubic: vertex " + std::to_string(v) + " has degree " +
                                             std::to_string(g.degree(v)));
  }
  const int n = g.vertex_count();
  Graph out_graph(n + 1, g.edges());
  std::vector<std::vector<int>> lists(static_cast<std::size_t>(n) + 1, std::vector<int>{3, 3 + h});
  lists[n] = {h};
  ReductionOutput out{DceInstance{std::move(out_graph), h * (h - 1) / 2 + h, DegreeListFunction(3 + h, std::move(lists)),
                                  OpKind::EdgeAddition},
                      {}, {}, 0};
  for (Vertex v = 0; v < n; ++v) out.provenance.push_back("vertex(" + std::to_string(v) + ")");
  out.provenance.push_back("selector");
  return out;
}

/// Endpoints of a greedy maximal matching, a cover at most twice the optimum.
inline std::vector<Vertex> approx_vertex_cover(const Graph& g) {
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Vertex> out;
  for (const Edge& e : g.edges()) {
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      out.push_back(e.u);
      out.push_back(e.v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_vertex_cover(const Graph& g, std::span<const Vertex> x) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : x) {
    if (v < 0 || v >= g.vertex_count()) return false;
    in[v] = 1;
  }
  for (const Edge& e : g.edges()) {
    if (!in[e.u] && !in[e.v]) return false;
  }
  return true;
}

/// Partition of V \ x by neighbourhood inside x. Classes are ordered by
/// their smallest member.
inline std::vector<std::vector<Vertex>> twin_classes(const Graph& g, std::span<const Vertex> x) {
  if (!is_vertex_cover(g, x)) throw InvalidInput("twin classes need a vertex cover");
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : x) in[v] = 1;
  std::map<std::vector<Vertex>, std::size_t> index;
  std::vector<std::vector<Vertex>> classes;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in[v]) continue;
    // Outside a cover every neighbour lies in the cover.
    std::vector<Vertex> key(g.neighbors(v).begin(), g.neighbors(v).end());
    auto [it, fresh] = index.emplace(std::move(key), classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  return classes;
}

namespace detail {

inline int ceil_log2(int x) {
  int h = 0;
  while ((1 << h) < x) ++h;
  return h;
}

struct CliqueLayout {
  std::vector<Vertex> cover;
  // Vertex sets of the copies G_i, in original indices.
  std::vector<std::vector<Vertex>> copy_members;
  int height = 0;
};

inline std::optional<CliqueLayout> clique_layout(const Graph& g, int h, std::optional<std::vector<Vertex>> x) {
  if (h < 1) throw InvalidInput("h must be at least 1");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < h) {
      throw InvalidInput("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + " < h = " +
                         std::to_string(h));
    }
  }
  CliqueLayout out;
  out.cover = x ? *x : approx_vertex_cover(g);
  std::sort(out.cover.begin(), out.cover.end());
  out.cover.erase(std::unique(out.cover.begin(), out.cover.end()), out.cover.end());
  auto classes = twin_classes(g, out.cover);
  if (h > static_cast<int>(out.cover.size()) + 1) return std::nullopt;
  for (const auto& c : classes) {
    std::vector<Vertex> members = out.cover;
    members.insert(std::upper_bound(members.begin(), members.end(), c.front()), c.front());
    out.copy_members.push_back(std::move(members));
  }
  // Without twin classes the only copy is G[X]; a single copy is doubled so
  // the root keeps two children.
  if (out.copy_members.empty()) out.copy_members.push_back(out.cover);
  if (out.copy_members.size() == 1) out.copy_members.push_back(out.copy_members.front());
  out.height = ceil_log2(static_cast<int>(out.copy_members.size()));
  return out;
}

inline ReductionOutput canonical_no(OpKind op) {
  return ReductionOutput{DceInstance{Graph(1), 0, DegreeListFunction(1, {{1}}), op}, {"canonical-no"}, {}, 0};
}

// Copies first, then the tree in heap order (node j has children 2j+1 and
// 2j+2; the last `copies` nodes are the leaves).
struct CliqueSkeleton {
  std::vector<Edge> edges;
  std::vector<std::string> provenance;
  std::vector<std::vector<Vertex>> copy_vertices;  // constructed ids
  std::vector<Vertex> tree;                        // heap index -> constructed id
  int leaf_begin = 0;                              // heap index of the first leaf
  int next = 0;
};

inline CliqueSkeleton clique_skeleton(const Graph& g, const CliqueLayout& layout) {
  CliqueSkeleton s;
  const int copies = static_cast<int>(layout.copy_members.size());
  for (int i = 0; i < copies; ++i) {
    const auto& members = layout.copy_members[i];
    std::vector<Vertex> ids;
    for (Vertex v : members) {
      ids.push_back(s.next++);
      s.provenance.push_back("copy(" + std::to_string(i) + ",v" + std::to_string(v) + ")");
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (g.has_edge(members[a], members[b])) s.edges.emplace_back(ids[a], ids[b]);
      }
    }
    s.copy_vertices.push_back(std::move(ids));
  }
  const int nodes = 2 * copies - 1;
  s.leaf_begin = copies - 1;
  for (int j = 0; j < nodes; ++j) {
    s.tree.push_back(s.next++);
    if (j == 0) {
      s.provenance.push_back("root");
    } else if (j >= s.leaf_begin) {
      s.provenance.push_back("leaf(" + std::to_string(j - s.leaf_begin) + ")");
    } else {
      s.provenance.push_back("tree(" + std::to_string(j) + ")");
    }
  }
  for (int j = 1; j < nodes; ++j) s.edges.emplace_back(s.tree[(j - 1) / 2], s.tree[j]);
  return s;
}

inline std::vector<int> degrees_of(int n, const std::vector<Edge>& edges) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

inline std::vector<int> nonnegative(std::initializer_list<int> values) {
  std::vector<int> out;
  for (int v : values) {
    if (v >= 0) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline int max_listed(const std::vector<std::vector<int>>& lists) {
  int r = 0;
  for (const auto& l : lists) {
    if (!l.empty()) r = std::max(r, l.back());
  }
  return r;
}

}  // namespace detail

/// Edge-deletion instance with a clique of size h in one copy selected by a
/// binary tree. Budget C(h,2) + h + height.
inline ReductionOutput clique_to_dce_eminus(const Graph& g, int h, std::optional<std::vector<Vertex>> x = std::nullopt) {
  auto layout = detail::clique_layout(g, h, std::move(x));
  if (!layout) return detail::canonical_no(OpKind::EdgeDeletion);
  auto s = detail::clique_skeleton(g, *layout);
  const int copies = static_cast<int>(layout->copy_members.size());
  for (int i = 0; i < copies; ++i) {
    for (Vertex w : s.copy_vertices[i]) s.edges.emplace_back(s.tree[s.leaf_begin + i], w);
  }
  const int n = s.next;
  auto deg = detail::degrees_of(n, s.edges);
  std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));
  for (const auto& ids : s.copy_vertices) {
    for (Vertex w : ids) lists[w] = detail::nonnegative({deg[w], deg[w] - h});
  }
  for (int j = 0; j < static_cast<int>(s.tree.size()); ++j) {
    const Vertex t = s.tree[j];
    if (j == 0) {
      lists[t] = {1};
    } else if (j >= s.leaf_begin) {
      lists[t] = detail::nonnegative({deg[t], deg[t] - h - 1});
    } else {
      lists[t] = {1, 3};
    }
  }
  const int r = detail::max_listed(lists);
  const int k = h * (h - 1) / 2 + h + layout->height;
  return ReductionOutput{DceInstance{Graph(n, s.edges), k, DegreeListFunction(r, std::move(lists)), OpKind::EdgeDeletion},
                         std::move(s.provenance), layout->cover, copies};
}

/// Vertex-deletion variant: siblings adjacent, a connector u_i' between each
/// leaf and its copy, and a frozen clique C_i on each connector.
/// Budget height + |X| + 2 - h (the deleted root-to-leaf path has height + 1
/// vertices); C_i gets max(|X|^2, k + 1) vertices.
inline ReductionOutput clique_to_dce_vminus(const Graph& g, int h, std::optional<std::vector<Vertex>> x = std::nullopt) {
  auto layout = detail::clique_layout(g, h, std::move(x));
  if (!layout) return detail::canonical_no(OpKind::VertexDeletion);
  auto s = detail::clique_skeleton(g, *layout);
  const int copies = static_cast<int>(layout->copy_members.size());
  const int xs = static_cast<int>(layout->cover.size());
  const int k = layout->height + xs + 2 - h;
  const int clique_size = std::max(xs * xs, k + 1);

  for (int j = 1; j + 1 < static_cast<int>(s.tree.size()); j += 2) s.edges.emplace_back(s.tree[j], s.tree[j + 1]);
  std::vector<Vertex> connectors;
  std::vector<Vertex> frozen;
  for (int i = 0; i < copies; ++i) {
    const Vertex c = s.next++;
    s.provenance.push_back("connector(" + std::to_string(i) + ")");
    connectors.push_back(c);
    s.edges.emplace_back(s.tree[s.leaf_begin + i], c);
    for (Vertex w : s.copy_vertices[i]) s.edges.emplace_back(c, w);
    std::vector<Vertex> members;
    for (int t = 0; t < clique_size; ++t) {
      members.push_back(s.next++);
      s.provenance.push_back("clique(" + std::to_string(i) + ")");
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
      s.edges.emplace_back(c, members[a]);
      for (std::size_t b = a + 1; b < members.size(); ++b) s.edges.emplace_back(members[a], members[b]);
    }
    frozen.insert(frozen.end(), members.begin(), members.end());
  }

  const int n = s.next;
  auto deg = detail::degrees_of(n, s.edges);
  std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));
  for (const auto& ids : s.copy_vertices) {
    for (Vertex w : ids) lists[w] = detail::nonnegative({deg[w], h});
  }
  for (int j = 0; j < static_cast<int>(s.tree.size()); ++j) {
    const Vertex t = s.tree[j];
    if (j == 0) {
      lists[t] = {3};
    } else if (j >= s.leaf_begin) {
      lists[t] = {1, 3};
    } else {
      lists[t] = {2, 4};
    }
  }
  for (Vertex c : connectors) lists[c] = detail::nonnegative({deg[c], clique_size + h});
  for (Vertex w : frozen) lists[w] = {deg[w]};
  const int r = detail::max_listed(lists);
  return ReductionOutput{
      DceInstance{Graph(n, s.edges), k, DegreeListFunction(r, std::move(lists)), OpKind::VertexDeletion},
      std::move(s.provenance), layout->cover, copies};
}

enum class ReductionKind { VertexCover, IndependentSet, CliqueEdgeDeletion, CliqueVertexDeletion };

inline std::optional<ReductionKind> parse_reduction_kind(std::string_view s) {
  if (s == "vc") return ReductionKind::VertexCover;
  if (s == "is") return ReductionKind::IndependentSet;
  if (s == "clique-e") return ReductionKind::CliqueEdgeDeletion;
  if (s == "clique-v") return ReductionKind::CliqueVertexDeletion;
  return std::nullopt;
}

inline ReductionOutput reduce(ReductionKind kind, const Graph& g, int h) {
  switch (kind) {
    case ReductionKind::VertexCover: return vc_to_dce_vminus(g, h);
    case ReductionKind::IndependentSet: return is_to_dce_eplus(g, h);
    case ReductionKind::CliqueEdgeDeletion: return clique_to_dce_eminus(g, h);
    case ReductionKind::CliqueVertexDeletion: return clique_to_dce_vminus(g, h);
  }
  throw InvalidInput("unknown reduction");
}

}  // namespace dcekit
