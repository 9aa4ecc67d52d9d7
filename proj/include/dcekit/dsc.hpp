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

// Degree sequence completion: add at most k edges so that the degree
// sequence satisfies a property Pi.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dcekit/error.hpp"
#include "dcekit/graph.hpp"
#include "dcekit/search.hpp"
#include "dcekit/winwin.hpp"

namespace dcekit {

/// Increments x_1..x_n with sum target, d_i + x_i <= delta, fulfilling Pi.
using NscSolver =
    std::function<std::optional<std::vector<int>>(const std::vector<int>& degrees, std::int64_t target, int delta)>;

struct PiProperty {
  std::string name;
  std::vector<int> params;
  std::function<bool(const DegreeSequence&)> fulfills;
  NscSolver nsc;  // empty: use the generic enumeration

  /// "name p1 p2 ...", the form used in instance files.
  std::string describe() const {
    std::string out = name;
    for (int p : params) out += " " + std::to_string(p);
    return out;
  }
};

struct DscInstance {
  Graph graph;
  int k = 0;
  PiProperty property;
  std::optional<int> delta_prime;
};

struct DscLimits {
  /// Largest block set the FPT enumeration accepts.
  std::size_t max_block_set = 256;
  /// Edge sets the FPT enumeration may visit.
  std::uint64_t max_enumerated = 20'000'000;
  /// Increment vectors the generic NSC enumeration may visit.
  std::uint64_t max_nsc_vectors = 1'000'000;
};

// ---------------------------------------------------------------------------
// Built-in properties

inline bool anonymity_fulfills(const DegreeSequence& t, int k_anon) {
  if (k_anon < 1) throw InvalidInput("k_anon must be at least 1");
  std::map<int, int> count;
  for (int d : t.values) ++count[d];
  for (const auto& [d, c] : count) {
    if (c < k_anon) return false;
  }
  return true;
}

/// Group the degrees (largest first) into runs of at least k_anon that share
/// a final value. Sorting keeps an optimal assignment monotone, so runs are
/// contiguous; a run of 2*k_anon or more splits into two, so runs are short.
inline std::optional<std::vector<int>> anonymity_nsc(const std::vector<int>& degrees, int k_anon,
                                                     std::int64_t target, int delta) {
  if (k_anon < 1) throw InvalidInput("k_anon must be at least 1");
  const int n = static_cast<int>(degrees.size());
  if (target < 0) return std::nullopt;
  for (int d : degrees) {
    if (d > delta) return std::nullopt;
  }
  if (n == 0) return target == 0 ? std::optional<std::vector<int>>(std::vector<int>{}) : std::nullopt;
  if (n < k_anon) return std::nullopt;

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degrees[a] > degrees[b]; });
  std::vector<std::int64_t> prefix(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + degrees[order[i]];

  const std::size_t width = static_cast<std::size_t>(target) + 1;
  // parent[pos * width + sum]: the last run of the first state reaching it.
  struct Step {
    int from = -1;
    int value = -1;
  };
  std::vector<Step> parent((static_cast<std::size_t>(n) + 1) * width);
  std::vector<char> reach((static_cast<std::size_t>(n) + 1) * width, 0);
  reach[0] = 1;
  const int longest = 2 * k_anon - 1;
  for (int pos = 0; pos < n; ++pos) {
    const int top = degrees[order[pos]];
    for (std::size_t sum = 0; sum < width; ++sum) {
      if (!reach[pos * width + sum]) continue;
      for (int end = pos + k_anon; end <= std::min(n, pos + longest); ++end) {
        const std::int64_t len = end - pos;
        const std::int64_t base = prefix[end] - prefix[pos];
        for (int w = top; w <= delta; ++w) {
          const std::int64_t next = static_cast<std::int64_t>(sum) + len * w - base;
          if (next >= static_cast<std::int64_t>(width)) break;
          const std::size_t cell = static_cast<std::size_t>(end) * width + static_cast<std::size_t>(next);
          if (!reach[cell]) {
            reach[cell] = 1;
            parent[cell] = Step{pos, w};
          }
        }
      }
    }
  }
  if (!reach[static_cast<std::size_t>(n) * width + static_cast<std::size_t>(target)]) return std::nullopt;

  std::vector<int> x(static_cast<std::size_t>(n), 0);
  int pos = n;
  std::size_t sum = static_cast<std::size_t>(target);
  while (pos > 0) {
    const Step step = parent[static_cast<std::size_t>(pos) * width + sum];
    for (int i = step.from; i < pos; ++i) {
      x[order[i]] = step.value - degrees[order[i]];
      sum -= static_cast<std::size_t>(x[order[i]]);
    }
    pos = step.from;
  }
  std::vector<int> done(degrees);
  for (int i = 0; i < n; ++i) done[i] += x[i];
  if (!anonymity_fulfills(make_degree_sequence(done), k_anon)) {
    throw InvariantViolation("anonymity_nsc produced a non-anonymous sequence");
  }
  return x;
}

/// All degrees equal (to `degree` when given).
inline PiProperty regular_property(std::optional<int> degree = std::nullopt) {
  PiProperty p;
  p.name = "regular";
  if (degree) {
    if (*degree < 0) throw InvalidInput("regular degree must be nonnegative");
    p.params = {*degree};
  }
  p.fulfills = [degree](const DegreeSequence& t) {
    for (int d : t.values) {
      if (d != (degree ? *degree : t.values.front())) return false;
    }
    return true;
  };
  p.nsc = [degree](const std::vector<int>& degrees, std::int64_t target,
                   int delta) -> std::optional<std::vector<int>> {
    if (degrees.empty()) return target == 0 ? std::optional<std::vector<int>>(std::vector<int>{}) : std::nullopt;
    const int top = *std::max_element(degrees.begin(), degrees.end());
    std::int64_t base = 0;
    for (int d : degrees) base += d;
    const int lo = degree ? *degree : top;
    const int hi = degree ? std::min(*degree, delta) : delta;
    for (int c = std::max(lo, top); c <= hi; ++c) {
      if (static_cast<std::int64_t>(c) * static_cast<std::int64_t>(degrees.size()) - base != target) continue;
      std::vector<int> x(degrees.size());
      for (std::size_t i = 0; i < degrees.size(); ++i) x[i] = c - degrees[i];
      return x;
    }
    return std::nullopt;
  };
  return p;
}

/// At least l vertices of degree at least l.
inline PiProperty hindex_property(int l) {
  if (l < 0) throw InvalidInput("h-index bound must be nonnegative");
  PiProperty p;
  p.name = "hindex";
  p.params = {l};
  p.fulfills = [l](const DegreeSequence& t) {
    return std::count_if(t.values.begin(), t.values.end(), [l](int d) { return d >= l; }) >= l;
  };
  return p;
}

/// Every occurring degree occurs exactly l times.
inline PiProperty balanced_property(int l) {
  if (l < 1) throw InvalidInput("balance count must be at least 1");
  PiProperty p;
  p.name = "balanced";
  p.params = {l};
  p.fulfills = [l](const DegreeSequence& t) {
    std::map<int, int> count;
    for (int d : t.values) ++count[d];
    return std::all_of(count.begin(), count.end(), [l](const auto& kv) { return kv.second == l; });
  };
  return p;
}

/// Every occurring degree occurs at least k_anon times.
inline PiProperty anonymity_property(int k_anon) {
  if (k_anon < 1) throw InvalidInput("k_anon must be at least 1");
  PiProperty p;
  p.name = "anon";
  p.params = {k_anon};
  p.fulfills = [k_anon](const DegreeSequence& t) { return anonymity_fulfills(t, k_anon); };
  p.nsc = [k_anon](const std::vector<int>& degrees, std::int64_t target, int delta) {
    return anonymity_nsc(degrees, k_anon, target, delta);
  };
  return p;
}

/// Property from its file/CLI spelling: "regular [d]", "anon k", "hindex l", "balanced l".
inline PiProperty make_property(const std::string& name, const std::vector<int>& params) {
  auto want = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi) throw InvalidInput("wrong parameter count for property " + name);
  };
  if (name == "regular") {
    want(0, 1);
    return params.empty() ? regular_property() : regular_property(params[0]);
  }
  if (name == "anon") {
    want(1, 1);
    return anonymity_property(params[0]);
  }
  if (name == "hindex") {
    want(1, 1);
    return hindex_property(params[0]);
  }
  if (name == "balanced") {
    want(1, 1);
    return balanced_property(params[0]);
  }
  throw InvalidInput("unknown property '" + name + "'");
}

// ---------------------------------------------------------------------------
// Blocks

/// Vertices of degree exactly d.
inline std::vector<Vertex> block(const Graph& g, int d) {
  if (d < 0) throw InvalidInput("block degree must be nonnegative");
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == d) out.push_back(v);
  }
  return out;
}

/// The lowest-index min(alpha, |block(d)|) vertices of every block
/// d = 0..maxdeg, alpha = (maxdeg + 2) k.
inline std::vector<Vertex> block_set(const Graph& g, int k) {
  if (k < 0) throw InvalidInput("k must be nonnegative");
  const std::int64_t alpha = static_cast<std::int64_t>(g.max_degree() + 2) * k;
  std::vector<std::int64_t> taken(static_cast<std::size_t>(g.max_degree()) + 1, 0);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (taken[g.degree(v)]++ < alpha) out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Solvers

namespace detail {

inline bool fulfills_degrees(const PiProperty& p, const std::vector<int>& degrees) {
  return p.fulfills(make_degree_sequence(degrees));
}

inline bool nsc_witness_ok(const PiProperty& p, const std::vector<int>& degrees, std::int64_t target, int delta,
                           const std::vector<int>& x) {
  if (x.size() != degrees.size()) return false;
  std::int64_t sum = 0;
  std::vector<int> done(degrees);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || degrees[i] + x[i] > delta) return false;
    sum += x[i];
    done[i] += x[i];
  }
  return sum == target && fulfills_degrees(p, done);
}

class GenericNsc {
 public:
  GenericNsc(const PiProperty& p, const std::vector<int>& degrees, int delta, std::uint64_t cap)
      : p_(p), degrees_(degrees), current_(degrees), delta_(delta), cap_(cap) {
    suffix_room_.assign(degrees.size() + 1, 0);
    for (std::size_t i = degrees.size(); i-- > 0;) suffix_room_[i] = suffix_room_[i + 1] + (delta - degrees[i]);
  }

  std::optional<std::vector<int>> run(std::int64_t target) {
    if (place(0, target)) {
      std::vector<int> x(degrees_.size());
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = current_[i] - degrees_[i];
      return x;
    }
    return std::nullopt;
  }

 private:
  bool place(std::size_t i, std::int64_t left) {
    if (left > suffix_room_[i]) return false;
    if (i == degrees_.size()) {
      if (++visited_ > cap_) {
        throw ResourceLimit("generic NSC enumeration exceeded " + std::to_string(cap_) + " increment vectors");
      }
      return left == 0 && fulfills_degrees(p_, current_);
    }
    for (int x = 0; x <= delta_ - degrees_[i] && x <= left; ++x) {
      current_[i] = degrees_[i] + x;
      if (place(i + 1, left - x)) return true;
    }
    current_[i] = degrees_[i];
    return false;
  }

  const PiProperty& p_;
  const std::vector<int>& degrees_;
  std::vector<int> current_;
  int delta_;
  std::uint64_t cap_;
  std::vector<std::int64_t> suffix_room_;
  std::uint64_t visited_ = 0;
};

// Edge sets of size 0..k among non-edges inside `pool`, smallest first.
class CompletionSearch {
 public:
  CompletionSearch(const Graph& g, const PiProperty& p, std::vector<Edge> candidates, std::optional<int> cap)
      : p_(p), degrees_(g.degrees()), candidates_(std::move(candidates)), cap_(cap) {}

  std::optional<std::vector<Edge>> run(int k) {
    for (int size = 0; size <= k; ++size) {
      if (choose(0, size)) return chosen_;
    }
    return std::nullopt;
  }

 private:
  bool choose(std::size_t from, int left) {
    if (left == 0) return fulfills_degrees(p_, degrees_);
    for (std::size_t i = from; i + left <= candidates_.size(); ++i) {
      const Edge& e = candidates_[i];
      if (cap_ && (degrees_[e.u] >= *cap_ || degrees_[e.v] >= *cap_)) continue;
      ++degrees_[e.u];
      ++degrees_[e.v];
      chosen_.push_back(e);
      if (choose(i + 1, left - 1)) return true;
      chosen_.pop_back();
      --degrees_[e.u];
      --degrees_[e.v];
    }
    return false;
  }

  const PiProperty& p_;
  std::vector<int> degrees_;
  std::vector<Edge> candidates_;
  std::optional<int> cap_;
  std::vector<Edge> chosen_;
};

inline std::optional<std::vector<Edge>> fpt_search(const Graph& g, const PiProperty& p, int k,
                                                   std::optional<int> degree_cap, const DscLimits& limits) {
  if (!p.fulfills) throw InvalidInput("property " + p.name + " has no fulfills test");
  auto pool = block_set(g, k);
  if (pool.size() > limits.max_block_set) {
    throw ResourceLimit("block set has " + std::to_string(pool.size()) + " vertices, limit is " +
                        std::to_string(limits.max_block_set));
  }
  std::vector<Edge> candidates;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      if (!g.has_edge(pool[i], pool[j])) candidates.emplace_back(pool[i], pool[j]);
    }
  }
  if (subsets_up_to(candidates.size(), static_cast<std::uint64_t>(k), limits.max_enumerated) >
      limits.max_enumerated) {
    throw ResourceLimit("completion search over " + std::to_string(candidates.size()) + " pairs with k = " +
                        std::to_string(k) + " exceeds " + std::to_string(limits.max_enumerated) + " edge sets");
  }
  return CompletionSearch(g, p, std::move(candidates), degree_cap).run(k);
}

}  // namespace detail

/// Increments for the number problem, through the property's own solver or
/// the generic enumeration. The witness is checked before it is returned.
inline std::optional<std::vector<int>> pi_nsc_decide(const PiProperty& p, const std::vector<int>& degrees,
                                                     std::int64_t target, int delta, const DscLimits& limits = {}) {
  if (target < 0) return std::nullopt;
  for (int d : degrees) {
    if (d > delta) return std::nullopt;
  }
  std::optional<std::vector<int>> x =
      p.nsc ? p.nsc(degrees, target, delta) : detail::GenericNsc(p, degrees, delta, limits.max_nsc_vectors).run(target);
  if (x && !detail::nsc_witness_ok(p, degrees, target, delta, *x)) {
    throw InvariantViolation("NSC witness for property " + p.describe() + " violates its conditions");
  }
  return x;
}

/// Smallest edge set (at most k edges) inside the block set whose addition
/// makes the degree sequence fulfill the property.
inline std::optional<std::vector<Edge>> dsc_fpt_solve(const DscInstance& inst, const DscLimits& limits = {}) {
  if (inst.k < 0) throw InvalidInput("k must be nonnegative");
  return detail::fpt_search(inst.graph, inst.property, inst.k, std::nullopt, limits);
}

inline std::int64_t dsc_threshold(std::int64_t delta_prime) { return delta_prime * (delta_prime + 1) * (delta_prime + 1); }

struct DscLargeYes {
  std::vector<Edge> witness;
};

struct DscClamp {
  int k = 0;
};

using DscBoundOutcome = std::variant<DscLargeYes, DscClamp>;

/// Either a completion with k' >= Delta'(Delta'+1)^2 edges, or the budget
/// to which k can be clamped.
inline DscBoundOutcome dsc_bound_k(const DscInstance& inst, const DscLimits& limits = {}) {
  if (!inst.delta_prime) throw InvalidInput("dsc_bound_k needs a maximum degree bound");
  const int dp = *inst.delta_prime;
  const std::int64_t threshold = dsc_threshold(dp);
  if (inst.k <= threshold) {
    throw InvalidInput("dsc_bound_k needs k > " + std::to_string(threshold));
  }
  const Graph& g = inst.graph;
  if (g.max_degree() > dp) throw InvalidInput("maximum degree bound is below the current maximum degree");
  const std::vector<int> degrees = g.degrees();
  std::int64_t room = 0;
  for (int d : degrees) room += dp - d;

  for (std::int64_t kp = threshold; kp <= inst.k && 2 * kp <= room; ++kp) {
    auto x = pi_nsc_decide(inst.property, degrees, 2 * kp, dp, limits);
    if (!x) continue;
    if (kp == 0) return DscLargeYes{};
    auto edges = realize_demands(g, *x);
    if (!edges) throw InvariantViolation("increments for k' = " + std::to_string(kp) + " are not realizable");
    return DscLargeYes{std::move(*edges)};
  }
  return DscClamp{static_cast<int>(threshold)};
}

/// Full pipeline: bound k through the number problem when a maximum degree
/// is given, then search the block set.
inline std::optional<std::vector<Edge>> dsc_solve(const DscInstance& inst, const DscLimits& limits = {}) {
  if (inst.k < 0) throw InvalidInput("k must be nonnegative");
  if (detail::fulfills_degrees(inst.property, inst.graph.degrees())) return std::vector<Edge>{};
  if (!inst.delta_prime) return detail::fpt_search(inst.graph, inst.property, inst.k, std::nullopt, limits);
  const int dp = *inst.delta_prime;
  if (dp < inst.graph.max_degree()) throw InvalidInput("maximum degree bound is below the current maximum degree");
  int k = inst.k;
  if (k > dsc_threshold(dp)) {
    auto outcome = dsc_bound_k(inst, limits);
    if (auto* yes = std::get_if<DscLargeYes>(&outcome)) return std::move(yes->witness);
    k = std::get<DscClamp>(outcome).k;
  }
  return detail::fpt_search(inst.graph, inst.property, k, dp, limits);
}

/// At most s new edges making every occurring degree occur k_anon times or more.
inline std::optional<std::vector<Edge>> anonymize(const Graph& g, int k_anon, int s, const DscLimits& limits = {}) {
  if (s < 0) throw InvalidInput("budget s must be nonnegative");
  DscInstance inst{g, s, anonymity_property(k_anon), g.max_degree() + s};
  return dsc_solve(inst, limits);
}

/// Reason the edge set fails the instance, or nullopt when it solves it.
inline std::optional<std::string> check_dsc_solution(const DscInstance& inst, const std::vector<Edge>& edges) {
  if (static_cast<std::int64_t>(edges.size()) > inst.k) {
    return std::to_string(edges.size()) + " edges exceed budget " + std::to_string(inst.k);
  }
  Graph h;
  try {
    h = add_edges(inst.graph, edges);
  } catch (const std::invalid_argument& e) {
    return std::string(e.what());
  }
  if (inst.delta_prime && h.max_degree() > *inst.delta_prime) {
    return "maximum degree " + std::to_string(h.max_degree()) + " exceeds " + std::to_string(*inst.delta_prime);
  }
  if (!inst.property.fulfills(degree_sequence(h))) return "degree sequence does not fulfill " + inst.property.describe();
  return std::nullopt;
}

}  // namespace dcekit
