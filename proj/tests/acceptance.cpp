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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dcekit/dcekit.hpp"
#include "support/oracles.hpp"

#ifndef DCEKIT_CLI_PATH
#define DCEKIT_CLI_PATH "dcekit"
#endif

using namespace dcekit;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates failures, keeping the first few messages.
struct Tally {
  long long cases = 0;
  long long failures = 0;
  std::vector<std::string> first;

  void fail(const std::string& what) {
    ++failures;
    if (first.size() < 3) first.push_back(what);
  }
  std::string failures_text() const {
    std::string out;
    for (const auto& f : first) out += "; " + f;
    return out;
  }
};

bool yes(const std::optional<EditSolution>& s) { return s.has_value(); }

std::vector<int> degrees_with(const Graph& g, const std::vector<Edge>& extra) {
  auto d = g.degrees();
  for (const Edge& e : extra) ++d[e.u], ++d[e.v];
  return d;
}

int ceil_log2(int x) {
  int h = 0;
  while ((1 << h) < x) ++h;
  return h;
}

// ---------------------------------------------------------------------------

Outcome kernel_equivalence() {
  std::mt19937_64 rng(101);
  Tally t;
  int yes_count = 0, oracle_checked = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const int k = static_cast<int>(rng() % 5);
    const int r = static_cast<int>(rng() % 6);
    const double p = 0.1 + 0.4 * static_cast<double>(rng() % 100) / 100.0;
    const double density = 0.2 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
    DceInstance inst = gen_random_dce(n, p, k, r, density, rng(), OpKind::EdgeAddition);
    ++t.cases;
    const bool orig = yes(brute_force_solve(inst));
    yes_count += orig;
    if (n <= 8) {
      ++oracle_checked;
      if (oracle::dce_minimum(inst).has_value() != orig) t.fail("search disagrees with oracle, trial " + std::to_string(trial));
    }
    auto kernel = kernelize_kr(inst);
    bool reduced = false;
    if (auto* red = std::get_if<ReducedInstance>(&kernel)) {
      reduced = yes(brute_force_solve(red->instance));
      if (red->instance.graph.vertex_count() > kr_kernel_bound(inst.k, inst.r())) {
        t.fail("kernel of trial " + std::to_string(trial) + " exceeds bound");
      }
    }
    if (reduced != orig) t.fail("kernel answer differs, trial " + std::to_string(trial));
  }
  return {t.failures == 0, std::to_string(t.cases) + " instances (" + std::to_string(yes_count) + " yes, " +
                               std::to_string(oracle_checked) + " also oracle-checked), " + std::to_string(t.failures) +
                               " mismatches" + t.failures_text()};
}

Outcome nce_exactness() {
  std::mt19937_64 rng(102);
  Tally t;
  int yes_count = 0;
  for (int trial = 0; trial < 12000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int r = static_cast<int>(rng() % 5);
    const int k = static_cast<int>(rng() % 11);
    NceInstance inst{{}, k, r, {}};
    for (int i = 0; i < n; ++i) {
      inst.degrees.push_back(static_cast<int>(rng() % (r + 2)));
      std::vector<int> list;
      for (int x = 0; x <= r; ++x) {
        if (rng() % 2) list.push_back(x);
      }
      inst.phi.push_back(list);
    }
    ++t.cases;
    const bool expect = oracle::nce(inst.degrees, inst.k, inst.phi);
    const bool got = nce_decide(inst);
    yes_count += got;
    if (got != expect) t.fail("decision mismatch, trial " + std::to_string(trial));
    auto d = nce_traceback(inst);
    if (d.has_value() != expect) {
      t.fail("traceback presence mismatch, trial " + std::to_string(trial));
      continue;
    }
    if (!d) continue;
    std::int64_t sum = 0;
    bool ok = d->size() == inst.degrees.size();
    for (std::size_t i = 0; ok && i < d->size(); ++i) {
      const auto& list = inst.phi[i];
      ok = (*d)[i] >= inst.degrees[i] && std::find(list.begin(), list.end(), (*d)[i]) != list.end();
      sum += (*d)[i] - inst.degrees[i];
    }
    if (!ok || sum != inst.k) t.fail("invalid witness, trial " + std::to_string(trial));
  }
  return {t.failures == 0, std::to_string(t.cases) + " cases (" + std::to_string(yes_count) + " yes), " +
                               std::to_string(t.failures) + " mismatches" + t.failures_text()};
}

Outcome f_factor_exactness() {
  std::mt19937_64 rng(103);
  Tally t;
  int yes_count = 0;
  while (t.cases < 250) {
    const int n = 2 + static_cast<int>(rng() % 8);
    Graph g = gen_gnp(n, 0.2 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng());
    if (g.edge_count() > 16) continue;
    std::vector<int> f(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) f[v] = static_cast<int>(rng() % (g.degree(v) + 1));
    ++t.cases;
    const bool expect = oracle::has_f_factor(g, f);
    auto factor = f_factor(g, f);
    yes_count += factor.has_value();
    if (factor.has_value() != expect) {
      t.fail("mismatch on case " + std::to_string(t.cases));
      continue;
    }
    if (!factor) continue;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    bool ok = true;
    for (const Edge& e : *factor) {
      ok = ok && g.has_edge(e.u, e.v);
      ++deg[e.u], ++deg[e.v];
    }
    if (!ok || deg != f) t.fail("factor not degree-exact on case " + std::to_string(t.cases));
  }
  return {t.failures == 0, std::to_string(t.cases) + " graphs with m <= 16 (" + std::to_string(yes_count) +
                               " with factor), " + std::to_string(t.failures) + " mismatches" + t.failures_text()};
}

Outcome dense_sufficiency() {
  std::mt19937_64 rng(104);
  Tally t;
  while (t.cases < 150) {
    const int r = 1 + static_cast<int>(rng() % 2);
    const int lo = (r + 1) * (r + 1);
    const int n = lo + static_cast<int>(rng() % (26 - lo));
    // Complete graph thinned while the minimum degree stays >= n - r - 1.
    std::vector<Edge> all;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
    }
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<int> missing(static_cast<std::size_t>(n), 0);
    std::vector<Edge> kept;
    for (const Edge& e : all) {
      if (rng() % 2 && missing[e.u] < r && missing[e.v] < r) {
        ++missing[e.u], ++missing[e.v];
      } else {
        kept.push_back(e);
      }
    }
    Graph g(n, kept);
    if (!kt_condition_holds(n, g.min_degree(), r)) continue;
    std::vector<int> f(static_cast<std::size_t>(n));
    for (auto& x : f) x = 1 + static_cast<int>(rng() % r);
    if (std::accumulate(f.begin(), f.end(), 0) % 2) {
      auto it = std::find_if(f.begin(), f.end(), [r](int x) { return x < r; });
      if (it != f.end()) {
        ++*it;
      } else {
        --f.front();
        if (f.front() == 0) f.front() = r == 1 ? 1 : 2, f.back() = f.back() == r ? r - 1 : f.back() + 1;
      }
    }
    if (std::accumulate(f.begin(), f.end(), 0) % 2 || *std::min_element(f.begin(), f.end()) < 1) continue;
    ++t.cases;
    auto factor = f_factor(g, f);
    if (!factor) {
      t.fail("no factor for n=" + std::to_string(n) + " r=" + std::to_string(r));
      continue;
    }
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const Edge& e : *factor) ++deg[e.u], ++deg[e.v];
    if (deg != f) t.fail("factor not degree-exact");
  }
  return {t.failures == 0, std::to_string(t.cases) + " dense graphs with r in {1,2}, n <= 25, " +
                               std::to_string(t.failures) + " failures" + t.failures_text()};
}

Outcome winwin() {
  std::mt19937_64 rng(105);
  Tally t;
  int nce_yes = 0;
  // r = 1: isolated vertices want degree 1, matched vertices stay at 1.
  while (nce_yes < 200) {
    const int k = 4 + static_cast<int>(rng() % 5);
    const int pairs = static_cast<int>(rng() % 4);
    const int isolated = 6 + static_cast<int>(rng() % 11);
    const int n = 2 * pairs + isolated;
    std::vector<Edge> edges;
    for (int i = 0; i < pairs; ++i) edges.emplace_back(2 * i, 2 * i + 1);
    Graph g(n, edges);
    std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) == 1) {
        lists[v] = {1};
      } else {
        lists[v] = rng() % 4 ? std::vector<int>{1} : std::vector<int>{0, 1};
      }
    }
    DceInstance inst{g, k, DegreeListFunction(1, lists), OpKind::EdgeAddition};
    const auto d = g.degrees();
    bool some = false;
    for (int kp = 4; kp <= k && !some; ++kp) some = oracle::nce(d, 2 * kp, lists);
    if (!some) continue;
    ++nce_yes;
    ++t.cases;
    std::optional<EditSolution> sol;
    try {
      sol = try_large_solution(inst);
    } catch (const std::exception& e) {
      t.fail(std::string("threw: ") + e.what());
      continue;
    }
    if (!sol) {
      t.fail("no witness for an nce-yes instance");
    } else if (auto why = check_solution(inst, *sol)) {
      t.fail("invalid witness: " + *why);
    } else if (sol->size() < 4) {
      t.fail("witness below threshold");
    }
  }
  // Kernel size on random instances with r in {1,2}.
  int kernels = 0, decided = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 2);
    const int n = 4 + static_cast<int>(rng() % 40);
    const int k = static_cast<int>(rng() % 40);
    DceInstance inst = gen_random_dce(n, 0.03, k, r, 0.5, rng(), OpKind::EdgeAddition);
    ++t.cases;
    auto out = kernelize_r(inst);
    const std::int64_t kk = std::min<std::int64_t>(k, winwin_threshold(r));
    if (auto* red = std::get_if<ReducedInstance>(&out)) {
      ++kernels;
      if (red->instance.graph.vertex_count() > kr_kernel_bound(kk, r)) t.fail("kernel exceeds bound");
      if (red->instance.k > kk) t.fail("kernel budget not clamped");
    } else if (auto* y = std::get_if<TrivialYes>(&out)) {
      ++decided;
      if (auto why = check_solution(inst, y->witness)) t.fail("kernelize_r witness invalid: " + *why);
    } else {
      ++decided;
    }
  }
  return {t.failures == 0, std::to_string(nce_yes) + " nce-yes instances with k in 4..8 all realized; " +
                               std::to_string(kernels) + " kernels within bound, " + std::to_string(decided) +
                               " decided directly, " + std::to_string(t.failures) + " failures" + t.failures_text()};
}

Outcome dsc_completeness() {
  Tally t;
  int yes_count = 0;
  struct Named {
    PiProperty property;
    std::function<bool(const std::vector<int>&)> check;
  };
  const std::vector<Named> properties = {
      {regular_property(), oracle::is_regular},
      {anonymity_property(2), [](const std::vector<int>& d) { return oracle::is_anonymous(d, 2); }},
      {anonymity_property(3), [](const std::vector<int>& d) { return oracle::is_anonymous(d, 3); }},
  };
  int graphs = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : oracle::nonisomorphic_graphs(n)) {
      ++graphs;
      for (int k = 0; k <= 2; ++k) {
        for (const auto& [property, check] : properties) {
          ++t.cases;
          DscInstance inst{g, k, property, std::nullopt};
          auto got = dsc_fpt_solve(inst);
          const bool expect = oracle::completion_minimum(g, k, check).has_value();
          yes_count += expect;
          if (got.has_value() != expect) {
            t.fail(property.describe() + " n=" + std::to_string(n) + " k=" + std::to_string(k));
          } else if (got) {
            if (auto why = check_dsc_solution(inst, *got)) t.fail("invalid witness: " + *why);
          }
        }
      }
    }
  }
  return {t.failures == 0, std::to_string(graphs) + " graphs, " + std::to_string(t.cases) +
                               " cases over regular, anon 2, anon 3 (" + std::to_string(yes_count) + " yes), " +
                               std::to_string(t.failures) + " mismatches" + t.failures_text()};
}

Outcome anonymization() {
  std::mt19937_64 rng(107);
  Tally t;
  int yes_count = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    Graph g = gen_gnp(n, 0.15 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng());
    const int s = static_cast<int>(rng() % 4);
    const int ka = 1 + static_cast<int>(rng() % 3);
    ++t.cases;
    auto got = anonymize(g, ka, s);
    auto fulfills = [ka](const std::vector<int>& d) { return oracle::is_anonymous(d, ka); };
    const bool expect = oracle::completion_minimum(g, s, fulfills).has_value();
    yes_count += expect;
    if (got.has_value() != expect) {
      t.fail("mismatch, trial " + std::to_string(trial));
    } else if (got && (static_cast<int>(got->size()) > s || !fulfills(degrees_with(g, *got)))) {
      t.fail("invalid witness, trial " + std::to_string(trial));
    }
  }
  const Graph star(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  int min_budget = -1;
  for (int s = 0; s <= 6 && min_budget < 0; ++s) {
    if (anonymize(star, 2, s)) min_budget = s;
  }
  if (min_budget != 2) t.fail("star minimum budget " + std::to_string(min_budget));
  return {t.failures == 0, std::to_string(t.cases) + " graphs (" + std::to_string(yes_count) +
                               " yes), star minimum budget " + std::to_string(min_budget) + " at k_anon 2, " +
                               std::to_string(t.failures) + " failures" + t.failures_text()};
}

// Lowest-index minimum vertex cover.
std::vector<Vertex> minimum_cover(const Graph& g) {
  const int best = oracle::min_vertex_cover(g);
  std::vector<Vertex> out;
  oracle::for_each_subset(g.vertex_count(), best, [&](const std::vector<int>& s) {
    if (!is_vertex_cover(g, std::vector<Vertex>(s.begin(), s.end()))) return false;
    out.assign(s.begin(), s.end());
    return true;
  });
  return out;
}

Outcome reductions() {
  Tally t;
  int checked[4] = {0, 0, 0, 0};
  int vminus_budget_exact = 0, vminus_budget_off = 0, literal_counterexamples = 0;
  auto solved = [](const DceInstance& inst) { return brute_force_solve(inst).has_value(); };

  std::vector<Graph> cubic;
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : oracle::nonisomorphic_graphs(n)) {
      const int vc = oracle::min_vertex_cover(g);
      for (int h = 0; h <= n; ++h) {
        auto out = vc_to_dce_vminus(g, h);
        ++checked[0];
        if (solved(out.instance) != (vc <= h)) t.fail("vc n=" + std::to_string(n) + " h=" + std::to_string(h));
        if (out.instance.k != h || out.instance.r() != 0) t.fail("vc parameters");
      }
      if (g.min_degree() == 3 && g.max_degree() == 3) cubic.push_back(g);
    }
  }
  for (int n : {4, 6, 8}) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) cubic.push_back(gen_cubic(n, seed));
  }
  for (const Graph& g : cubic) {
    const int vc = oracle::min_vertex_cover(g);
    const int alpha = oracle::max_independent_set(g);
    for (int h = 0; h <= g.vertex_count(); ++h) {
      ++checked[0];
      if (solved(vc_to_dce_vminus(g, h).instance) != (vc <= h)) t.fail("vc on cubic graph");
    }
    for (int h = 1; h <= std::min(alpha + 1, 4); ++h) {
      auto out = is_to_dce_eplus(g, h);
      ++checked[1];
      if (solved(out.instance) != (alpha >= h)) t.fail("is n=" + std::to_string(g.vertex_count()) + " h=" + std::to_string(h));
      if (out.instance.k != h * (h - 1) / 2 + h || out.instance.r() != 3 + h) t.fail("is parameters");
    }
  }

  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : oracle::nonisomorphic_graphs(n)) {
      if (g.min_degree() < 1) continue;
      auto x = minimum_cover(g);
      if (x.size() > 3) continue;
      const int xs = static_cast<int>(x.size());
      const int omega = oracle::max_clique(g);
      for (int h = 1; h <= g.min_degree(); ++h) {
        auto e = clique_to_dce_eminus(g, h, x);
        ++checked[2];
        if (solved(e.instance) != (omega >= h)) t.fail("clique-e n=" + std::to_string(n) + " h=" + std::to_string(h));
        if (e.copies > 0) {
          if (e.instance.r() > xs + 2) t.fail("clique-e r above |X|+2");
          if (e.instance.k != h * (h - 1) / 2 + h + ceil_log2(e.copies)) t.fail("clique-e budget formula");
        }

        auto v = clique_to_dce_vminus(g, h, x);
        ++checked[3];
        const bool source = omega >= h;
        if (solved(v.instance) != source) t.fail("clique-v n=" + std::to_string(n) + " h=" + std::to_string(h));
        if (v.copies > 0) {
          const int literal = ceil_log2(v.copies) + xs + 1 - h;
          if (v.instance.k == literal) {
            ++vminus_budget_exact;
          } else if (v.instance.k == literal + 1) {
            ++vminus_budget_off;
          } else {
            t.fail("clique-v budget neither formula nor formula + 1");
          }
          if (source && literal >= 0) {
            DceInstance tight = v.instance;
            tight.k = literal;
            if (!solved(tight)) ++literal_counterexamples;
          }
        }
      }
    }
  }

  std::ostringstream detail;
  detail << "vc " << checked[0] << ", is " << checked[1] << ", clique-e " << checked[2] << ", clique-v " << checked[3]
         << " source/target comparisons, " << t.failures << " mismatches" << t.failures_text()
         << "; clique-v budget equals ceil(log l)+|X|+1-h on " << vminus_budget_exact << " outputs and exceeds it by one on "
         << vminus_budget_off << "; with the literal budget " << literal_counterexamples
         << " yes-instances of clique become no-instances";
  const bool literal_formula_holds = vminus_budget_off == 0;
  return {t.failures == 0 && literal_formula_holds, detail.str()};
}

Outcome scalability() {
  constexpr int n = 100'000, d = 10, k = 10, r = 10;
  std::mt19937_64 rng(109);
  std::ostringstream detail;
  bool pass = true;

  auto timed_kernel = [&](const DceInstance& inst, const std::string& label) {
    const auto start = std::chrono::steady_clock::now();
    auto out = kernelize_kr(inst);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    int size = 0;
    std::string verdict = "trivial no";
    if (auto* red = std::get_if<ReducedInstance>(&out)) {
      size = red->instance.graph.vertex_count();
      verdict = std::to_string(size) + " vertices";
    }
    const bool ok = secs < 5.0 && size <= kr_kernel_bound(k, r);
    pass = pass && ok;
    detail << label << " m=" << inst.graph.edge_count() << ": " << std::fixed << std::setprecision(2) << secs << " s, "
           << verdict << " (bound " << kr_kernel_bound(k, r) << ")";
  };

  // Maximum degree 10 = r forces a 10-regular graph for m = 5*10^5.
  Graph g = gen_regular(n, d, 9001);
  std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));
  for (auto& list : lists) {
    for (int x = 0; x < r; ++x) {
      if (rng() % 4 == 0) list.push_back(x);
    }
    list.push_back(r);
  }
  timed_kernel({g, k, DegreeListFunction(r, lists), OpKind::EdgeAddition}, "regular");
  detail << "; ";

  // Ten edges with distinct endpoints removed; their endpoints want degree 10 back.
  std::vector<Edge> removed;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  const auto edges = g.edges();
  for (std::size_t i = rng() % edges.size(); removed.size() < 10; i = (i + 7919) % edges.size()) {
    const Edge& e = edges[i];
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    removed.push_back(e);
  }
  Graph thinned = delete_edges(g, removed);
  auto thinned_lists = lists;
  for (Vertex v = 0; v < n; ++v) {
    if (used[v]) thinned_lists[v] = {r};
  }
  timed_kernel({thinned, k, DegreeListFunction(r, thinned_lists), OpKind::EdgeAddition}, "20 unsatisfied");
  return {pass, detail.str()};
}

struct Command {
  int code = -1;
  std::string output;
};

Command run(const std::string& command) {
  Command out;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) return out;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) out.output.append(buffer, got);
  const int status = pclose(pipe);
  out.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome io_roundtrip() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("dcekit-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string cli = DCEKIT_CLI_PATH;
  std::mt19937_64 rng(110);
  Tally t;
  std::vector<std::pair<std::string, Instance>> corpus;

  const OpKind ops[] = {OpKind::EdgeAddition, OpKind::EdgeDeletion, OpKind::VertexDeletion};
  for (int i = 0; i < 90; ++i) {
    const OpKind op = ops[i % 3];
    const int n = 1 + static_cast<int>(rng() % 9);
    corpus.emplace_back("dce" + std::to_string(i),
                        gen_random_dce(n, 0.35, static_cast<int>(rng() % 4), static_cast<int>(rng() % 5), 0.5, rng(), op));
  }
  const ReductionKind kinds[] = {ReductionKind::VertexCover, ReductionKind::IndependentSet,
                                 ReductionKind::CliqueEdgeDeletion, ReductionKind::CliqueVertexDeletion};
  for (int i = 0; i < 16; ++i) {
    const ReductionKind kind = kinds[i % 4];
    const int n = kind == ReductionKind::IndependentSet ? 4 : 3 + static_cast<int>(rng() % 3);
    try {
      corpus.emplace_back("reduction" + std::to_string(i), gen_from_reduction(kind, n, 0.6, 1 + i % 2, rng()).instance);
    } catch (const InvalidInput&) {
    }
  }
  const std::vector<PiProperty> properties = {regular_property(), regular_property(3), anonymity_property(2),
                                              hindex_property(2), balanced_property(1)};
  for (int i = 0; i < 20; ++i) {
    Graph g = gen_gnp(2 + static_cast<int>(rng() % 6), 0.4, rng());
    std::optional<int> cap;
    if (i % 2) cap = g.max_degree() + 2;
    corpus.emplace_back("dsc" + std::to_string(i),
                        DscInstance{g, static_cast<int>(rng() % 3), properties[i % properties.size()], cap});
  }

  // Files written by the generator subcommand.
  const std::vector<std::string> gen_args = {"gen dce -n 8 -k 3 -r 4 --op e+", "gen dce -n 7 -k 2 -r 3 --op e-",
                                             "gen dce -n 7 -k 2 -r 3 --op v-", "gen cubic -n 6",
                                             "gen regular -n 8 -d 3",          "gen reduction --from vc -n 5 --size 2",
                                             "gen dsc -n 6 -k 2 --property 'anon 2'"};
  for (std::size_t i = 0; i < gen_args.size(); ++i) {
    const fs::path file = dir / ("cli" + std::to_string(i) + ".txt");
    Command c = run("\"" + cli + "\" --seed " + std::to_string(i + 1) + " " + gen_args[i] + " > \"" + file.string() + "\"");
    if (c.code != 0) {
      t.fail("generator failed: " + gen_args[i] + " " + c.output);
      continue;
    }
    try {
      corpus.emplace_back("cli" + std::to_string(i), parse_instance(read_file(file)));
    } catch (const std::exception& e) {
      t.fail("generated file does not parse: " + gen_args[i] + ": " + e.what());
    }
  }

  int yes_runs = 0, no_runs = 0;
  for (const auto& [name, inst] : corpus) {
    ++t.cases;
    const std::string text = serialize_instance(inst);
    Instance back;
    try {
      back = parse_instance(text);
    } catch (const std::exception& e) {
      t.fail(name + " does not reparse: " + e.what());
      continue;
    }
    if (serialize_instance(back) != text) t.fail(name + " changes on round trip");
    if (auto* a = std::get_if<DceInstance>(&inst)) {
      if (!(std::get<DceInstance>(back) == *a)) t.fail(name + " parses to a different instance");
    }
    const fs::path file = dir / (name + ".txt");
    std::ofstream(file) << text;
    Command c = run("\"" + cli + "\" --verify solve \"" + file.string() + "\"");
    if (c.output.rfind("YES", 0) == 0) {
      ++yes_runs;
      if (c.code != 0) t.fail(name + " YES output fails --verify (exit " + std::to_string(c.code) + ")");
      if (auto* a = std::get_if<DceInstance>(&inst)) {
        auto sol = parse_solution(c.output, a->graph.vertex_count());
        if (!sol || check_solution(*a, *sol)) t.fail(name + " printed solution does not check");
        else if (serialize_solution(sol) != c.output) t.fail(name + " solution text does not round trip");
      }
    } else if (c.output.rfind("NO", 0) == 0 && c.code == 0) {
      ++no_runs;
    } else {
      t.fail(name + " solve exit " + std::to_string(c.code) + ": " + c.output.substr(0, 80));
    }
  }
  fs::remove_all(dir);
  return {t.failures == 0, std::to_string(t.cases) + " instances round-tripped, CLI answered " + std::to_string(yes_runs) +
                               " YES (all verified) and " + std::to_string(no_runs) + " NO, " +
                               std::to_string(t.failures) + " failures" + t.failures_text()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {"kernel equivalence and size", 60, kernel_equivalence},
      {"nce table exactness", 30, nce_exactness},
      {"f-factor exactness", 60, f_factor_exactness},
      {"f-factor on dense graphs", 30, dense_sufficiency},
      {"large solutions and r-kernel", 30, winwin},
      {"dsc completeness", 120, dsc_completeness},
      {"anonymization", 60, anonymization},
      {"reductions", 300, reductions},
      {"kernel scalability", 60, scalability},
      {"io round trip", 120, io_roundtrip},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.check();
    } catch (const std::exception& e) {
      out = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = out.pass && secs <= c.limit_s;
    failed += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << c.name << ": " << out.detail << " (" << std::fixed
              << std::setprecision(2) << secs << " s, limit " << std::setprecision(0) << c.limit_s << " s)"
              << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
