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

// dcekit: command-line front end.
//
// Exit codes: 0 decided, 1 usage or parse error, 2 resource limit,
// 3 a produced solution failed --verify.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dcekit/dcekit.hpp"

namespace {

using namespace dcekit;

constexpr int kVerifyFailed = 3;

struct Options {
  std::uint64_t seed = 1;
  bool verify = false;
  std::uint64_t limit = 0;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SearchLimits search_limits(const Options& o) {
  SearchLimits l;
  if (o.limit > 0) l.max_enumerated = l.max_nodes = o.limit;
  return l;
}

DscLimits dsc_limits(const Options& o) {
  DscLimits l;
  if (o.limit > 0) l.max_enumerated = l.max_nsc_vectors = o.limit;
  return l;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw InvalidInput("bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

int report(const std::string& text, const std::optional<std::string>& failure) {
  std::cout << text;
  if (failure) {
    std::cerr << "verification failed: " << *failure << '\n';
    return kVerifyFailed;
  }
  return 0;
}

int cmd_solve(const Options& o, const std::string& path) {
  Instance inst = parse_instance(read_file(path));
  if (auto* dsc = std::get_if<DscInstance>(&inst)) {
    auto sol = dsc_solve(*dsc, dsc_limits(o));
    std::optional<std::string> failure;
    if (o.verify && sol) failure = check_dsc_solution(*dsc, *sol);
    return report(serialize_solution(sol), failure);
  }
  const auto& dce = std::get<DceInstance>(inst);
  auto sol = dce.op == OpKind::EdgeAddition ? solve_e_plus(dce, search_limits(o)) : brute_force_solve(dce, search_limits(o));
  std::optional<std::string> failure;
  if (o.verify && sol) failure = check_solution(dce, *sol);
  return report(serialize_solution(sol), failure);
}

int cmd_kernelize(const Options& o, const std::string& path, const std::string& param) {
  Instance parsed = parse_instance(read_file(path));
  auto* inst = std::get_if<DceInstance>(&parsed);
  if (!inst) throw InvalidInput("kernelize needs a dce instance");
  auto print_kernel = [](const ReducedInstance& red) {
    std::cout << "c kernel vertex i is input vertex";
    for (Vertex v : red.to_original) std::cout << ' ' << v + 1;
    std::cout << '\n' << serialize_instance(red.instance);
    return 0;
  };
  if (param == "kr") {
    auto out = kernelize_kr(*inst);
    if (auto* no = std::get_if<TrivialNo>(&out)) {
      std::cout << "c " << no->reason << "\nNO\n";
      return 0;
    }
    return print_kernel(std::get<ReducedInstance>(out));
  }
  auto out = kernelize_r(*inst);
  if (auto* no = std::get_if<TrivialNo>(&out)) {
    std::cout << "c " << no->reason << "\nNO\n";
    return 0;
  }
  if (auto* yes = std::get_if<TrivialYes>(&out)) {
    std::optional<std::string> failure;
    if (o.verify) failure = check_solution(*inst, yes->witness);
    return report(serialize_solution(std::optional<EditSolution>(yes->witness)), failure);
  }
  return print_kernel(std::get<ReducedInstance>(out));
}

int cmd_nce(const std::string& degrees, long long k, int r, const std::string& phi) {
  NceInstance inst;
  inst.degrees = parse_int_list(degrees);
  inst.k = k;
  inst.r = r;
  std::stringstream in(phi);
  std::string part;
  while (std::getline(in, part, ';')) inst.phi.push_back(parse_int_list(part));
  auto d = nce_traceback(inst);
  if (!d) {
    std::cout << "NO\n";
    return 0;
  }
  std::cout << "YES";
  for (int x : *d) std::cout << ' ' << x;
  std::cout << '\n';
  return 0;
}

int cmd_ffactor(const Options& o, const std::string& path, const std::string& f_text) {
  Instance parsed = parse_instance(read_file(path));
  const Graph& g = std::visit([](const auto& x) -> const Graph& { return x.graph; }, parsed);
  auto f = parse_int_list(f_text);
  auto factor = f_factor(g, f);
  if (!factor) {
    std::cout << "NO\n";
    return 0;
  }
  std::cout << "YES " << factor->size() << '\n';
  for (const Edge& e : *factor) std::cout << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  if (o.verify) {
    std::vector<int> d(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const Edge& e : *factor) {
      if (!g.has_edge(e.u, e.v)) return report("", "factor edge not in graph");
      ++d[e.u];
      ++d[e.v];
    }
    if (d != f) return report("", "factor degrees differ from f");
  }
  return 0;
}

int cmd_reduce(const std::string& path, const std::string& from, int h, const std::string& cover) {
  auto kind = parse_reduction_kind(from);
  if (!kind) throw InvalidInput("unknown reduction source '" + from + "'");
  Instance parsed = parse_instance(read_file(path));
  const Graph& g = std::visit([](const auto& x) -> const Graph& { return x.graph; }, parsed);
  ReductionOutput out;
  if (!cover.empty() && (*kind == ReductionKind::CliqueEdgeDeletion || *kind == ReductionKind::CliqueVertexDeletion)) {
    std::vector<Vertex> x;
    for (int v : parse_int_list(cover)) x.push_back(v - 1);
    out = *kind == ReductionKind::CliqueEdgeDeletion ? clique_to_dce_eminus(g, h, x) : clique_to_dce_vminus(g, h, x);
  } else {
    out = reduce(*kind, g, h);
  }
  for (std::size_t v = 0; v < out.provenance.size(); ++v) std::cout << "c " << v + 1 << ' ' << out.provenance[v] << '\n';
  std::cout << serialize_instance(out.instance);
  return 0;
}

int cmd_anonymize(const Options& o, const std::string& path, int k_anon, int s) {
  Instance parsed = parse_instance(read_file(path));
  const Graph& g = std::visit([](const auto& x) -> const Graph& { return x.graph; }, parsed);
  auto sol = anonymize(g, k_anon, s, dsc_limits(o));
  std::optional<std::string> failure;
  if (o.verify && sol) {
    failure = check_dsc_solution(DscInstance{g, s, anonymity_property(k_anon), g.max_degree() + s}, *sol);
  }
  return report(serialize_solution(sol), failure);
}

struct GenArgs {
  std::string kind = "dce";
  int n = 10;
  double p = 0.3;
  int k = 2;
  int r = 4;
  double density = 0.5;
  std::string op = "e+";
  int d = 3;
  int h = 2;
  std::string from = "vc";
  std::string property = "regular";
  std::optional<int> maxdeg;
};

int cmd_gen(const Options& o, const GenArgs& a) {
  if (a.kind == "dce") {
    auto op = parse_op_kind(a.op);
    if (!op) throw InvalidInput("unknown op '" + a.op + "'");
    std::cout << serialize_instance(gen_random_dce(a.n, a.p, a.k, a.r, a.density, o.seed, *op));
  } else if (a.kind == "cubic" || a.kind == "regular") {
    Graph g = a.kind == "cubic" ? gen_cubic(a.n, o.seed) : gen_regular(a.n, a.d, o.seed);
    const int r = g.max_degree();
    std::cout << serialize_instance(DceInstance{std::move(g), 0, DegreeListFunction(r, std::vector<std::vector<int>>(
                                                                                            static_cast<std::size_t>(a.n))),
                                                OpKind::EdgeAddition});
  } else if (a.kind == "dsc") {
    std::stringstream in(a.property);
    std::string name;
    in >> name;
    std::vector<int> params;
    for (int x; in >> x;) params.push_back(x);
    std::cout << serialize_instance(DscInstance{gen_gnp(a.n, a.p, o.seed), a.k, make_property(name, params), a.maxdeg});
  } else if (a.kind == "reduction") {
    auto kind = parse_reduction_kind(a.from);
    if (!kind) throw InvalidInput("unknown reduction source '" + a.from + "'");
    auto out = gen_from_reduction(*kind, a.n, a.p, a.h, o.seed);
    std::cout << serialize_instance(out.instance);
  } else {
    throw InvalidInput("unknown generator '" + a.kind + "'");
  }
  return 0;
}

int cmd_bench(const Options& o, const std::string& corpus, const std::string& op, const std::string& out,
              unsigned workers) {
  auto records = run_bench(corpus, op, out, workers, search_limits(o));
  std::size_t errors = 0;
  for (const auto& r : records) errors += (r.result == "error" || r.result == "resource-limit") ? 1 : 0;
  std::cout << records.size() << " runs, " << errors << " errors, records appended to " << out << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree constraint editing and degree sequence completion"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--seed", opt.seed, "Random seed for generators");
  app.add_flag("--verify", opt.verify, "Re-check every produced solution against its instance");
  app.add_option("--limit", opt.limit, "Search budget (edit sets / search nodes); 0 keeps the defaults");

  std::string path;
  auto* solve = app.add_subcommand("solve", "Solve a dce or dsc instance");
  solve->add_option("instance", path, "Instance file, - for stdin")->required();

  std::string param = "kr";
  auto* kern = app.add_subcommand("kernelize", "Kernelize an edge-addition instance");
  kern->add_option("instance", path)->required();
  kern->add_option("--param", param, "kr or r")->check(CLI::IsMember({"kr", "r"}));

  std::string degrees, phi;
  long long nce_k = 0;
  int nce_r = 0;
  auto* nce = app.add_subcommand("nce", "Number constraint editing");
  nce->add_option("--degrees", degrees, "Comma separated d_1..d_n")->required();
  nce->add_option("-k", nce_k, "Total increase")->required();
  nce->add_option("-r", nce_r, "Degree bound")->required();
  nce->add_option("--phi", phi, "Allowed values per index, ';' between indices, ',' inside")->required();

  std::string f_text;
  auto* ff = app.add_subcommand("ffactor", "f-factor of the instance's graph");
  ff->add_option("instance", path)->required();
  ff->add_option("--f", f_text, "Comma separated f(1)..f(n)")->required();

  std::string from, cover;
  int h = 1;
  auto* red = app.add_subcommand("reduce", "Build a dce instance from a source problem");
  red->add_option("instance", path, "Source graph (any instance file)")->required();
  red->add_option("--from", from, "vc, is, clique-e or clique-v")->required();
  red->add_option("--size", h, "Source problem size bound")->required();
  red->add_option("--cover", cover, "Vertex cover for the clique constructions (1-based, comma separated)");

  int k_anon = 2, budget = 0;
  auto* anon = app.add_subcommand("anonymize", "Make the degree sequence k-anonymous with few new edges");
  anon->add_option("instance", path)->required();
  anon->add_option("-k", k_anon, "Anonymity level")->required();
  anon->add_option("-s", budget, "Edge budget")->required();

  GenArgs g;
  int maxdeg = -1;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("kind", g.kind, "dce, cubic, regular, dsc or reduction");
  gen->add_option("-n", g.n);
  gen->add_option("-p", g.p, "Edge probability");
  gen->add_option("-k", g.k);
  gen->add_option("-r", g.r);
  gen->add_option("--density", g.density, "Probability that a degree is listed");
  gen->add_option("--op", g.op, "e+, e- or v-");
  gen->add_option("-d", g.d, "Degree for regular graphs");
  gen->add_option("--size", g.h, "Size bound for reductions");
  gen->add_option("--from", g.from, "Reduction source");
  gen->add_option("--property", g.property, "dsc property, e.g. 'anon 2'");
  gen->add_option("--maxdeg", maxdeg, "dsc maximum degree bound");

  std::string corpus, bench_op = "solve", out = "runs.jsonl";
  unsigned workers = 1;
  auto* bench = app.add_subcommand("bench", "Run an operation over a corpus directory");
  bench->add_option("corpus", corpus)->required();
  bench->add_option("--op", bench_op)->check(CLI::IsMember(bench_operations()));
  bench->add_option("--out", out, "JSON-lines record file");
  bench->add_option("--workers", workers);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*solve) return cmd_solve(opt, path);
    if (*kern) return cmd_kernelize(opt, path, param);
    if (*nce) return cmd_nce(degrees, nce_k, nce_r, phi);
    if (*ff) return cmd_ffactor(opt, path, f_text);
    if (*red) return cmd_reduce(path, from, h, cover);
    if (*anon) return cmd_anonymize(opt, path, k_anon, budget);
    if (*gen) {
      if (maxdeg >= 0) g.maxdeg = maxdeg;
      return cmd_gen(opt, g);
    }
    if (*bench) return cmd_bench(opt, corpus, bench_op, out, workers);
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
