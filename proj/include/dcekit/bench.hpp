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

// Benchmark harness: run one operation over every file of a corpus and
// append one JSON line per run.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dcekit/io.hpp"
#include "dcekit/kernel.hpp"
#include "dcekit/search.hpp"
#include "dcekit/winwin.hpp"
#include "json.hpp"

namespace dcekit {

struct RunRecord {
  std::string instance;
  std::string operation;
  nlohmann::json params = nlohmann::json::object();
  std::string result;  // yes, no, error, resource-limit
  std::optional<std::int64_t> solution_size;
  std::int64_t vertices_before = 0;
  std::optional<std::int64_t> vertices_after;
  double wall_ms = 0;
  std::string error;
};

inline nlohmann::json to_json(const RunRecord& r) {
  nlohmann::json j;
  j["instance"] = r.instance;
  j["operation"] = r.operation;
  j["params"] = r.params;
  j["result"] = r.result;
  j["solution_size"] = r.solution_size ? nlohmann::json(*r.solution_size) : nlohmann::json(nullptr);
  j["vertices_before"] = r.vertices_before;
  j["vertices_after"] = r.vertices_after ? nlohmann::json(*r.vertices_after) : nlohmann::json(nullptr);
  j["wall_ms"] = r.wall_ms;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

inline RunRecord record_from_json(const nlohmann::json& j) {
  RunRecord r;
  r.instance = j.at("instance").get<std::string>();
  r.operation = j.at("operation").get<std::string>();
  r.params = j.value("params", nlohmann::json::object());
  r.result = j.at("result").get<std::string>();
  if (!j.at("solution_size").is_null()) r.solution_size = j.at("solution_size").get<std::int64_t>();
  r.vertices_before = j.at("vertices_before").get<std::int64_t>();
  if (!j.at("vertices_after").is_null()) r.vertices_after = j.at("vertices_after").get<std::int64_t>();
  r.wall_ms = j.at("wall_ms").get<double>();
  r.error = j.value("error", std::string());
  return r;
}

/// Serializes appends from several threads onto one JSON-lines file.
class RecordAppender {
 public:
  explicit RecordAppender(const std::filesystem::path& path) : out_(path, std::ios::app) {
    if (!out_) throw InvalidInput("cannot open " + path.string() + " for appending");
  }

  void append(const RunRecord& r) {
    const std::string line = to_json(r).dump();
    std::lock_guard<std::mutex> lock(mutex_);
    out_ << line << '\n';
    out_.flush();
  }

 private:
  std::mutex mutex_;
  std::ofstream out_;
};

inline const std::vector<std::string>& bench_operations() {
  static const std::vector<std::string> ops = {"solve", "kernel-kr", "kernel-r"};
  return ops;
}

/// Runs `operation` on one instance text; never throws.
inline RunRecord run_one(const std::string& name, const std::string& text, const std::string& operation,
                         const SearchLimits& limits = {}) {
  RunRecord rec;
  rec.instance = name;
  rec.operation = operation;
  const auto start = std::chrono::steady_clock::now();
  try {
    Instance parsed = parse_instance(text);
    if (auto* dsc = std::get_if<DscInstance>(&parsed)) {
      rec.vertices_before = dsc->graph.vertex_count();
      rec.params = {{"k", dsc->k}, {"property", dsc->property.describe()}};
      if (operation != "solve") throw InvalidInput("operation " + operation + " needs a dce instance");
      auto sol = dsc_solve(*dsc);
      rec.result = sol ? "yes" : "no";
      if (sol) rec.solution_size = static_cast<std::int64_t>(sol->size());
    } else {
      const auto& inst = std::get<DceInstance>(parsed);
      rec.vertices_before = inst.graph.vertex_count();
      rec.params = {{"k", inst.k}, {"r", inst.r()}, {"op", std::string(to_string(inst.op))}};
      if (operation == "solve") {
        auto sol = inst.op == OpKind::EdgeAddition ? solve_e_plus(inst, limits) : brute_force_solve(inst, limits);
        rec.result = sol ? "yes" : "no";
        if (sol) rec.solution_size = static_cast<std::int64_t>(sol->size());
      } else if (operation == "kernel-kr") {
        auto out = kernelize_kr(inst);
        if (auto* red = std::get_if<ReducedInstance>(&out)) {
          rec.result = "kernel";
          rec.vertices_after = red->instance.graph.vertex_count();
        } else {
          rec.result = "no";
          rec.vertices_after = 0;
        }
      } else if (operation == "kernel-r") {
        auto out = kernelize_r(inst);
        if (auto* red = std::get_if<ReducedInstance>(&out)) {
          rec.result = "kernel";
          rec.vertices_after = red->instance.graph.vertex_count();
        } else if (auto* yes = std::get_if<TrivialYes>(&out)) {
          rec.result = "yes";
          rec.solution_size = static_cast<std::int64_t>(yes->witness.size());
          rec.vertices_after = 0;
        } else {
          rec.result = "no";
          rec.vertices_after = 0;
        }
      } else {
        throw InvalidInput("unknown operation " + operation);
      }
    }
  } catch (const ResourceLimit& e) {
    rec.result = "resource-limit";
    rec.error = e.what();
  } catch (const std::exception& e) {
    rec.result = "error";
    rec.error = e.what();
  }
  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

/// Runs `operation` on every regular file in `corpus` (sorted by name) with
/// `workers` threads and appends the records to `output`. Returns the
/// records in corpus order.
inline std::vector<RunRecord> run_bench(const std::filesystem::path& corpus, const std::string& operation,
                                        const std::filesystem::path& output, unsigned workers = 1,
                                        const SearchLimits& limits = {}) {
  if (!std::filesystem::is_directory(corpus)) throw InvalidInput(corpus.string() + " is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(corpus)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  RecordAppender appender(output);
  std::vector<RunRecord> records(files.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      std::ifstream in(files[i]);
      std::stringstream buf;
      buf << in.rdbuf();
      records[i] = run_one(files[i].filename().string(), buf.str(), operation, limits);
      appender.append(records[i]);
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(files.size(), 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return records;
}

}  // namespace dcekit
