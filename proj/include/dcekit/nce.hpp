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

// Number constraint editing: raise each d_i to some d_i' in phi(i) so that
// the increases sum to exactly k.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dcekit/error.hpp"

namespace dcekit {

struct NceInstance {
  std::vector<int> degrees;
  std::int64_t k = 0;
  int r = 0;
  std::vector<std::vector<int>> phi;
};

inline void validate(const NceInstance& inst) {
  if (inst.r < 0) throw InvalidInput("nce: r must be nonnegative");
  if (inst.k < 0) throw InvalidInput("nce: k must be nonnegative");
  if (inst.phi.size() != inst.degrees.size()) throw InvalidInput("nce: phi and degrees differ in length");
  for (std::size_t i = 0; i < inst.degrees.size(); ++i) {
    if (inst.degrees[i] < 0) throw InvalidInput("nce: negative degree at index " + std::to_string(i));
    for (int x : inst.phi[i]) {
      if (x < 0 || x > inst.r) throw InvalidInput("nce: phi(" + std::to_string(i) + ") has value outside 0..r");
    }
  }
}

namespace detail {

// rows[i][j]: the first i+1 entries can be raised by exactly j in total.
class NceTable {
 public:
  NceTable(const std::vector<int>& degrees, std::int64_t k_max, const std::vector<std::vector<int>>& phi)
      : n_(degrees.size()), width_(static_cast<std::size_t>(k_max) + 1), degrees_(degrees), phi_(phi) {
    for (auto& p : phi_) {
      std::sort(p.begin(), p.end());
      p.erase(std::unique(p.begin(), p.end()), p.end());
    }
    cells_.assign(n_ * width_, 0);
    if (n_ == 0) return;
    for (int x : phi_[0]) {
      std::int64_t inc = x - degrees_[0];
      if (inc >= 0 && static_cast<std::size_t>(inc) < width_) at(0, inc) = 1;
    }
    for (std::size_t i = 1; i < n_; ++i) {
      for (int x : phi_[i]) {
        std::int64_t inc = x - degrees_[i];
        if (inc < 0) continue;
        for (std::size_t j = static_cast<std::size_t>(inc); j < width_; ++j) {
          if (at(i - 1, j - inc)) at(i, j) = 1;
        }
      }
    }
  }

  bool feasible(std::int64_t j) const {
    if (j < 0 || static_cast<std::size_t>(j) >= width_) return false;
    if (n_ == 0) return j == 0;
    return at(n_ - 1, static_cast<std::size_t>(j)) != 0;
  }

  std::optional<std::vector<int>> traceback(std::int64_t j) const {
    if (!feasible(j)) return std::nullopt;
    std::vector<int> out(n_);
    std::size_t rest = static_cast<std::size_t>(j);
    for (std::size_t i = n_; i-- > 0;) {
      bool placed = false;
      for (int x : phi_[i]) {
        std::int64_t inc = x - degrees_[i];
        if (inc < 0 || static_cast<std::size_t>(inc) > rest) continue;
        bool ok = i == 0 ? static_cast<std::size_t>(inc) == rest : at(i - 1, rest - inc) != 0;
        if (ok) {
          out[i] = x;
          rest -= static_cast<std::size_t>(inc);
          placed = true;
          break;
        }
      }
      if (!placed) throw InvariantViolation("nce traceback lost its path");
    }
    return out;
  }

 private:
  unsigned char& at(std::size_t i, std::size_t j) { return cells_[i * width_ + j]; }
  unsigned char at(std::size_t i, std::size_t j) const { return cells_[i * width_ + j]; }

  std::size_t n_;
  std::size_t width_;
  std::vector<int> degrees_;
  std::vector<std::vector<int>> phi_;
  std::vector<unsigned char> cells_;
};

inline bool nce_witness_ok(const NceInstance& inst, const std::vector<int>& d) {
  if (d.size() != inst.degrees.size()) return false;
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < inst.degrees[i]) return false;
    if (std::find(inst.phi[i].begin(), inst.phi[i].end(), d[i]) == inst.phi[i].end()) return false;
    sum += d[i] - inst.degrees[i];
  }
  return sum == inst.k;
}

}  // namespace detail

inline bool nce_decide(const NceInstance& inst) {
  validate(inst);
  return detail::NceTable(inst.degrees, inst.k, inst.phi).feasible(inst.k);
}

/// Entry j answers nce_decide with target j, for j = 0..k_max.
inline std::vector<bool> nce_decide_all_targets(const std::vector<int>& degrees, std::int64_t k_max, int r,
                                                const std::vector<std::vector<int>>& phi) {
  validate(NceInstance{degrees, k_max, r, phi});
  detail::NceTable table(degrees, k_max, phi);
  std::vector<bool> out(static_cast<std::size_t>(k_max) + 1);
  for (std::int64_t j = 0; j <= k_max; ++j) out[static_cast<std::size_t>(j)] = table.feasible(j);
  return out;
}

/// A witness d' (smallest feasible value chosen from the last index down).
inline std::optional<std::vector<int>> nce_traceback(const NceInstance& inst) {
  validate(inst);
  auto d = detail::NceTable(inst.degrees, inst.k, inst.phi).traceback(inst.k);
  if (d && !detail::nce_witness_ok(inst, *d)) throw InvariantViolation("nce traceback produced an invalid witness");
  return d;
}

}  // namespace dcekit
