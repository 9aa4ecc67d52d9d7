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

#include <gtest/gtest.h>

#include <random>

#include "dcekit/generators.hpp"
#include "dcekit/matching.hpp"
#include "support/oracles.hpp"

using namespace dcekit;

namespace {

void expect_factor(const Graph& g, const std::vector<int>& f, const std::vector<Edge>& factor) {
  std::vector<int> d(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Edge& e : factor) {
    EXPECT_TRUE(g.has_edge(e.u, e.v));
    ++d[e.u];
    ++d[e.v];
  }
  EXPECT_EQ(d, f);
}

}  // namespace

TEST(MaxMatching, Triangle) { EXPECT_EQ(max_matching(Graph{3, {{0, 1}, {1, 2}, {0, 2}}}).size(), 1u); }

TEST(MaxMatching, Petersen) {
  Graph p(10, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                                {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  EXPECT_EQ(max_matching(p).size(), 5u);
}

TEST(MaxMatching, AgreesWithExhaustiveSearch) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::nonisomorphic_graphs(n)) {
      auto m = max_matching(g);
      std::vector<int> seen(static_cast<std::size_t>(n), 0);
      for (const Edge& e : m) {
        ASSERT_TRUE(g.has_edge(e.u, e.v));
        ASSERT_EQ(seen[e.u]++, 0);
        ASSERT_EQ(seen[e.v]++, 0);
      }
      EXPECT_EQ(static_cast<int>(m.size()), oracle::max_matching_size(g));
    }
  }
}

TEST(FFactor, OneFactorOfK4) {
  Graph k4(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  std::vector<int> f(4, 1);
  auto factor = f_factor(k4, f);
  ASSERT_TRUE(factor);
  expect_factor(k4, f, *factor);
}

TEST(FFactor, TriangleOfK3) {
  Graph k3(3, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  auto factor = f_factor(k3, std::vector<int>{2, 2, 2});
  ASSERT_TRUE(factor);
  EXPECT_EQ(factor->size(), 3u);
}

TEST(FFactor, InfeasibleCases) {
  Graph k3(3, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  EXPECT_FALSE(f_factor(k3, std::vector<int>{1, 1, 1}));  // odd sum
  EXPECT_FALSE(f_factor(k3, std::vector<int>{3, 1, 0}));  // above degree
  EXPECT_FALSE(f_factor(Graph(2), std::vector<int>{1, 1}));
  EXPECT_TRUE(f_factor(Graph(2), std::vector<int>{0, 0}));
  EXPECT_THROW(f_factor(k3, std::vector<int>{1, 1}), InvalidInput);
}

TEST(FFactor, AgreesWithSubgraphEnumerationOnSmallGraphs) {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : oracle::nonisomorphic_graphs(n)) {
      for (int trial = 0; trial < 6; ++trial) {
        std::vector<int> f(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) f[v] = static_cast<int>(rng() % (g.degree(v) + 1));
        auto factor = f_factor(g, f);
        ASSERT_EQ(factor.has_value(), oracle::has_f_factor(g, f));
        if (factor) expect_factor(g, f, *factor);
      }
    }
  }
}

TEST(KtCondition, Thresholds) {
  EXPECT_TRUE(kt_condition_holds(4, 2, 1));
  EXPECT_FALSE(kt_condition_holds(3, 2, 1));
  EXPECT_FALSE(kt_condition_holds(9, 5, 2));
  EXPECT_TRUE(kt_condition_holds(9, 6, 2));
  EXPECT_THROW(kt_condition_holds(9, 6, 0), InvalidInput);
}

TEST(KtCondition, SufficientOnDenseGraphs) {
  std::mt19937_64 rng(5);
  for (int r = 1; r <= 2; ++r) {
    for (int trial = 0; trial < 20; ++trial) {
      const int n = (r + 1) * (r + 1) + static_cast<int>(rng() % 6);
      Graph g = complement(gen_regular(n % 2 == 0 || r % 2 == 0 ? n : n + 1, r, rng()));
      ASSERT_TRUE(kt_condition_holds(g.vertex_count(), g.min_degree(), r));
      std::vector<int> f(static_cast<std::size_t>(g.vertex_count()));
      int sum = 0;
      for (auto& x : f) sum += x = 1 + static_cast<int>(rng() % r);
      if (sum % 2 != 0) f[0] += f[0] < r ? 1 : -1;
      auto factor = f_factor(g, f);
      ASSERT_TRUE(factor);
      expect_factor(g, f, *factor);
    }
  }
}
