// Copyright 2026 The edcn Authors
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


#include "edcn/euler.hpp"

#include <algorithm>

#include <gtest/gtest.h>

#include "edcn/error.hpp"

namespace edcn {
namespace {

// The walk uses every edge of g exactly once.
void ExpectEulerian(const LoopedGraph& g, const std::vector<int>& walk) {
  ASSERT_EQ(walk.size(), g.edge_count() + 1);
  EdgeSet used = MakeEdgeSet(WalkEdges(walk));
  EXPECT_EQ(used.size(), g.edge_count());
  EXPECT_EQ(used, g.edges());
}

TEST(EulerTrailTest, CircuitOfOddKStar) {
  for (int k : {1, 3, 5, 7, 9}) {
    const LoopedGraph g = build_k_star(k);
    const std::vector<int> walk = euler_trail(g, 0, 0);
    ExpectEulerian(g, walk);
    EXPECT_EQ(walk.front(), 0);
    EXPECT_EQ(walk.back(), 0);
  }
}

TEST(EulerTrailTest, OpenTrailBetweenOddVertices) {
  for (int k : {4, 6, 8}) {
    const EdgeSet edges =
        Union(Difference(build_k_star(k).edges(), perfect_matching(k)),
              {Edge(0, k / 2)});
    const LoopedGraph g = Subgraph(k, edges);
    const std::vector<int> walk = euler_trail(g, 0, k / 2);
    ExpectEulerian(g, walk);
    EXPECT_EQ(walk.front(), 0);
    EXPECT_EQ(walk.back(), k / 2);
  }
}

TEST(EulerTrailTest, RejectsWrongParity) {
  const LoopedGraph k4 = build_k_star(4);
  try {
    euler_trail(k4, 0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotEulerian);
  }
}

TEST(EulerTrailTest, RejectsDisconnectedEdges) {
  const LoopedGraph g(4, std::vector<Edge>{Edge(0, 0), Edge(2, 3), Edge(3, 3),
                                           Edge(2, 2)});
  EXPECT_THROW(euler_trail(g, 2, 3), Error);
}

TEST(ForbiddenPatternTest, TwentySetsModTen) {
  int count = 0;
  for (int mask = 0; mask < 1024; ++mask) {
    if (__builtin_popcount(mask) != 5) continue;
    std::vector<int> positions;
    for (int p = 0; p < 10; ++p) {
      if (mask & (1 << p)) positions.push_back(p);
    }
    count += is_forbidden_k5_pattern(positions);
  }
  EXPECT_EQ(count, 20);
}

TEST(ForbiddenPatternTest, RotationsAndResidues) {
  EXPECT_TRUE(is_forbidden_k5_pattern(std::vector<int>{0, 3, 4, 6, 7}));
  EXPECT_TRUE(is_forbidden_k5_pattern(std::vector<int>{1, 4, 5, 7, 8}));
  EXPECT_TRUE(is_forbidden_k5_pattern(std::vector<int>{10, 13, 14, 16, 17}));
  EXPECT_FALSE(is_forbidden_k5_pattern(std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_FALSE(is_forbidden_k5_pattern(std::vector<int>{0, 3, 4, 6}));
}

// The black vertices are pairwise distinct and the walk covers K_k.
void ExpectBlackCycle(int k, const std::vector<int>& positions,
                      const std::vector<int>& walk) {
  const int n = k * (k - 1) / 2;
  ASSERT_EQ(static_cast<int>(walk.size()), n + 1);
  EXPECT_EQ(walk.front(), walk.back());
  const EdgeSet used = MakeEdgeSet(WalkEdges(walk));
  EXPECT_EQ(static_cast<int>(used.size()), n);
  for (const Edge& e : used) EXPECT_FALSE(e.is_loop());
  std::vector<int> black;
  for (int p : positions) black.push_back(walk[p]);
  std::sort(black.begin(), black.end());
  EXPECT_EQ(std::adjacent_find(black.begin(), black.end()), black.end());
}

TEST(BlackCycleTest, FindsCyclesForOddK) {
  const std::vector<std::pair<int, std::vector<int>>> cases = {
      {3, {0, 1, 2}},
      {5, {0, 1, 2, 3, 4}},
      {7, {0, 2, 5, 9, 11, 14, 20}},
      {9, {1, 4, 8, 13, 17, 22, 28, 30, 35}}};
  for (const auto& [k, positions] : cases) {
    const std::vector<int> walk = black_cycle_embedding(k, positions);
    ExpectBlackCycle(k, positions, walk);
  }
}

TEST(BlackCycleTest, ExcludedPatternIsProvenImpossible) {
  const std::vector<int> positions = {0, 1, 3, 7, 9};
  EXPECT_FALSE(SearchBlackCycle(5, positions).has_value());
  try {
    black_cycle_embedding(5, positions);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kProvenImpossible);
  }
}

}  // namespace
}  // namespace edcn
