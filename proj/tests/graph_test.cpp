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


#include "edcn/graph.hpp"

#include <gtest/gtest.h>

#include "edcn/error.hpp"

namespace edcn {
namespace {

TEST(EdgeTest, EndpointsAreNormalized) {
  EXPECT_EQ(Edge(3, 1), Edge(1, 3));
  EXPECT_EQ(Edge(3, 1).u, 1);
  EXPECT_TRUE(Edge(2, 2).is_loop());
  EXPECT_EQ(Edge(1, 4).other(4), 1);
}

TEST(EdgeSetTest, SetAlgebra) {
  const EdgeSet a = MakeEdgeSet({{0, 1}, {1, 1}, {1, 2}});
  const EdgeSet b = MakeEdgeSet({{1, 2}, {2, 0}});
  EXPECT_EQ(Union(a, b).size(), 4u);
  EXPECT_EQ(Intersection(a, b), EdgeSet({Edge(1, 2)}));
  EXPECT_EQ(Difference(a, b), MakeEdgeSet({{0, 1}, {1, 1}}));
  EXPECT_TRUE(Contains(a, Edge(1, 0)));
  EXPECT_FALSE(Contains(a, Edge(0, 0)));
}

TEST(EdgeSetTest, WalkEdges) {
  const std::vector<int> walk = {0, 1, 1, 2};
  EXPECT_EQ(WalkEdges(walk),
            (std::vector<Edge>{Edge(0, 1), Edge(1, 1), Edge(1, 2)}));
}

TEST(LoopedGraphTest, LoopCountsTwiceTowardDegree) {
  LoopedGraph g(3);
  g.AddEdge(0, 0);
  g.AddEdge(0, 1);
  EXPECT_EQ(g.degree(0), 3);
  EXPECT_EQ(g.degree(1), 1);
  EXPECT_EQ(g.degree(2), 0);
  EXPECT_TRUE(g.HasLoop(0));
  EXPECT_TRUE(g.has_loops());
  EXPECT_EQ(g.neighbors(0), (std::vector<int>{0, 1}));
}

TEST(LoopedGraphTest, RejectsDuplicatesAndBadVertices) {
  LoopedGraph g(2);
  g.AddEdge(0, 1);
  EXPECT_THROW(g.AddEdge(1, 0), Error);
  EXPECT_THROW(g.AddEdge(0, 2), Error);
  EXPECT_THROW(g.AddEdge(-1, 0), Error);
}

TEST(LoopedGraphTest, Labels) {
  LoopedGraph g(2);
  EXPECT_FALSE(g.has_labels());
  g.SetLabel(1, "x");
  EXPECT_TRUE(g.has_labels());
  EXPECT_EQ(g.label(1), "x");
  EXPECT_EQ(g.label(0), "");
}

class KStarTest : public ::testing::TestWithParam<int> {};

TEST_P(KStarTest, EdgeCountAndDegrees) {
  const int k = GetParam();
  const LoopedGraph g = build_k_star(k);
  EXPECT_EQ(g.edge_count(), static_cast<std::size_t>(k * (k + 1) / 2));
  for (int v = 0; v < k; ++v) EXPECT_EQ(g.degree(v), k + 1);
}

TEST_P(KStarTest, DistanceClassesAndMatchingPartitionEvenK) {
  const int k = GetParam();
  if (k % 2 == 1) {
    EXPECT_THROW(distance_class(k, 0), Error);
    return;
  }
  EdgeSet all;
  std::size_t total = 0;
  for (int j = 0; j <= (k - 2) / 2; ++j) {
    const EdgeSet d = distance_class(k, j);
    EXPECT_EQ(d.size(), static_cast<std::size_t>(k));
    total += d.size();
    all = Union(all, d);
  }
  const EdgeSet i = perfect_matching(k);
  EXPECT_EQ(i.size(), static_cast<std::size_t>(k / 2));
  EXPECT_TRUE(Intersection(all, i).empty());
  all = Union(all, i);
  EXPECT_EQ(total + i.size(), all.size());
  EXPECT_EQ(all, build_k_star(k).edges());
  // K_k* - I is Eulerian with k^2/2 edges.
  const LoopedGraph rest = Subgraph(k, Difference(build_k_star(k).edges(), i));
  EXPECT_EQ(rest.edge_count(), static_cast<std::size_t>(k * k / 2));
  for (int v = 0; v < k; ++v) EXPECT_EQ(rest.degree(v) % 2, 0);
}

INSTANTIATE_TEST_SUITE_P(SmallK, KStarTest, ::testing::Range(2, 13));

TEST(EdgePartitionTest, ValidateDetectsOverlap) {
  const LoopedGraph k3 = build_k_star(3);
  EdgePartition ok{{{"a", {Edge(0, 0)}}, {"b", {Edge(0, 1)}}}};
  EXPECT_NO_THROW(ok.Validate(k3));
  EXPECT_EQ(ok.part("b"), EdgeSet({Edge(0, 1)}));
  EdgePartition overlap{{{"a", {Edge(0, 1)}}, {"b", {Edge(0, 1)}}}};
  EXPECT_THROW(overlap.Validate(k3), Error);
  EdgePartition outside{{{"a", {Edge(0, 3)}}}};
  EXPECT_THROW(outside.Validate(k3), Error);
}

TEST(VertexColoringTest, FromEmbeddingIsOneBased) {
  Embedding e{LoopedGraph(2, std::vector<Edge>{Edge(0, 1)}), build_k_star(3),
              {2, 0}};
  const VertexColoring c = VertexColoring::FromEmbedding(e);
  EXPECT_EQ(c.k, 3);
  EXPECT_EQ(c.colors, (std::vector<int>{3, 1}));
}

}  // namespace
}  // namespace edcn
