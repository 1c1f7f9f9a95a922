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


#include "edcn/families.hpp"

#include <gtest/gtest.h>

#include "edcn/error.hpp"

namespace edcn {
namespace {

TEST(FamiliesTest, EdgeCountsMatchRealization) {
  const std::vector<std::string> specs = {
      "path:1",          "path:6",         "cycle:3",
      "cycle:9",         "petal:1,3,4",    "petal:3,3",
      "chorded:n=8,j=2", "chorded:n=9,j=4", "spider:1,2,3",
      "spider:2,2,2,2",  "caterpillar:l=4,attach=1;3",
      "caterpillar:l=3,attach=1;1"};
  for (const std::string& text : specs) {
    const FamilySpec spec = ParseFamilySpec(text);
    EXPECT_EQ(static_cast<int>(realize(spec).graph.edge_count()),
              edge_count(spec))
        << text;
    EXPECT_EQ(ToString(spec), text);
  }
}

TEST(FamiliesTest, ParseNormalizesOrder) {
  EXPECT_EQ(ToString(ParseFamilySpec("spider:3,1,2")), "spider:1,2,3");
  EXPECT_EQ(ToString(ParseFamilySpec("petal:4,1,3")), "petal:1,3,4");
}

TEST(FamiliesTest, ParseErrors) {
  for (const char* bad : {"spider", "blob:3", "path:x", "chorded:n=8",
                          "chorded:n=8;j=2", "path:"}) {
    try {
      ParseFamilySpec(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << bad;
    }
  }
}

TEST(FamiliesTest, ValidationErrors) {
  for (const char* bad : {"petal:1,1,3", "petal:1,2,3", "petal:3",
                          "spider:1,2", "caterpillar:l=3,attach=3",
                          "chorded:n=8,j=5", "cycle:2"}) {
    try {
      ParseFamilySpec(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidParameter) << bad;
    }
  }
}

TEST(FamiliesTest, PetalHasOneLoopAtCenter) {
  const PetalSpec spec{{1, 3, 4}};
  const LoopedGraph g = realize(spec).graph;
  EXPECT_TRUE(g.HasLoop(0));
  EXPECT_EQ(g.vertex_count(), 1 + 2 + 3);
  EXPECT_EQ(g.degree(0), 6);
  EXPECT_EQ(PetalVertex(spec, 2, 0), 0);
  EXPECT_EQ(PetalVertex(spec, 2, 3), 0);
  EXPECT_EQ(PetalVertex(spec, 3, 4), 0);
}

TEST(FamiliesTest, ChordedCycleShape) {
  const LoopedGraph g = realize(ChordedCycleSpec{8, 2}).graph;
  EXPECT_EQ(g.vertex_count(), 8);
  EXPECT_EQ(g.edge_count(), 9u);
  EXPECT_TRUE(g.HasEdge(0, 2));
  EXPECT_EQ(g.degree(0), 3);
  EXPECT_EQ(g.degree(2), 3);
  EXPECT_FALSE(g.has_loops());
}

TEST(FamiliesTest, SpiderVerticesAndDegrees) {
  const SpiderSpec spec{{1, 2, 3, 4}};
  const LoopedGraph g = realize(spec).graph;
  EXPECT_EQ(g.vertex_count(), 11);
  EXPECT_EQ(g.degree(SpiderVertex(spec, 1, 0)), 4);
  EXPECT_EQ(g.degree(SpiderVertex(spec, 4, 4)), 1);
  EXPECT_TRUE(g.HasEdge(SpiderVertex(spec, 3, 1), SpiderVertex(spec, 3, 2)));
}

TEST(FamiliesTest, MaxDegreeAndInterior) {
  EXPECT_EQ(max_degree_and_interior(SpiderSpec{{1, 2, 2}}),
            (MaxDegreeInfo{3, false}));
  EXPECT_EQ(max_degree_and_interior(SpiderSpec{{2, 2, 2}}),
            (MaxDegreeInfo{3, true}));
  EXPECT_EQ(max_degree_and_interior(PathSpec{2}), (MaxDegreeInfo{1, false}));
  EXPECT_EQ(max_degree_and_interior(CycleSpec{5}), (MaxDegreeInfo{2, true}));
}

TEST(FamiliesTest, AtlasNamesVertices) {
  const RealizedFamily r = realize(CaterpillarSpec{3, {1, 2}});
  EXPECT_EQ(r.atlas.size(), r.graph.vertex_count());
  EXPECT_EQ(r.atlas.index("y0"), 0);
  EXPECT_EQ(r.atlas.name(4), "y4");
  EXPECT_TRUE(r.graph.HasEdge(4, 1));
  EXPECT_TRUE(r.graph.HasEdge(5, 2));
}

}  // namespace
}  // namespace edcn
