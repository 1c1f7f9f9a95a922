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


#include "edcn/io.hpp"

#include <fstream>

#include <gtest/gtest.h>

#include "edcn/edcn.hpp"
#include "edcn/error.hpp"
#include "edcn/families.hpp"

namespace edcn {
namespace {

using nlohmann::json;

ErrorCode ParseCode(const json& j) {
  try {
    GraphFromJson(j);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << j.dump();
  return ErrorCode::kInternal;
}

TEST(GraphJsonTest, RoundTripsEveryFamily) {
  for (const char* text : {"path:5", "cycle:4", "petal:1,3,4", "chorded:n=8,j=2",
                           "spider:1,2,3,4", "caterpillar:l=4,attach=1;3"}) {
    const LoopedGraph g = realize(ParseFamilySpec(text)).graph;
    const json j = GraphToJson(g);
    EXPECT_EQ(j.at("n"), g.vertex_count());
    EXPECT_EQ(GraphFromJson(json::parse(j.dump())), g) << text;
  }
}

TEST(GraphJsonTest, LoopsSerializeAsPairs) {
  const LoopedGraph g(2, std::vector<Edge>{Edge(0, 0), Edge(0, 1)});
  EXPECT_EQ(GraphToJson(g).at("edges"), json::parse("[[0,0],[0,1]]"));
  EXPECT_FALSE(GraphToJson(g).contains("labels"));
}

TEST(GraphJsonTest, MalformedDocuments) {
  EXPECT_EQ(ParseCode(json::parse("[]")), ErrorCode::kParse);
  EXPECT_EQ(ParseCode(json::parse(R"({"edges": []})")), ErrorCode::kParse);
  EXPECT_EQ(ParseCode(json::parse(R"({"n": 2, "edges": [[0]]})")),
            ErrorCode::kParse);
  EXPECT_EQ(ParseCode(json::parse(R"({"n": 2, "edges": [[0, 5]]})")),
            ErrorCode::kParse);
  EXPECT_EQ(ParseCode(json::parse(R"({"n": 2, "edges": [[0, 1], [1, 0]]})")),
            ErrorCode::kParse);
  EXPECT_EQ(ParseCode(json::parse(R"({"n": "2", "edges": []})")),
            ErrorCode::kParse);
  EXPECT_EQ(ParseCode(json::parse(R"({"n": 2, "edges": [], "labels": ["a"]})")),
            ErrorCode::kParse);
}

TEST(ColoringJsonTest, RoundTrip) {
  const VertexColoring c{4, {1, 4, 2}};
  const VertexColoring back = ColoringFromJson(ColoringToJson(c));
  EXPECT_EQ(back.k, 4);
  EXPECT_EQ(back.colors, c.colors);
  EXPECT_THROW(ColoringFromJson(json::parse(R"({"k": 4})")), Error);
  EXPECT_THROW(ColoringFromJson(json::parse(R"({"k": 4, "colors": [1, "x"]})")),
               Error);
}

TEST(EmbeddingJsonTest, RoundTrip) {
  const EdcnResult r = edcn_with_certificate(ParseFamilySpec("petal:1,3,3"));
  const Embedding back = EmbeddingFromJson(json::parse(EmbeddingToJson(r.embedding).dump()));
  EXPECT_EQ(back.source, r.embedding.source);
  EXPECT_EQ(back.target, r.embedding.target);
  EXPECT_EQ(back.map, r.embedding.map);
}

TEST(DotTest, IncludesLoopsAndColors) {
  const LoopedGraph g = realize(PetalSpec{{1, 3, 3}}).graph;
  const std::string plain = ToDot(g, "p");
  EXPECT_NE(plain.find("graph \"p\" {"), std::string::npos);
  EXPECT_NE(plain.find("  0 -- 0;"), std::string::npos);
  EXPECT_EQ(plain.find("fillcolor"), std::string::npos);
  const VertexColoring c{5, {1, 2, 3, 4, 5}};
  const std::string colored = ToDot(g, "p", &c);
  EXPECT_NE(colored.find("c=5"), std::string::npos);
  EXPECT_NE(colored.find("fillcolor"), std::string::npos);
}

TEST(DotTest, KStarClassesForEvenK) {
  const std::string dot = KStarDot(6);
  for (const char* name : {"class_D0", "class_D1", "class_D2", "class_I"}) {
    EXPECT_NE(dot.find(name), std::string::npos) << name;
  }
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos) {
    ++edges;
  }
  EXPECT_EQ(edges, 21u);
  EXPECT_NE(KStarDot(5).find("class_loops"), std::string::npos);
}

TEST(ReadJsonFileTest, Errors) {
  EXPECT_THROW(ReadJsonFile("/nonexistent/graph.json"), Error);
  const std::string path = ::testing::TempDir() + "bad.json";
  std::ofstream(path) << "{not json";
  try {
    ReadJsonFile(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
}

}  // namespace
}  // namespace edcn
