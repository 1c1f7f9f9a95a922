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


// JSON and DOT serialization of graphs, colorings and embeddings.
//
// Graph JSON:     {"n": 4, "edges": [[0, 1], [1, 1]], "labels": ["u0", ...]}
// Coloring JSON:  {"k": 5, "colors": [1, 2, ...]}
// Embedding JSON: {"k": 5, "source": <graph>, "map": [0, 3, ...]}

#ifndef EDCN_IO_HPP_
#define EDCN_IO_HPP_

#include <string>

#include <json.hpp>

#include "edcn/graph.hpp"

namespace edcn {

nlohmann::json GraphToJson(const LoopedGraph& g);
// Throws kParse on a malformed document.
LoopedGraph GraphFromJson(const nlohmann::json& j);

nlohmann::json ColoringToJson(const VertexColoring& c);
VertexColoring ColoringFromJson(const nlohmann::json& j);

nlohmann::json EmbeddingToJson(const Embedding& e);
Embedding EmbeddingFromJson(const nlohmann::json& j);

// Undirected DOT; loops as v -- v. With a coloring, vertices carry a
// "color=<c>" label and a fill from a fixed palette.
std::string ToDot(const LoopedGraph& g, const std::string& name,
                  const VertexColoring* coloring = nullptr);

// K_k* with one subgraph per edge class: D_0 .. D_{(k-2)/2} and I for even
// k, loops and non-loops for odd k.
std::string KStarDot(int k);

// Throws kParse when the file cannot be read or is not JSON.
nlohmann::json ReadJsonFile(const std::string& path);

}  // namespace edcn

#endif  // EDCN_IO_HPP_
