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

#include <array>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

#include "edcn/error.hpp"

namespace edcn {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 12> kPalette = {
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
    "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff"};

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kParse, what);
}

const json& Field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    Malformed(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

int AsInt(const json& j, const char* what) {
  if (!j.is_number_integer()) Malformed(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> AsInts(const json& j, const char* what) {
  if (!j.is_array()) Malformed(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const json& x : j) out.push_back(AsInt(x, what));
  return out;
}

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void EdgeLine(std::ostringstream& os, const Edge& e, const char* indent) {
  os << indent << e.u << " -- " << e.v << ";\n";
}

}  // namespace

json GraphToJson(const LoopedGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  json out = {{"n", g.vertex_count()}, {"edges", edges}};
  if (g.has_labels()) {
    json labels = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
    out["labels"] = labels;
  }
  return out;
}

LoopedGraph GraphFromJson(const json& j) {
  const int n = AsInt(Field(j, "n"), "n");
  if (n < 0) Malformed("n must be non-negative");
  const json& edges = Field(j, "edges");
  if (!edges.is_array()) Malformed("edges must be an array");
  std::vector<Edge> list;
  for (const json& e : edges) {
    const std::vector<int> pair = AsInts(e, "edge");
    if (pair.size() != 2) Malformed("every edge needs two endpoints");
    list.emplace_back(pair[0], pair[1]);
  }
  LoopedGraph g;
  try {
    g = LoopedGraph(n, list);
  } catch (const Error& e) {
    Malformed(e.what());
  }
  if (j.contains("labels")) {
    const json& labels = j.at("labels");
    if (!labels.is_array() || static_cast<int>(labels.size()) != n) {
      Malformed("labels must list one string per vertex");
    }
    for (int v = 0; v < n; ++v) {
      if (!labels[v].is_string()) Malformed("labels must be strings");
      g.SetLabel(v, labels[v].get<std::string>());
    }
  }
  return g;
}

json ColoringToJson(const VertexColoring& c) {
  return {{"k", c.k}, {"colors", c.colors}};
}

VertexColoring ColoringFromJson(const json& j) {
  VertexColoring c;
  c.k = AsInt(Field(j, "k"), "k");
  c.colors = AsInts(Field(j, "colors"), "colors");
  return c;
}

json EmbeddingToJson(const Embedding& e) {
  return {{"k", e.target.vertex_count()},
          {"source", GraphToJson(e.source)},
          {"map", e.map}};
}

Embedding EmbeddingFromJson(const json& j) {
  const int k = AsInt(Field(j, "k"), "k");
  if (k < 1) Malformed("k must be positive");
  Embedding e{GraphFromJson(Field(j, "source")), build_k_star(k),
              AsInts(Field(j, "map"), "map")};
  return e;
}

std::string ToDot(const LoopedGraph& g, const std::string& name,
                  const VertexColoring* coloring) {
  std::ostringstream os;
  os << "graph " << Quote(name) << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::string label = g.label(v).empty() ? std::to_string(v) : g.label(v);
    os << "  " << v << " [label=";
    if (coloring != nullptr && v < static_cast<int>(coloring->colors.size())) {
      const int c = coloring->colors[v];
      os << Quote(label + " c=" + std::to_string(c))
         << ", style=filled, fillcolor="
         << Quote(std::string(kPalette[(c - 1 + kPalette.size()) %
                                       kPalette.size()]));
    } else {
      os << Quote(label);
    }
    os << "];\n";
  }
  for (const Edge& e : g.edges()) EdgeLine(os, e, "  ");
  os << "}\n";
  return os.str();
}

std::string KStarDot(int k) {
  const LoopedGraph g = build_k_star(k);
  std::ostringstream os;
  os << "graph " << Quote("K" + std::to_string(k) + "*") << " {\n";
  for (int v = 0; v < k; ++v) {
    os << "  " << v << " [label=" << Quote("v" + std::to_string(v)) << "];\n";
  }
  std::vector<std::pair<std::string, EdgeSet>> classes;
  if (k % 2 == 0) {
    for (int j = 0; j <= (k - 2) / 2; ++j) {
      classes.emplace_back("D" + std::to_string(j), distance_class(k, j));
    }
    classes.emplace_back("I", perfect_matching(k));
  } else {
    EdgeSet loops, rest;
    for (const Edge& e : g.edges()) (e.is_loop() ? loops : rest).push_back(e);
    classes.emplace_back("loops", loops);
    classes.emplace_back("K", rest);
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& [label, edges] = classes[i];
    os << "  subgraph " << Quote("class_" + label) << " {\n"
       << "    label=" << Quote(label) << ";\n"
       << "    edge [color=" << Quote(std::string(kPalette[i % kPalette.size()]))
       << "];\n";
    for (const Edge& e : edges) EdgeLine(os, e, "    ");
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Malformed("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    Malformed(path + ": " + e.what());
  }
}

}  // namespace edcn
