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

#include <algorithm>
#include <iterator>
#include <numeric>

#include "edcn/error.hpp"

namespace edcn {

std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParameter: return "invalid-parameter";
    case ErrorCode::kNotEulerian: return "not-eulerian";
    case ErrorCode::kProvenImpossible: return "proven-impossible";
    case ErrorCode::kTooManyEdges: return "too-many-edges";
    case ErrorCode::kUnsupportedInput: return "unsupported-input";
    case ErrorCode::kNoFormula: return "no-formula";
    case ErrorCode::kCapability: return "capability-error";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kInternal: return "internal-error";
  }
  return "unknown";
}

EdgeSet MakeEdgeSet(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

EdgeSet Union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

EdgeSet Difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

EdgeSet Intersection(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool Contains(const EdgeSet& set, Edge e) {
  return std::binary_search(set.begin(), set.end(), e);
}

std::vector<Edge> WalkEdges(std::span<const int> walk) {
  std::vector<Edge> out;
  for (std::size_t i = 1; i < walk.size(); ++i) {
    out.emplace_back(walk[i - 1], walk[i]);
  }
  return out;
}

LoopedGraph::LoopedGraph(int vertex_count)
    : vertex_count_(vertex_count), adjacency_(vertex_count) {
  if (vertex_count < 0) {
    throw Error(ErrorCode::kInvalidParameter, "negative vertex count");
  }
}

LoopedGraph::LoopedGraph(int vertex_count, std::span<const Edge> edges)
    : LoopedGraph(vertex_count) {
  for (const Edge& e : edges) AddEdge(e);
}

void LoopedGraph::CheckVertex(int v) const {
  if (v < 0 || v >= vertex_count_) {
    throw Error(ErrorCode::kInvalidParameter,
                "vertex " + std::to_string(v) + " out of range [0," +
                    std::to_string(vertex_count_) + ")");
  }
}

void LoopedGraph::AddEdge(int u, int v) {
  CheckVertex(u);
  CheckVertex(v);
  const Edge e(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) {
    throw Error(ErrorCode::kInvalidParameter,
                "duplicate edge {" + std::to_string(e.u) + "," +
                    std::to_string(e.v) + "}");
  }
  edges_.insert(it, e);
  auto insert_sorted = [](std::vector<int>& list, int w) {
    list.insert(std::lower_bound(list.begin(), list.end(), w), w);
  };
  insert_sorted(adjacency_[e.u], e.v);
  if (!e.is_loop()) insert_sorted(adjacency_[e.v], e.u);
}

bool LoopedGraph::HasEdge(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) return false;
  return Contains(edges_, Edge(u, v));
}

bool LoopedGraph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.is_loop(); });
}

int LoopedGraph::degree(int v) const {
  CheckVertex(v);
  const auto& adj = adjacency_[v];
  const bool loop = std::binary_search(adj.begin(), adj.end(), v);
  return static_cast<int>(adj.size()) + (loop ? 1 : 0);
}

void LoopedGraph::SetLabel(int v, std::string label) {
  CheckVertex(v);
  if (labels_.empty()) labels_.resize(vertex_count_);
  labels_[v] = std::move(label);
}

const std::string& LoopedGraph::label(int v) const {
  static const std::string kEmpty;
  if (labels_.empty()) return kEmpty;
  return labels_[v];
}

LoopedGraph Subgraph(int vertex_count, const EdgeSet& edges) {
  return LoopedGraph(vertex_count, edges);
}

LoopedGraph build_k_star(int k) {
  if (k < 1) {
    throw Error(ErrorCode::kInvalidParameter, "K_k* needs k >= 1");
  }
  LoopedGraph g(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) g.AddEdge(i, j);
  }
  return g;
}

EdgeSet distance_class(int k, int j) {
  if (k < 2 || k % 2 != 0) {
    throw Error(ErrorCode::kInvalidParameter,
                "distance classes need even k >= 2, got " + std::to_string(k));
  }
  if (j < 0 || j > (k - 2) / 2) {
    throw Error(ErrorCode::kInvalidParameter,
                "distance class index " + std::to_string(j) +
                    " outside [0," + std::to_string((k - 2) / 2) + "]");
  }
  std::vector<Edge> out;
  out.reserve(k);
  for (int p = 0; p < k; ++p) out.emplace_back(p, (p + j) % k);
  return MakeEdgeSet(std::move(out));
}

EdgeSet perfect_matching(int k) {
  if (k < 2 || k % 2 != 0) {
    throw Error(ErrorCode::kInvalidParameter,
                "perfect matching needs even k >= 2, got " + std::to_string(k));
  }
  std::vector<Edge> out;
  for (int i = 0; i < k / 2; ++i) out.emplace_back(i, i + k / 2);
  return MakeEdgeSet(std::move(out));
}

std::vector<int> degrees(const LoopedGraph& g) {
  std::vector<int> out(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    ++out[e.u];
    ++out[e.v];
  }
  return out;
}

bool connected_after_pruning(const LoopedGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) parent[find(e.u)] = find(e.v);
  int root = -1;
  for (int v = 0; v < n; ++v) {
    if (g.neighbors(v).empty()) continue;
    if (root < 0) {
      root = find(v);
    } else if (find(v) != root) {
      return false;
    }
  }
  return true;
}

void EdgePartition::Validate(const LoopedGraph& target) const {
  EdgeSet seen;
  for (const auto& [name, edges] : parts) {
    for (const Edge& e : edges) {
      if (!target.HasEdge(e.u, e.v)) {
        throw Error(ErrorCode::kInternal,
                    "part " + name + " uses a non-edge {" +
                        std::to_string(e.u) + "," + std::to_string(e.v) + "}");
      }
    }
    if (!Intersection(seen, edges).empty()) {
      throw Error(ErrorCode::kInternal, "part " + name + " overlaps");
    }
    seen = Union(seen, edges);
  }
}

const EdgeSet& EdgePartition::part(std::string_view name) const {
  for (const auto& [n, edges] : parts) {
    if (n == name) return edges;
  }
  throw Error(ErrorCode::kInvalidParameter,
              "no part named " + std::string(name));
}

std::vector<Edge> Embedding::ImageEdges() const {
  std::vector<Edge> out;
  out.reserve(source.edge_count());
  for (const Edge& e : source.edges()) out.emplace_back(map[e.u], map[e.v]);
  return out;
}

VertexColoring VertexColoring::FromEmbedding(const Embedding& e) {
  VertexColoring c;
  c.k = e.target.vertex_count();
  c.colors.reserve(e.map.size());
  for (int v : e.map) c.colors.push_back(v + 1);
  return c;
}

}  // namespace edcn
