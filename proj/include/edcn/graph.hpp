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


// Loop-allowing simple graphs, the looped complete graph K_k* and its
// standard edge classes.
//
// Degree convention: a loop contributes 2 to the degree of its vertex. Every
// parity argument in the constructions (Eulerian subgraphs, odd-vertex
// counts) relies on this, so it is the only convention used anywhere.

#ifndef EDCN_GRAPH_HPP_
#define EDCN_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace edcn {

// Unordered vertex pair stored canonically with u <= v; u == v is a loop.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool is_loop() const { return u == v; }
  constexpr int other(int w) const { return w == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free list of edges.
using EdgeSet = std::vector<Edge>;

EdgeSet MakeEdgeSet(std::vector<Edge> edges);
EdgeSet Union(const EdgeSet& a, const EdgeSet& b);
EdgeSet Difference(const EdgeSet& a, const EdgeSet& b);
EdgeSet Intersection(const EdgeSet& a, const EdgeSet& b);
bool Contains(const EdgeSet& set, Edge e);

// Edges of the walk w0 w1 ... wt; a repeated vertex is a loop.
std::vector<Edge> WalkEdges(std::span<const int> walk);

class LoopedGraph {
 public:
  LoopedGraph() = default;
  explicit LoopedGraph(int vertex_count);
  // Throws kInvalidParameter on a duplicate edge or an out-of-range endpoint.
  LoopedGraph(int vertex_count, std::span<const Edge> edges);

  void AddEdge(int u, int v);
  void AddEdge(Edge e) { AddEdge(e.u, e.v); }

  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const EdgeSet& edges() const { return edges_; }
  bool HasEdge(int u, int v) const;
  bool HasLoop(int v) const { return HasEdge(v, v); }
  bool has_loops() const;

  // Sorted neighbours; a vertex with a loop lists itself once.
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const;

  void SetLabel(int v, std::string label);
  // Empty when no label was set.
  const std::string& label(int v) const;
  bool has_labels() const { return !labels_.empty(); }

  friend bool operator==(const LoopedGraph& a, const LoopedGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_ &&
           a.labels_ == b.labels_;
  }

 private:
  void CheckVertex(int v) const;

  int vertex_count_ = 0;
  EdgeSet edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::string> labels_;
};

// Graph on `vertex_count` vertices with exactly `edges`.
LoopedGraph Subgraph(int vertex_count, const EdgeSet& edges);

// K_k*: complete graph on k vertices plus one loop at every vertex.
LoopedGraph build_k_star(int k);

// D_j for even k: all pairs v_p v_q with q - p in {j, k - j}. D_0 is the
// loop set.
EdgeSet distance_class(int k, int j);

// I for even k: the diagonals v_i v_{i + k/2}.
EdgeSet perfect_matching(int k);

std::vector<int> degrees(const LoopedGraph& g);

// True iff the non-isolated vertices induce a connected graph.
bool connected_after_pruning(const LoopedGraph& g);

// Named, pairwise disjoint edge subsets of one target graph.
struct EdgePartition {
  std::vector<std::pair<std::string, EdgeSet>> parts;

  // Throws kInternal if two parts overlap or a part leaves `target`.
  void Validate(const LoopedGraph& target) const;
  const EdgeSet& part(std::string_view name) const;
};

// Vertex map G -> target that is a homomorphism and injective on edges.
struct Embedding {
  LoopedGraph source;
  LoopedGraph target;
  std::vector<int> map;

  // Edge images of the source edges in source edge order.
  std::vector<Edge> ImageEdges() const;
};

// Colors are 1-based, values in [1, k].
struct VertexColoring {
  int k = 0;
  std::vector<int> colors;

  static VertexColoring FromEmbedding(const Embedding& e);
};

}  // namespace edcn

#endif  // EDCN_GRAPH_HPP_
