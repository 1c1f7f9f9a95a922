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


#include "edcn/oracle.hpp"

#include <algorithm>
#include <map>

#include "edcn/error.hpp"

namespace edcn {
namespace {

struct BudgetExhausted {};

class EmbeddingSearch {
 public:
  EmbeddingSearch(const LoopedGraph& g, int k, const SearchOptions& options)
      : g_(g),
        k_(k),
        options_(options),
        degree_(degrees(g)),
        map_(g.vertex_count(), -1),
        load_(k, 0),
        touched_(k, 0),
        used_(k * k, 0) {}

  SearchResult Run() {
    SearchResult result;
    if (options_.pruning && !Plausible()) {
      result.status = SearchStatus::kProvenNone;
      return result;
    }
    BuildOrder();
    try {
      const bool found = Assign(0);
      result.status = found ? SearchStatus::kFound : SearchStatus::kProvenNone;
    } catch (const BudgetExhausted&) {
      result.status = SearchStatus::kBudgetExhausted;
    }
    result.nodes = nodes_;
    if (result.status == SearchStatus::kFound) {
      Embedding e;
      e.source = g_;
      e.target = build_k_star(k_);
      e.map = map_;
      for (int& v : e.map) {
        if (v < 0) v = 0;
      }
      result.embedding = std::move(e);
    }
    return result;
  }

 private:
  // Counting and parity necessary conditions.
  bool Plausible() const {
    const long long target_edges = 1LL * k_ * (k_ + 1) / 2;
    const long long edges = static_cast<long long>(g_.edge_count());
    if (edges > target_edges) return false;
    for (int d : degree_) {
      if (d > k_ + 1) return false;
    }
    if (k_ % 2 == 0) {
      // k + 1 is odd: a target whose image degree is even misses at least
      // one unit, and only targets holding an odd source vertex can be odd.
      const long long odd = std::count_if(degree_.begin(), degree_.end(),
                                          [](int d) { return d % 2 != 0; });
      const long long forced = std::max(0LL, k_ - odd);
      if (2 * (target_edges - edges) < forced) return false;
    }
    return true;
  }

  // Max-degree seed, then always the vertex with most mapped neighbours
  // (ties: higher degree, then lower index).
  void BuildOrder() {
    const int n = g_.vertex_count();
    std::vector<char> placed(n, 0);
    std::vector<int> mapped_neighbors(n, 0);
    for (int step = 0; step < n; ++step) {
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v] || degree_[v] == 0) continue;
        if (best < 0 || mapped_neighbors[v] > mapped_neighbors[best] ||
            (mapped_neighbors[v] == mapped_neighbors[best] &&
             degree_[v] > degree_[best])) {
          best = v;
        }
      }
      if (best < 0) break;
      placed[best] = 1;
      order_.push_back(best);
      for (int w : g_.neighbors(best)) {
        if (w != best) ++mapped_neighbors[w];
      }
    }
  }

  bool Used(int a, int b) const { return used_[a * k_ + b] != 0; }
  void SetUsed(int a, int b, char value) {
    used_[a * k_ + b] = value;
    used_[b * k_ + a] = value;
  }

  bool Assign(std::size_t step) {
    if (step == order_.size()) return true;
    const int u = order_[step];
    bool tried_untouched = false;
    for (int t = 0; t < k_; ++t) {
      if (++nodes_ > options_.budget) throw BudgetExhausted{};
      if (options_.pruning) {
        if (!touched_[t]) {
          if (tried_untouched) continue;
          tried_untouched = true;
        }
        if (load_[t] + degree_[u] > k_ + 1) continue;
      }
      // Target edges needed by u's already-mapped neighbours (and its loop).
      scratch_.clear();
      bool ok = true;
      for (int w : g_.neighbors(u)) {
        const int image = (w == u) ? t : map_[w];
        if (image < 0) continue;
        if (Used(t, image)) {
          ok = false;
          break;
        }
        scratch_.push_back(image);
      }
      if (!ok) continue;
      std::vector<int> images = scratch_;
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        continue;
      }
      for (int image : images) SetUsed(t, image, 1);
      map_[u] = t;
      load_[t] += degree_[u];
      const char was_touched = touched_[t];
      touched_[t] = 1;

      if (Assign(step + 1)) return true;

      touched_[t] = was_touched;
      load_[t] -= degree_[u];
      map_[u] = -1;
      for (int image : images) SetUsed(t, image, 0);
    }
    return false;
  }

  const LoopedGraph& g_;
  int k_;
  SearchOptions options_;
  std::vector<int> degree_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<int> load_;
  std::vector<char> touched_;
  std::vector<char> used_;
  std::vector<int> scratch_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SearchResult find_embedding(const LoopedGraph& g, int k,
                            const SearchOptions& options) {
  if (k < 1) {
    throw Error(ErrorCode::kInvalidParameter, "embedding search needs k >= 1");
  }
  return EmbeddingSearch(g, k, options).Run();
}

BruteforceResult edcn_bruteforce(const LoopedGraph& g, int k_max,
                                 const SearchOptions& options) {
  BruteforceResult result;
  const long long m = static_cast<long long>(g.edge_count());
  int k = 1;
  while (1LL * k * (k + 1) / 2 < m) ++k;
  for (; k <= k_max; ++k) {
    SearchResult r = find_embedding(g, k, options);
    if (r.status == SearchStatus::kBudgetExhausted) {
      result.status = BruteforceResult::Status::kBudgetExhausted;
      result.lambda = k;
      return result;
    }
    if (r.status == SearchStatus::kFound) {
      result.status = BruteforceResult::Status::kExact;
      result.lambda = k;
      result.witness = std::move(r.embedding);
      return result;
    }
  }
  result.status = BruteforceResult::Status::kAboveLimit;
  result.lambda = k_max + 1;
  return result;
}

std::optional<int> edcn_by_colorings(const LoopedGraph& g, int k_max) {
  const int n = g.vertex_count();
  for (int k = 1; k <= k_max; ++k) {
    VertexColoring c{k, std::vector<int>(n, 1)};
    while (true) {
      if (verify_coloring(g, c).ok) return k;
      int i = 0;
      while (i < n && c.colors[i] == k) c.colors[i++] = 1;
      if (i == n) break;
      ++c.colors[i];
    }
  }
  return std::nullopt;
}

ColoringReport verify_coloring(const LoopedGraph& g, const VertexColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.vertex_count()) {
    throw Error(ErrorCode::kInvalidParameter,
                "coloring has " + std::to_string(c.colors.size()) +
                    " entries for " + std::to_string(g.vertex_count()) +
                    " vertices");
  }
  for (int color : c.colors) {
    if (color < 1 || color > c.k) {
      throw Error(ErrorCode::kInvalidParameter,
                  "color " + std::to_string(color) + " outside [1," +
                      std::to_string(c.k) + "]");
    }
  }
  std::map<Edge, Edge> seen;
  for (const Edge& e : g.edges()) {
    const Edge label(c.colors[e.u], c.colors[e.v]);
    auto [it, inserted] = seen.emplace(label, e);
    if (!inserted) return ColoringReport{false, it->second, e};
  }
  return {};
}

EmbeddingReport verify_embedding(const Embedding& e) {
  auto fail = [](std::string why) { return EmbeddingReport{false, std::move(why)}; };
  if (static_cast<int>(e.map.size()) != e.source.vertex_count()) {
    return fail("map has " + std::to_string(e.map.size()) + " entries for " +
                std::to_string(e.source.vertex_count()) + " vertices");
  }
  for (std::size_t v = 0; v < e.map.size(); ++v) {
    if (e.map[v] < 0 || e.map[v] >= e.target.vertex_count()) {
      return fail("vertex " + std::to_string(v) + " maps outside the target");
    }
  }
  std::map<Edge, Edge> seen;
  for (const Edge& s : e.source.edges()) {
    const Edge image(e.map[s.u], e.map[s.v]);
    const std::string name = "{" + std::to_string(s.u) + "," +
                             std::to_string(s.v) + "}";
    const std::string image_name = "{" + std::to_string(image.u) + "," +
                                   std::to_string(image.v) + "}";
    if (!e.target.HasEdge(image.u, image.v)) {
      return fail("edge " + name + " maps to non-edge " + image_name);
    }
    auto [it, inserted] = seen.emplace(image, s);
    if (!inserted) {
      return fail("edges {" + std::to_string(it->second.u) + "," +
                  std::to_string(it->second.v) + "} and " + name +
                  " both map to " + image_name);
    }
  }
  return {};
}

void RequireValidEmbedding(const Embedding& e) {
  EmbeddingReport report = verify_embedding(e);
  if (!report.ok) {
    throw Error(ErrorCode::kInternal, "invalid embedding: " + report.violation);
  }
}

}  // namespace edcn
