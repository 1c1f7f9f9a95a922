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


// Ground truth: exhaustive embedding search into K_k*, brute-force EDCN,
// coloring enumeration and the certificate verifiers.

#ifndef EDCN_ORACLE_HPP_
#define EDCN_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "edcn/graph.hpp"

namespace edcn {

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

struct SearchOptions {
  // Node expansions, not wall time, so outcomes are reproducible.
  std::uint64_t budget = kDefaultSearchBudget;
  // Symmetry breaking, degree-capacity and parity pruning. Off gives the
  // plain backtracking reference used to cross-check the pruned search.
  bool pruning = true;
};

enum class SearchStatus { kFound, kProvenNone, kBudgetExhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::kProvenNone;
  std::optional<Embedding> embedding;
  std::uint64_t nodes = 0;
};

// Edge-injective homomorphism g -> K_k*, found or refuted by backtracking.
SearchResult find_embedding(const LoopedGraph& g, int k,
                            const SearchOptions& options = {});

struct BruteforceResult {
  enum class Status { kExact, kAboveLimit, kBudgetExhausted };
  Status status = Status::kAboveLimit;
  int lambda = 0;
  std::optional<Embedding> witness;
};

// Least k <= k_max with an embedding into K_k*.
BruteforceResult edcn_bruteforce(const LoopedGraph& g, int k_max,
                                 const SearchOptions& options = {});

// Least k <= k_max admitting an edge-distinguishing coloring, by enumerating
// all k^n colorings. Only for tiny graphs.
std::optional<int> edcn_by_colorings(const LoopedGraph& g, int k_max);

struct ColoringReport {
  bool ok = true;
  // First pair of source edges with equal labels when !ok.
  Edge first;
  Edge second;
};

// Throws kInvalidParameter when the color count does not match the graph or
// a color lies outside [1, k].
ColoringReport verify_coloring(const LoopedGraph& g, const VertexColoring& c);

struct EmbeddingReport {
  bool ok = true;
  std::string violation;
};

EmbeddingReport verify_embedding(const Embedding& e);

// Throws kInternal with the violation when `e` is not a valid embedding.
void RequireValidEmbedding(const Embedding& e);

}  // namespace edcn

#endif  // EDCN_ORACLE_HPP_
