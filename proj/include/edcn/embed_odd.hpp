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


// Constructive embeddings into K_k* for odd k: caterpillars, petal graphs
// P_{1,c2,c3}, chorded cycles and spiders with three or four legs.
//
// Every function returns an Embedding whose source is realize() of the
// corresponding family and whose target is K_k*. Each result is checked with
// RequireValidEmbedding before it is returned.

#ifndef EDCN_EMBED_ODD_HPP_
#define EDCN_EMBED_ODD_HPP_

#include <array>

#include "edcn/families.hpp"
#include "edcn/graph.hpp"

namespace edcn {

inline constexpr int Choose2(int x) { return x * (x - 1) / 2; }

// Bookkeeping of the petal construction. `k` is the working size after the
// reduction to the smallest odd k with n > C(k-1,2) - 1.
struct OddGapLedger {
  int k = 0;
  int n = 0;        // c2 + c3
  int h = 0;        // C(k+1,2) - 1 - n
  int ell = 0;      // odd, C(ell-1,2) - 1 < c2 <= C(ell+1,2) - 1
  int g = 0;        // C(ell+1,2) - 1 - c2 = |S|
  int g_prime = 0;  // loops in S
  int h_prime = 0;  // h - g', meaningful when h > g'
  int h_tilde = 0;  // residue of h' mod 4 taken by loops / the triangle
};

struct OddPetalPlan {
  OddGapLedger ledger;
  // Parts "loop" (v0v0), "H0", "H1", "H2" of K_k* for k = ledger.k.
  EdgePartition partition;
};

// Largest gap h allowed when ell = k - 2: min(2k - 2, (-k^2 + 15k - 26)/2).
int case2_gap_bound(int k);

OddPetalPlan plan_petal_odd(int k, int c2, int c3);

Embedding embed_caterpillar_odd(int k, const CaterpillarSpec& spec);
Embedding embed_petal_odd(int k, int c2, int c3);
Embedding embed_chorded_odd(int k, int n, int j);
Embedding embed_spider3_odd(int k, std::array<int, 3> legs);
Embedding embed_spider4_odd(int k, std::array<int, 4> legs);

// Same embedding, target enlarged to K_k* by the identity on indices.
Embedding LiftTo(Embedding e, int k);

// source -> intermediate (a vertex map that sends edges to distinct edges)
// followed by `inner`. Validated by the caller.
Embedding Compose(const LoopedGraph& source, const std::vector<int>& to_inner,
                  const Embedding& inner);

}  // namespace edcn

#endif  // EDCN_EMBED_ODD_HPP_
