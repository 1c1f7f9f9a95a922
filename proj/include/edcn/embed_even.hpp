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


// Constructive embeddings into K_k* for even k: petal graphs P_{1,c2,c3},
// chorded cycles and spiders with four legs. Results are validated before
// they are returned.

#ifndef EDCN_EMBED_EVEN_HPP_
#define EDCN_EMBED_EVEN_HPP_

#include <array>
#include <string>

#include "edcn/graph.hpp"

namespace edcn {

// Bookkeeping of the even constructions. `k` is the working size; when the
// input fits K_{k-1}* the odd construction is used and `reduced` is set.
struct EvenGapLedger {
  int k = 0;
  int n = 0;
  int h = 0;
  bool reduced = false;
  std::string branch;
  // Petal, k >= 8: odd element of {(k-2)/2, (k-4)/2} and the residues mod k.
  int z = 0;
  int c2_residue = 0;
  int c3_residue = 0;
  // Chorded, j > k/2: j' and j''.
  int j_prime = 0;
  int j_double_prime = 0;
};

struct EvenPlan {
  EvenGapLedger ledger;
  // Parts "H0", "H1", "H2" plus "loop" (petal) or "chord" (chorded), all in
  // K_k* with the chord the only edge of I used. Empty when reduced.
  EdgePartition partition;
};

EvenPlan plan_petal_even(int k, int c2, int c3);
EvenPlan plan_chorded_even(int k, int n, int j);

Embedding embed_petal_even(int k, int c2, int c3);
Embedding embed_chorded_even(int k, int n, int j);
Embedding embed_spider4_even(int k, std::array<int, 4> legs);
// k >= 6. Extends the longest leg to (k^2 + 4)/2 edges, embeds into
// (K_k* - I) plus two edges of I, then restricts.
Embedding embed_spider3_even(int k, std::array<int, 3> legs);

// Number of source edges whose image lies in the perfect matching I.
int CountMatchingEdges(const Embedding& e);

}  // namespace edcn

#endif  // EDCN_EMBED_EVEN_HPP_
