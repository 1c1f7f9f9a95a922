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


// Closed-form EDCN values, the degree lower bound, and the dispatcher that
// returns lambda together with a verified coloring certificate.

#ifndef EDCN_EDCN_HPP_
#define EDCN_EDCN_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edcn/families.hpp"
#include "edcn/graph.hpp"
#include "edcn/oracle.hpp"

namespace edcn {

// Smallest r >= 0 with r * r >= x. Exact; x may be negative (returns 0).
std::int64_t ceil_sqrt(std::int64_t x);

// ceil((-1 + sqrt(d)) / 2): smallest k >= 0 with (2k + 1)^2 >= d. Exact.
std::int64_t tri_ceil(std::int64_t d);

struct FormulaValue {
  int lambda = 0;
  std::string branch;
};

// lambda for paths, cycles, three-leg spiders, short-leg spiders,
// P_{1,c2,c3}, chorded cycles and four-leg spiders. Throws kNoFormula
// otherwise.
FormulaValue edcn_formula(const FamilySpec& spec);

// Max degree, plus one when some max-degree vertex has only neighbours of
// degree > 1. Throws kUnsupportedInput on graphs with loops.
int lower_bound(const LoopedGraph& g);

struct Construction {
  Embedding embedding;
  // Which constructor produced the embedding.
  std::string method;
};

// Constructive embedding into K_k*. Throws kTooManyEdges or
// kProvenImpossible when the constructors rule k out; nullopt when no
// constructor covers (spec, k).
std::optional<Construction> construct_at(const FamilySpec& spec, int k);

struct CertificateOptions {
  // Budget for every oracle call made by the dispatcher.
  std::uint64_t oracle_budget = 20'000'000;
  // Also search k upward through the constructors and require the first
  // success to equal the formula value.
  bool cross_check = false;
};

struct EdcnResult {
  int lambda = 0;
  VertexColoring coloring;
  Embedding embedding;
  // Formula branch, or "oracle" when no formula applies.
  std::string provenance;
  // How the certificate was obtained.
  std::string method;
};

// Throws kCapability when no constructor applies and the oracle budget is
// not enough, kInternal when a certificate fails verification.
EdcnResult edcn_with_certificate(const FamilySpec& spec,
                                 const CertificateOptions& options = {});

// Injective vertex map h -> g sending edges to edges, or nullopt.
std::optional<std::vector<int>> find_subgraph_map(
    const LoopedGraph& h, const LoopedGraph& g,
    std::uint64_t budget = 10'000'000);

struct MonotonicityOptions {
  // Compute both values with the oracle instead of the formulas.
  bool oracle_only = false;
  SearchOptions search;
};

// lambda(h) <= lambda(g). Throws kInvalidParameter when realize(h) is not a
// subgraph of realize(g).
bool monotonicity_check(const FamilySpec& h, const FamilySpec& g,
                        const MonotonicityOptions& options = {});

// lambda from the formula when one applies, else from edcn_bruteforce.
// Throws kCapability when the oracle budget runs out.
int edcn_value(const FamilySpec& spec, const SearchOptions& search = {});

}  // namespace edcn

#endif  // EDCN_EDCN_HPP_
