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


// Eulerian trails and the black-vertex Eulerian circuit search on K_k.

#ifndef EDCN_EULER_HPP_
#define EDCN_EULER_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "edcn/graph.hpp"

namespace edcn {

// Walk from `start` to `end` using every edge of `g` exactly once. A loop
// shows up as a repeated vertex. Deterministic: at each vertex an unused
// loop is taken first, then the lowest-index unused neighbour.
//
// Requires the non-isolated part of `g` to be connected and either
// start == end with all degrees even, or start != end being exactly the two
// odd-degree vertices. Throws kNotEulerian otherwise.
std::vector<int> euler_trail(const LoopedGraph& g, int start, int end);

inline constexpr std::uint64_t kDefaultBlackCycleBudget = 50'000'000;

// Closed walk z_0 z_1 ... z_N (N = C(k,2), z_N = z_0) through K_k using
// every non-loop edge once, with the vertices at `black_positions` pairwise
// distinct. Returns std::nullopt when the exhaustive search proves that no
// such circuit exists. Throws kInternal when `budget` node expansions run
// out first.
std::optional<std::vector<int>> SearchBlackCycle(
    int k, std::span<const int> black_positions,
    std::uint64_t budget = kDefaultBlackCycleBudget);

// As SearchBlackCycle, but for odd k >= 3 and exactly k distinct positions.
// Throws kProvenImpossible for the two excluded k = 5 position patterns and
// kInternal if the search fails anyway.
std::vector<int> black_cycle_embedding(
    int k, std::span<const int> black_positions,
    std::uint64_t budget = kDefaultBlackCycleBudget);

// True iff the five residues mod 10 are a rotation of {0,3,4,6,7} or of
// {0,1,3,7,9}.
bool is_forbidden_k5_pattern(std::span<const int> positions);

}  // namespace edcn

#endif  // EDCN_EULER_HPP_
