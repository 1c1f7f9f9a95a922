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


// Helpers shared by the odd and even constructions.

#ifndef EDCN_SRC_CONSTRUCT_UTIL_HPP_
#define EDCN_SRC_CONSTRUCT_UTIL_HPP_

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "edcn/error.hpp"
#include "edcn/graph.hpp"

namespace edcn::detail {

inline std::string Str(int x) { return std::to_string(x); }

inline void Require(bool condition, const std::string& what) {
  if (!condition) throw Error(ErrorCode::kInternal, what);
}

// Loops at v_first .. v_{first+count-1}, indices taken mod `modulus` when
// it is positive.
inline EdgeSet Loops(int first, int count, int modulus = 0) {
  EdgeSet out;
  for (int v = first; v < first + count; ++v) {
    const int w = modulus > 0 ? v % modulus : v;
    out.emplace_back(w, w);
  }
  return MakeEdgeSet(std::move(out));
}

inline EdgeSet WalkSet(const std::vector<int>& walk) {
  return MakeEdgeSet(WalkEdges(walk));
}

inline EdgeSet Walk(std::initializer_list<int> walk) {
  return WalkSet(std::vector<int>(walk));
}

// Every degree even except at `odd_a` and `odd_b` (equal for a circuit),
// `odd_a` used, non-isolated part connected.
inline void RequireTrailPart(int k, const EdgeSet& part, int odd_a, int odd_b,
                             const std::string& name) {
  const LoopedGraph g = Subgraph(k, part);
  for (int v = 0; v < k; ++v) {
    const bool want_odd = odd_a != odd_b && (v == odd_a || v == odd_b);
    Require(g.degree(v) % 2 == (want_odd ? 1 : 0),
            name + " has the wrong parity at v" + Str(v));
  }
  Require(g.degree(odd_a) > 0, name + " misses v" + Str(odd_a));
  Require(connected_after_pruning(g), name + " is disconnected");
}

}  // namespace edcn::detail

#endif  // EDCN_SRC_CONSTRUCT_UTIL_HPP_
