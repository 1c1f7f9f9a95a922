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


// The graph families: paths, cycles, caterpillars, petal graphs, chorded
// cycles and spiders, with the symbolic vertex names the constructions use.

#ifndef EDCN_FAMILIES_HPP_
#define EDCN_FAMILIES_HPP_

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "edcn/graph.hpp"

namespace edcn {

// P_n, n vertices p0..p{n-1}.
struct PathSpec {
  int n = 0;
};

// C_n, n >= 3 vertices c0..c{n-1}.
struct CycleSpec {
  int n = 0;
};

// Central path y_0..y_length plus pendant edges y_{length+t} y_{attach[t-1]}.
// Attachments are non-decreasing and strictly inside the path.
struct CaterpillarSpec {
  int length = 0;
  std::vector<int> attach;
};

// Cycles of the given lengths sharing the hub u_0; a length-1 petal is a
// loop. Lengths are sorted ascending.
struct PetalSpec {
  std::vector<int> petals;
};

// Cycle w_0..w_{n-1} plus the chord w_0 w_j, 2 <= j <= n/2.
struct ChordedCycleSpec {
  int n = 0;
  int j = 0;
};

// Legs of the given lengths glued at the centre x_0, sorted ascending.
struct SpiderSpec {
  std::vector<int> legs;
};

using FamilySpec = std::variant<PathSpec, CycleSpec, CaterpillarSpec,
                                PetalSpec, ChordedCycleSpec, SpiderSpec>;

// Throws kInvalidParameter naming the violated constraint.
void Validate(const FamilySpec& spec);

// Name <-> index map for the symbols y_a, u_0, u^i_t, w_t, x_0, x^i_t.
class VertexAtlas {
 public:
  int Add(std::string name);
  int index(std::string_view name) const;
  const std::string& name(int index) const { return names_.at(index); }
  int size() const { return static_cast<int>(names_.size()); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int, std::less<>> index_;
};

struct RealizedFamily {
  LoopedGraph graph;
  VertexAtlas atlas;
};

// Vertex order: hub/centre first, then petals or legs in sorted order, then
// caterpillar pendant vertices y_{l+1}..y_{l+m}.
RealizedFamily realize(const FamilySpec& spec);

int edge_count(const FamilySpec& spec);

struct MaxDegreeInfo {
  int max_degree = 0;
  // Some max-degree vertex has only neighbours of degree > 1.
  bool interior = false;

  friend bool operator==(const MaxDegreeInfo&, const MaxDegreeInfo&) = default;
};

MaxDegreeInfo max_degree_and_interior(const FamilySpec& spec);

// Index of u^petal_t in realize(PetalSpec); t == 0 and t == c_petal alias
// the hub u_0. `petal` is 1-based.
int PetalVertex(const PetalSpec& spec, int petal, int t);

// Index of x^leg_t in realize(SpiderSpec); t == 0 is the centre. 1-based leg.
int SpiderVertex(const SpiderSpec& spec, int leg, int t);

// Spec grammar: path:7, cycle:9, petal:1,3,5, chorded:n=12,j=4,
// spider:1,2,3,4, caterpillar:l=9,attach=2;5;7. Throws kParse.
FamilySpec ParseFamilySpec(std::string_view text);
std::string ToString(const FamilySpec& spec);

}  // namespace edcn

#endif  // EDCN_FAMILIES_HPP_
