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


#include "edcn/embed_even.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "construct_util.hpp"
#include "edcn/embed_odd.hpp"
#include "edcn/error.hpp"
#include "edcn/euler.hpp"
#include "edcn/families.hpp"
#include "edcn/oracle.hpp"

namespace edcn {
namespace {

using detail::Loops;
using detail::Require;
using detail::RequireTrailPart;
using detail::Str;
using detail::Walk;
using detail::WalkSet;

void RequireEvenK(int k) {
  if (k < 2 || k % 2 != 0) {
    throw Error(ErrorCode::kInvalidParameter,
                "k must be even and positive, got " + Str(k));
  }
}

EdgeSet Classes(int k, const std::vector<int>& js) {
  EdgeSet out;
  for (int j : js) out = Union(out, distance_class(k, j));
  return out;
}

EdgeSet NonMatching(int k) {
  return Difference(build_k_star(k).edges(), perfect_matching(k));
}

Embedding Finish(Embedding e) {
  RequireValidEmbedding(e);
  return e;
}

void RequireSize(const EdgeSet& part, int want, const std::string& name) {
  Require(static_cast<int>(part.size()) == want,
          name + " has " + Str(static_cast<int>(part.size())) +
              " edges, expected " + Str(want));
}

}  // namespace

int CountMatchingEdges(const Embedding& e) {
  const int k = e.target.vertex_count();
  if (k % 2 != 0) return 0;
  const EdgeSet matching = perfect_matching(k);
  int count = 0;
  for (const Edge& edge : e.ImageEdges()) count += Contains(matching, edge);
  return count;
}

EvenPlan plan_petal_even(int k, int c2, int c3) {
  RequireEvenK(k);
  if (c2 < 3 || c3 < c2) {
    throw Error(ErrorCode::kInvalidParameter,
                "petal lengths need 3 <= c2 <= c3, got " + Str(c2) + "," +
                    Str(c3));
  }
  const int n = c2 + c3;
  if (n + 1 > k * k / 2) {
    throw Error(ErrorCode::kTooManyEdges,
                "P_{1," + Str(c2) + "," + Str(c3) + "} needs 1 + c2 + c3 <= " +
                    Str(k * k / 2) + " for k = " + Str(k));
  }
  if (k == 4) {
    throw Error(ErrorCode::kProvenImpossible,
                "petal graphs with a loop petal need k >= 6 when k is even");
  }
  EvenPlan plan;
  EvenGapLedger& led = plan.ledger;
  led.k = k;
  led.n = n;
  if (n <= Choose2(k) - 1) {
    led.reduced = true;
    led.branch = "fits K_" + Str(k - 1) + "*";
    return plan;
  }
  led.h = k * k / 2 - 1 - n;
  const int half = k / 2;
  const EdgeSet hub = {Edge(0, 0)};
  EdgeSet h0, h1, h2;

  if (c2 < k) {
    led.branch = "c2 < k";
    std::vector<int> cycle;
    if (c2 == half + 1) {
      cycle = {0, 1, 1};
      for (int v = 2; v <= half - 1; ++v) cycle.push_back(v);
    } else {
      for (int v = 0; v < c2; ++v) cycle.push_back(v);
    }
    cycle.push_back(0);
    h0 = Loops(2, led.h);
    h1 = WalkSet(cycle);
    h2 = Difference(Difference(Difference(NonMatching(k), hub), h0), h1);
  } else if (k == 6) {
    led.branch = "k = 6 hexagons";
    h1 = Union(Walk({0, 1, 3, 5, 4, 2, 0}), Loops(1, c2 - 6));
    h2 = Union(Walk({0, 5, 1, 2, 3, 4, 0}), Loops(1 + c2 - 6, c3 - 6));
    h0 = Difference(Difference(Difference(NonMatching(k), hub), h1), h2);
  } else {
    led.z = (half - 1) % 2 == 1 ? half - 1 : half - 2;
    led.c2_residue = c2 % k;
    led.c3_residue = c3 % k;
    const int r2 = led.c2_residue;
    const int r3 = led.c3_residue;
    const int extra2 = (c2 - r2) / k - 1;
    const int extra3 = (c3 - r3) / k - 1;
    const bool split = r2 + r3 >= k;
    led.branch = split ? "k >= 8, residues >= k" : "k >= 8, residues < k";
    std::vector<int> pool;
    for (int j = split ? 3 : 2; j <= (k - 2) / 2; ++j) {
      if (j != led.z) pool.push_back(j);
    }
    Require(extra2 + extra3 <= static_cast<int>(pool.size()),
            "not enough distance classes");
    const std::vector<int> take2(pool.begin(), pool.begin() + extra2);
    const std::vector<int> take3(pool.begin() + extra2,
                                 pool.begin() + extra2 + extra3);
    h1 = Union(distance_class(k, 1), Classes(k, take2));
    h2 = Union(distance_class(k, led.z), Classes(k, take3));
    if (!split) {
      h1 = Union(h1, Loops(1, r2));
      h2 = Union(h2, Loops(1 + r2, r3));
    } else {
      std::vector<int> even, odd;
      for (int v = 0; v < k; v += 2) even.push_back(v);
      for (int v = 1; v < k; v += 2) odd.push_back(v);
      even.push_back(0);
      odd.push_back(1);
      h1 = Union(Union(h1, WalkSet(even)), Loops(1, r2 - half));
      h2 = Union(Union(h2, WalkSet(odd)), Loops(1 + r2 - half, r3 - half));
    }
    h0 = Difference(Difference(Difference(NonMatching(k), hub), h1), h2);
  }

  RequireSize(h0, led.h, "H0");
  RequireSize(h1, c2, "H1");
  RequireSize(h2, c3, "H2");
  RequireTrailPart(k, h1, 0, 0, "H1");
  RequireTrailPart(k, h2, 0, 0, "H2");
  plan.partition.parts = {{"loop", hub}, {"H0", h0}, {"H1", h1}, {"H2", h2}};
  plan.partition.Validate(build_k_star(k));
  for (const auto& [name, part] : plan.partition.parts) {
    Require(Intersection(part, perfect_matching(k)).empty(), name + " meets I");
  }
  return plan;
}

Embedding embed_petal_even(int k, int c2, int c3) {
  const EvenPlan plan = plan_petal_even(k, c2, c3);
  if (plan.ledger.reduced) return LiftTo(embed_petal_odd(k - 1, c2, c3), k);
  const PetalSpec spec{{1, c2, c3}};
  Embedding e{realize(spec).graph, build_k_star(k), {}};
  e.map.assign(e.source.vertex_count(), 0);
  for (int petal : {2, 3}) {
    const EdgeSet& part = plan.partition.part(petal == 2 ? "H1" : "H2");
    const std::vector<int> walk = euler_trail(Subgraph(k, part), 0, 0);
    const int c = petal == 2 ? c2 : c3;
    for (int t = 1; t < c; ++t) e.map[PetalVertex(spec, petal, t)] = walk[t];
  }
  return Finish(std::move(e));
}

EvenPlan plan_chorded_even(int k, int n, int j) {
  RequireEvenK(k);
  Validate(ChordedCycleSpec{n, j});
  if (n > k * k / 2) {
    throw Error(ErrorCode::kTooManyEdges,
                "C_" + Str(n) + " with a chord needs n <= " + Str(k * k / 2) +
                    " for k = " + Str(k));
  }
  if (k == 4 && n == 8 && j == 2) {
    throw Error(ErrorCode::kProvenImpossible,
                "C_8 with chord w0w2 has no embedding in K_4*");
  }
  EvenPlan plan;
  EvenGapLedger& led = plan.ledger;
  led.k = k;
  led.n = n;
  if (n <= Choose2(k) - 3) {
    led.reduced = true;
    led.branch = "fits K_" + Str(k - 1) + "*";
    return plan;
  }
  const int half = k / 2;
  led.h = k * k / 2 - n;
  const EdgeSet chord = {Edge(0, half)};
  EdgeSet h0, h1;

  if (j <= half) {
    led.branch = "j <= k/2";
    h0 = Loops(1, led.h, k);
    std::vector<int> path;
    for (int v = 0; v < j; ++v) path.push_back(v);
    path.push_back(half);
    h1 = WalkSet(path);
  } else {
    led.branch = "j > k/2";
    const int r = (j - half) % k;
    led.j_prime = r == 0 ? k : r;
    const int r2 = led.j_prime % half;
    led.j_double_prime = r2 == 0 ? half : r2;
    const int jp = led.j_prime;
    const int jpp = led.j_double_prime;
    std::vector<int> even, odd;
    for (int v = 0; v < k; v += 2) even.push_back(v);
    for (int v = 1; v < k; v += 2) odd.push_back(v);
    even.push_back(0);
    odd.push_back(1);
    if (led.h <= half) {
      h0 = Loops(jpp + 1, led.h, k);
    } else {
      h0 = Union(Loops(jpp + 1, led.h - half, k), WalkSet(even));
    }
    std::vector<int> path;
    for (int v = 0; v <= half; ++v) path.push_back(v);
    h1 = WalkSet(path);
    const int classes = (j - half - jp) / k;
    std::vector<int> take;
    for (int c = 3; c <= (k - 2) / 2 && static_cast<int>(take.size()) < classes;
         ++c) {
      take.push_back(c);
    }
    Require(static_cast<int>(take.size()) == classes,
            "not enough distance classes");
    h1 = Union(h1, Classes(k, take));
    if (jp <= half) {
      h1 = Union(h1, Loops(1, jp));
    } else {
      h1 = Union(Union(h1, Loops(1, jpp)), WalkSet(odd));
    }
  }
  const EdgeSet h2 = Difference(Difference(NonMatching(k), h0), h1);

  RequireSize(h0, led.h, "H0");
  RequireSize(h1, j, "H1");
  RequireSize(h2, n - j, "H2");
  RequireTrailPart(k, h1, 0, half, "H1");
  RequireTrailPart(k, h2, 0, half, "H2");
  plan.partition.parts = {{"chord", chord}, {"H0", h0}, {"H1", h1},
                          {"H2", h2}};
  plan.partition.Validate(build_k_star(k));
  return plan;
}

Embedding embed_chorded_even(int k, int n, int j) {
  const EvenPlan plan = plan_chorded_even(k, n, j);
  if (plan.ledger.reduced) return LiftTo(embed_chorded_odd(k - 1, n, j), k);
  const int half = k / 2;
  const std::vector<int> first =
      euler_trail(Subgraph(k, plan.partition.part("H1")), 0, half);
  const std::vector<int> second =
      euler_trail(Subgraph(k, plan.partition.part("H2")), 0, half);
  Require(static_cast<int>(first.size()) == j + 1, "H1 trail length");
  Require(static_cast<int>(second.size()) == n - j + 1, "H2 trail length");
  Embedding e{realize(ChordedCycleSpec{n, j}).graph, build_k_star(k),
              std::vector<int>(n)};
  for (int t = 0; t <= j; ++t) e.map[t] = first[t];
  for (int t = 1; t < n - j; ++t) e.map[n - t] = second[t];
  return Finish(std::move(e));
}

namespace {

// Legs 2..4 for x_0 = x^1_1 = v_0 in K_4*, keyed by the sorted legs.
const std::map<std::array<int, 4>, std::array<std::vector<int>, 3>>&
K4SpiderTable() {
  static const auto* table =
      new std::map<std::array<int, 4>, std::array<std::vector<int>, 3>>{
          {{1, 1, 1, 7}, {{{1}, {2}, {3, 3, 2, 2, 1, 1, 3}}}},
          {{1, 1, 2, 6}, {{{1}, {2, 2}, {3, 3, 2, 1, 1, 3}}}},
          {{1, 1, 3, 5}, {{{1}, {2, 2, 3}, {3, 3, 1, 1, 2}}}},
          {{1, 1, 4, 4}, {{{1}, {2, 2, 3, 3}, {3, 1, 1, 2}}}},
          {{1, 2, 2, 5}, {{{1, 1}, {2, 2}, {3, 3, 1, 2, 3}}}},
          {{1, 2, 3, 4}, {{{1, 1}, {2, 2, 3}, {3, 3, 1, 2}}}},
          {{1, 3, 3, 3}, {{{1, 1, 2}, {2, 2, 3}, {3, 3, 1}}}},
      };
  return *table;
}

// Spider with (k^2 + 4)/2 edges, k >= 6; map indexed as realize(spider).
std::vector<int> FullSpiderEven(int k, const SpiderSpec& spider) {
  const int l1 = spider.legs[0], l2 = spider.legs[1], l3 = spider.legs[2],
            l4 = spider.legs[3];
  const int half = k / 2;
  std::vector<int> map(realize(spider).graph.vertex_count(), 0);
  auto at = [&](int leg, int t) -> int& {
    return map[SpiderVertex(spider, leg, t)];
  };
  auto partner = [&](int v) { return (v + half) % k; };

  if (l2 + l3 < 4) {
    // Image (K_k* - I) + v0v_{k/2} + v1v_{k/2+1}.
    at(1, 1) = 0;
    at(2, 1) = half;
    at(3, 1) = 1;
    EdgeSet used = {Edge(0, 0), Edge(0, half), Edge(0, 1)};
    if (l3 == 2) {
      at(3, 2) = 1;
      used.emplace_back(1, 1);
    }
    const EdgeSet image =
        Union(NonMatching(k), MakeEdgeSet({Edge(0, half), Edge(1, half + 1)}));
    const std::vector<int> trail = euler_trail(
        Subgraph(k, Difference(image, MakeEdgeSet(used))), 0, half + 1);
    Require(static_cast<int>(trail.size()) == l4 + 1, "leg 4 trail length");
    for (int t = 1; t <= l4; ++t) at(4, t) = trail[t];
    return map;
  }

  const bool two_first = l2 + l3 - 1 <= l1 + l4 - 2;
  const int pi = two_first ? 2 : 3;
  const int pj = two_first ? 3 : 2;
  const int ci = l2 + l3 - 1;
  const int cj = l1 + l4 - 2;
  const PetalSpec petal{{1, std::min(ci, cj), std::max(ci, cj)}};
  const Embedding psi = embed_petal_even(k, petal.petals[1], petal.petals[2]);
  Require(CountMatchingEdges(psi) == 0, "petal image meets I");
  auto u = [&](int p, int t) { return psi.map[PetalVertex(petal, p, t)]; };

  for (int t = 1; t <= l2; ++t) at(2, t) = u(pi, t);
  const int a = u(pi, l2);
  for (int t = 1; t < l3; ++t) at(3, t) = u(pi, ci - t);
  at(3, l3) = partner(a);

  const int b2 = u(pj, l4 - 2);
  const int b1 = u(pj, l4 - 1);
  auto near_a = [&](int v) { return v == a || v == partner(a); };
  if (!near_a(b2)) {
    at(4, 1) = u(2, 0);
    for (int t = 2; t < l4; ++t) at(4, t) = u(pj, t - 1);
    at(4, l4) = partner(b2);
    for (int t = 1; t <= l1; ++t) at(1, t) = u(pj, cj - t);
  } else if (!near_a(b1)) {
    at(4, 1) = u(2, 0);
    for (int t = 2; t <= l4; ++t) at(4, t) = u(pj, t - 1);
    for (int t = 1; t < l1; ++t) at(1, t) = u(pj, cj - t);
    at(1, l1) = partner(b1);
  } else {
    Require(l1 > 1, "first leg too short for the both-near case");
    const int b0 = u(pj, l4);
    for (int t = 1; t <= l4; ++t) at(4, t) = u(pj, t);
    at(1, 1) = u(2, 0);
    for (int t = 2; t < l1; ++t) at(1, t) = u(pj, cj - t + 1);
    at(1, l1) = partner(b0);
  }
  return map;
}

}  // namespace

Embedding embed_spider4_even(int k, std::array<int, 4> legs) {
  RequireEvenK(k);
  std::sort(legs.begin(), legs.end());
  if (legs[0] < 1) {
    throw Error(ErrorCode::kInvalidParameter, "legs must be >= 1");
  }
  const int n = legs[0] + legs[1] + legs[2] + legs[3];
  const int full = (k * k + 4) / 2;
  if (k < 4 || n > full) {
    throw Error(ErrorCode::kTooManyEdges,
                "four-leg spider with " + Str(n) + " edges needs n <= " +
                    Str(k < 4 ? Choose2(k + 1) : full) + " for k = " + Str(k));
  }
  if (k == 4 && legs[0] == 2) {
    throw Error(ErrorCode::kProvenImpossible,
                "no embedding of a four-leg spider with shortest leg 2 in "
                "K_4*");
  }
  const SpiderSpec spider{{legs[0], legs[1], legs[2], legs[3]}};
  const SpiderSpec ext{{legs[0], legs[1], legs[2], legs[3] + full - n}};

  std::vector<int> full_map;
  if (k == 4) {
    const std::array<int, 4> key = {ext.legs[0], ext.legs[1], ext.legs[2],
                                    ext.legs[3]};
    const auto it = K4SpiderTable().find(key);
    Require(it != K4SpiderTable().end(), "K_4* spider table miss");
    full_map.assign(realize(ext).graph.vertex_count(), 0);
    for (int leg = 2; leg <= 4; ++leg) {
      const std::vector<int>& image = it->second[leg - 2];
      for (int t = 1; t <= ext.legs[leg - 1]; ++t) {
        full_map[SpiderVertex(ext, leg, t)] = image[t - 1];
      }
    }
  } else {
    full_map = FullSpiderEven(k, ext);
  }

  const Embedding whole{realize(ext).graph, build_k_star(k), full_map};
  RequireValidEmbedding(whole);
  if (k >= 6) {
    const int used = CountMatchingEdges(whole);
    const bool small_middle = ext.legs[1] + ext.legs[2] < 4;
    Require(small_middle ? used == 2 : used <= 2, "unexpected use of I");
  }

  Embedding e{realize(spider).graph, build_k_star(k), {}};
  e.map.assign(e.source.vertex_count(), 0);
  for (int leg = 1; leg <= 4; ++leg) {
    for (int t = 1; t <= spider.legs[leg - 1]; ++t) {
      e.map[SpiderVertex(spider, leg, t)] =
          full_map[SpiderVertex(ext, leg, t)];
    }
  }
  return Finish(std::move(e));
}

namespace {

// Three-leg spider with (k^2 + 4)/2 edges and sorted legs; map indexed as
// realize(ext), or nullopt when no arrangement avoids the diagonal clash.
std::optional<std::vector<int>> FullSpider3Even(int k, const SpiderSpec& ext) {
  const int half = k / 2;
  const LoopedGraph graph = realize(ext).graph;
  auto partner = [&](int v) { return (v + half) % k; };
  std::vector<int> map(graph.vertex_count(), 0);

  if (ext.legs[0] + ext.legs[1] < 4) {
    // Legs 1, 2 on v0v_{k/2} and v0v1 (plus v1v1); leg 3 is the Eulerian
    // trail of the rest of (K_k* - I) + v0v_{k/2} + v1v_{k/2+1}.
    map[SpiderVertex(ext, 1, 1)] = half;
    map[SpiderVertex(ext, 2, 1)] = 1;
    EdgeSet used = {Edge(0, half), Edge(0, 1)};
    if (ext.legs[1] == 2) {
      map[SpiderVertex(ext, 2, 2)] = 1;
      used.emplace_back(1, 1);
    }
    const EdgeSet image =
        Union(NonMatching(k), MakeEdgeSet({Edge(0, half), Edge(1, half + 1)}));
    const std::vector<int> trail = euler_trail(
        Subgraph(k, Difference(image, MakeEdgeSet(used))), 0, half + 1);
    Require(static_cast<int>(trail.size()) == ext.legs[2] + 1,
            "leg 3 trail length");
    for (int t = 1; t <= ext.legs[2]; ++t) {
      map[SpiderVertex(ext, 3, t)] = trail[t];
    }
    return map;
  }

  // Legs a, b share one petal and close with an edge of I; leg c takes the
  // loop, the other petal and the diagonal v0v_{k/2}.
  for (int c = 3; c >= 1; --c) {
    const int lc = ext.legs[c - 1];
    const int a = c == 1 ? 2 : 1;
    const int b = c == 3 ? 2 : 3;
    const int ci = ext.legs[a - 1] + ext.legs[b - 1] - 1;
    const int cj = lc - 2;
    if (cj < 3 || ci < 3) continue;
    const int pi = ci <= cj ? 2 : 3;
    const int pj = ci <= cj ? 3 : 2;
    const PetalSpec petal{{1, std::min(ci, cj), std::max(ci, cj)}};
    const Embedding psi = embed_petal_even(k, petal.petals[1], petal.petals[2]);
    Require(CountMatchingEdges(psi) == 0, "petal image meets I");
    auto u = [&](int p, int t) { return psi.map[PetalVertex(petal, p, t)]; };
    for (const bool reverse : {false, true}) {
      auto w = [&](int t) { return u(pi, reverse ? ci - t : t); };
      for (const auto& [first, second] : {std::pair{a, b}, std::pair{b, a}}) {
        const int l_first = ext.legs[first - 1];
        const int l_second = ext.legs[second - 1];
        const int meet = w(l_first);
        if (meet == 0 || meet == half) continue;
        std::fill(map.begin(), map.end(), 0);
        for (int t = 1; t <= l_first; ++t) {
          map[SpiderVertex(ext, first, t)] = w(t);
        }
        for (int t = 1; t < l_second; ++t) {
          map[SpiderVertex(ext, second, t)] = w(ci - t);
        }
        map[SpiderVertex(ext, second, l_second)] = partner(meet);
        for (int t = 1; t <= cj; ++t) {
          map[SpiderVertex(ext, c, 1 + t)] = u(pj, t);
        }
        map[SpiderVertex(ext, c, lc)] = half;
        if (verify_embedding({graph, build_k_star(k), map}).ok) return map;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Embedding embed_spider3_even(int k, std::array<int, 3> legs) {
  RequireEvenK(k);
  std::sort(legs.begin(), legs.end());
  if (legs[0] < 1) {
    throw Error(ErrorCode::kInvalidParameter, "legs must be >= 1");
  }
  if (k < 6) {
    throw Error(ErrorCode::kUnsupportedInput,
                "three-leg spider construction needs k >= 6");
  }
  const int n = legs[0] + legs[1] + legs[2];
  const int full = (k * k + 4) / 2;
  if (n > full) {
    throw Error(ErrorCode::kTooManyEdges,
                "three-leg spider with " + Str(n) + " edges needs n <= " +
                    Str(full) + " for k = " + Str(k));
  }
  const SpiderSpec spider{{legs[0], legs[1], legs[2]}};
  const int extra = full - n;

  // Grow one leg, or split the growth between the two longest legs.
  std::vector<std::array<int, 3>> growths;
  for (int leg = 2; leg >= 0; --leg) {
    std::array<int, 3> g = {0, 0, 0};
    g[leg] = extra;
    growths.push_back(g);
  }
  for (int part = 1; part < extra; ++part) growths.push_back({0, part, extra - part});

  for (const auto& growth : growths) {
    std::array<int, 3> grown = legs;
    for (int i = 0; i < 3; ++i) grown[i] += growth[i];
    // order[r] is the original leg placed at sorted rank r.
    std::array<int, 3> order = {0, 1, 2};
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return grown[x] < grown[y]; });
    SpiderSpec ext{{}};
    for (int r = 0; r < 3; ++r) ext.legs.push_back(grown[order[r]]);
    const auto full_map = FullSpider3Even(k, ext);
    if (!full_map) continue;
    Embedding e{realize(spider).graph, build_k_star(k), {}};
    e.map.assign(e.source.vertex_count(), 0);
    for (int r = 0; r < 3; ++r) {
      const int leg = order[r] + 1;
      for (int t = 1; t <= spider.legs[leg - 1]; ++t) {
        e.map[SpiderVertex(spider, leg, t)] =
            (*full_map)[SpiderVertex(ext, r + 1, t)];
      }
    }
    return Finish(std::move(e));
  }
  throw Error(ErrorCode::kInternal,
              "no petal arrangement for the three-leg spider");
}

}  // namespace edcn
