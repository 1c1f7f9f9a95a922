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


#include "edcn/embed_odd.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "edcn/error.hpp"
#include "edcn/euler.hpp"
#include "edcn/oracle.hpp"
#include "construct_util.hpp"

namespace edcn {
namespace {

using detail::Loops;
using detail::Require;
using detail::Str;
using detail::Walk;

void RequireOddK(int k) {
  if (k < 1 || k % 2 == 0) {
    throw Error(ErrorCode::kInvalidParameter,
                "k must be odd and positive, got " + Str(k));
  }
}

EdgeSet KStarEdges(int first, int count) {
  EdgeSet out;
  for (int a = first; a < first + count; ++a) {
    for (int b = a; b < first + count; ++b) out.emplace_back(a, b);
  }
  return MakeEdgeSet(std::move(out));
}

void RequireEulerianPart(int k, const EdgeSet& part, int anchor,
                         const std::string& name) {
  detail::RequireTrailPart(k, part, anchor, anchor, name);
}

Embedding Finish(Embedding e) {
  RequireValidEmbedding(e);
  return e;
}

}  // namespace

int case2_gap_bound(int k) {
  return std::min(2 * k - 2, (-k * k + 15 * k - 26) / 2);
}

Embedding LiftTo(Embedding e, int k) {
  Require(e.target.vertex_count() <= k, "lift to a smaller target");
  e.target = build_k_star(k);
  return e;
}

Embedding Compose(const LoopedGraph& source, const std::vector<int>& to_inner,
                  const Embedding& inner) {
  Embedding out{source, inner.target, {}};
  out.map.reserve(to_inner.size());
  for (int x : to_inner) out.map.push_back(inner.map.at(x));
  return out;
}

OddPetalPlan plan_petal_odd(int k, int c2, int c3) {
  RequireOddK(k);
  if (c2 < 3 || c3 < c2) {
    throw Error(ErrorCode::kInvalidParameter,
                "petal lengths need 3 <= c2 <= c3, got " + Str(c2) + "," +
                    Str(c3));
  }
  const int n = c2 + c3;
  if (n + 1 > Choose2(k + 1)) {
    throw Error(ErrorCode::kTooManyEdges,
                "P_{1," + Str(c2) + "," + Str(c3) + "} has " + Str(n + 1) +
                    " edges, K_" + Str(k) + "* has " + Str(Choose2(k + 1)));
  }
  while (k >= 7 && n <= Choose2(k - 1) - 1) k -= 2;

  OddGapLedger led;
  led.k = k;
  led.n = n;
  led.h = Choose2(k + 1) - 1 - n;
  led.ell = 3;
  while (c2 > Choose2(led.ell + 1) - 1) led.ell += 2;
  const int ell = led.ell;
  led.g = Choose2(ell + 1) - 1 - c2;

  EdgeSet s;
  if (led.g <= ell - 1) {
    s = Loops(1, led.g);
    led.g_prime = led.g;
  } else {
    std::vector<int> cycle;
    for (int v = 0; v < ell; ++v) cycle.push_back(v);
    cycle.push_back(0);
    s = Union(detail::WalkSet(cycle), Loops(1, led.g - ell));
    led.g_prime = led.g - ell;
  }
  const EdgeSet hub = {Edge(0, 0)};
  EdgeSet h1 = Difference(Difference(KStarEdges(0, ell), hub), s);

  EdgeSet h0;
  if (led.h <= led.g_prime) {
    h0 = Loops(1, led.h);
  } else {
    Require(k > ell, "gap exceeds S with ell = k");
    led.h_prime = led.h - led.g_prime;
    EdgeSet extra;
    if (k - ell >= 4) {
      led.h_tilde = led.h_prime % 4 == 0 ? 4 : led.h_prime % 4;
      int cycles = (led.h_prime - led.h_tilde) / 4;
      for (int s_idx = 1; s_idx <= (ell - 1) / 2 && cycles > 0; ++s_idx) {
        for (int t = 1; t <= (k - ell) / 2 && cycles > 0; ++t, --cycles) {
          extra = Union(extra, Walk({2 * s_idx - 1, ell + 2 * t - 2, 2 * s_idx,
                                     ell + 2 * t - 1, 2 * s_idx - 1}));
        }
      }
      Require(cycles == 0, "not enough four-cycles for the gap");
      extra = Union(extra, Loops(ell, led.h_tilde));
    } else {
      Require(led.h_prime <= 2 * k - 4, "gap beyond the k - ell = 2 bound");
      led.h_tilde = led.h_prime % 4;
      const int cycles = (led.h_prime - led.h_tilde) / 4;
      for (int s_idx = 1; s_idx <= cycles; ++s_idx) {
        extra = Union(extra, Walk({2 * s_idx - 1, k - 2, 2 * s_idx, k - 1,
                                   2 * s_idx - 1}));
      }
      if (led.h_tilde <= 2) {
        extra = Union(extra, Loops(k - 2, led.h_tilde));
      } else {
        extra = Union(extra, Walk({k - 3, k - 2, k - 1, k - 3}));
      }
    }
    Require(Intersection(extra, s).empty(), "H0 overlaps S");
    h0 = Union(extra, Loops(1, led.g_prime));
  }

  LoopedGraph target = build_k_star(k);
  EdgeSet h2 = Difference(Difference(Difference(target.edges(), hub), h0), h1);

  Require(static_cast<int>(h0.size()) == led.h, "|H0| != h");
  Require(static_cast<int>(h1.size()) == c2, "|H1| != c2");
  Require(static_cast<int>(h2.size()) == c3, "|H2| != c3");
  RequireEulerianPart(k, h1, 0, "H1");
  RequireEulerianPart(k, h2, 0, "H2");

  OddPetalPlan plan{led, {}};
  plan.partition.parts = {
      {"loop", hub}, {"H0", h0}, {"H1", h1}, {"H2", h2}};
  plan.partition.Validate(target);
  return plan;
}

Embedding embed_petal_odd(int k, int c2, int c3) {
  const OddPetalPlan plan = plan_petal_odd(k, c2, c3);
  const int kw = plan.ledger.k;
  const PetalSpec spec{{1, c2, c3}};
  Embedding e{realize(spec).graph, build_k_star(k), {}};
  e.map.assign(e.source.vertex_count(), 0);
  for (int petal : {2, 3}) {
    const EdgeSet& part = plan.partition.part(petal == 2 ? "H1" : "H2");
    const std::vector<int> walk = euler_trail(Subgraph(kw, part), 0, 0);
    const int c = petal == 2 ? c2 : c3;
    Require(static_cast<int>(walk.size()) == c + 1, "petal walk length");
    for (int t = 1; t < c; ++t) e.map[PetalVertex(spec, petal, t)] = walk[t];
  }
  return Finish(std::move(e));
}

Embedding embed_chorded_odd(int k, int n, int j) {
  RequireOddK(k);
  Validate(ChordedCycleSpec{n, j});
  const LoopedGraph source = realize(ChordedCycleSpec{n, j}).graph;

  if (j >= 3) {
    if (n > Choose2(k + 1) - 1) {
      throw Error(ErrorCode::kTooManyEdges,
                  "C_" + Str(n) + " with a chord needs n <= " +
                      Str(Choose2(k + 1) - 1) + " in K_" + Str(k) + "*");
    }
    const PetalSpec petal{{1, j, n - j}};
    const Embedding inner = embed_petal_odd(k, j, n - j);
    std::vector<int> to(n);
    to[0] = PetalVertex(petal, 2, 0);
    for (int t = 1; t < j; ++t) to[t] = PetalVertex(petal, 2, t);
    to[j] = PetalVertex(petal, 2, 0);
    for (int t = 1; t < n - j; ++t) to[j + t] = PetalVertex(petal, 3, t);
    return Finish(Compose(source, to, inner));
  }

  if (n > Choose2(k + 1) - 3) {
    throw Error(ErrorCode::kTooManyEdges,
                "C_" + Str(n) + " with chord w0w2 needs n <= " +
                    Str(Choose2(k + 1) - 3) + " in K_" + Str(k) + "*");
  }
  int kw = k;
  while (kw >= 7 && n <= Choose2(kw - 1) - 3) kw -= 2;
  const int h = Choose2(kw + 1) - 3 - n;

  EdgeSet hset;
  if (h <= kw) {
    hset = Union(Walk({0, 3, 2}), Loops(0, h));
  } else if (kw == 5) {
    Require(h <= 8, "chorded gap out of range");
    hset = Union(Walk({0, 4, 1, 3, 4, 4, 2}), Loops(0, h - 4));
  } else {
    Require(h <= 2 * kw - 2, "chorded gap out of range");
    std::vector<int> cycle = {kw - 1, 1};
    for (int v = 3; v <= kw - 1; ++v) cycle.push_back(v);
    hset = Union(Union(Walk({0, 3, 2}), detail::WalkSet(cycle)),
                 Loops(0, h - kw + 2));
  }
  Require(static_cast<int>(hset.size()) == h + 2, "|H| != h + 2");
  const EdgeSet triangle = Walk({0, 1, 2, 0});
  Require(Intersection(hset, triangle).empty(), "H meets the triangle");
  const EdgeSet rest =
      Difference(Difference(build_k_star(kw).edges(), triangle), hset);
  const std::vector<int> trail = euler_trail(Subgraph(kw, rest), 2, 0);
  Require(static_cast<int>(trail.size()) == n - 1, "chorded trail length");

  Embedding e{source, build_k_star(k), std::vector<int>(n)};
  e.map[0] = 0;
  e.map[1] = 1;
  for (int t = 2; t < n; ++t) e.map[t] = trail[t - 2];
  return Finish(std::move(e));
}

Embedding embed_spider3_odd(int k, std::array<int, 3> legs) {
  RequireOddK(k);
  std::sort(legs.begin(), legs.end());
  const auto [l1, l2, l3] = legs;
  if (l1 < 1) throw Error(ErrorCode::kInvalidParameter, "legs must be >= 1");
  const int n = l1 + l2 + l3;
  if (n < 7) {
    throw Error(ErrorCode::kUnsupportedInput,
                "three-leg spiders with fewer than 7 edges are outside the "
                "construction");
  }
  if (n > Choose2(k + 1)) {
    throw Error(ErrorCode::kTooManyEdges,
                "spider has " + Str(n) + " edges, K_" + Str(k) + "* has " +
                    Str(Choose2(k + 1)));
  }
  const SpiderSpec spider{{l1, l2, l3}};
  const LoopedGraph source = realize(spider).graph;
  std::vector<int> to(source.vertex_count());
  auto at = [&](int leg, int t) -> int& {
    return to[SpiderVertex(spider, leg, t)];
  };

  if (l1 == 1) {
    const PetalSpec petal{{1, 3, n - 4}};
    const Embedding inner = embed_petal_odd(k, 3, n - 4);
    auto u = [&](int p, int t) { return PetalVertex(petal, p, t); };
    at(1, 0) = u(2, 0);
    at(1, 1) = u(2, 0);
    for (int t = 1; t <= l2; ++t) at(2, t) = u(3, t);
    at(3, 1) = u(2, 1);
    at(3, 2) = u(2, 2);
    at(3, 3) = u(2, 0);
    for (int s = 1; s <= l3 - 3; ++s) at(3, 3 + s) = u(3, n - 4 - s);
    return Finish(Compose(source, to, inner));
  }

  const bool two_first = l1 + l2 - 1 <= l3;
  const int pi = two_first ? 2 : 3;
  const int pj = two_first ? 3 : 2;
  const int ci = l1 + l2 - 1;
  const int cj = l3;
  const PetalSpec petal{{1, std::min(ci, cj), std::max(ci, cj)}};
  const Embedding inner =
      embed_petal_odd(k, std::min(ci, cj), std::max(ci, cj));
  auto u = [&](int p, int t) { return PetalVertex(petal, p, t); };
  at(1, 0) = u(2, 0);
  at(1, 1) = u(2, 0);
  for (int t = 2; t <= l1; ++t) at(1, t) = u(pi, t - 1);
  for (int t = 1; t <= l2; ++t) at(2, t) = u(pi, ci - t);
  for (int t = 1; t <= l3; ++t) at(3, t) = u(pj, t);
  return Finish(Compose(source, to, inner));
}

Embedding embed_spider4_odd(int k, std::array<int, 4> legs) {
  RequireOddK(k);
  std::sort(legs.begin(), legs.end());
  const auto [l1, l2, l3, l4] = legs;
  if (l1 < 1) throw Error(ErrorCode::kInvalidParameter, "legs must be >= 1");
  const int n = l1 + l2 + l3 + l4;
  if (n < 7) {
    throw Error(ErrorCode::kUnsupportedInput,
                "four-leg spiders with fewer than 7 edges are outside the "
                "construction");
  }
  const int bound = l3 == 1 ? Choose2(k + 1) - 1 : Choose2(k + 1);
  if (n > bound) {
    throw Error(ErrorCode::kTooManyEdges,
                "spider with " + Str(n) + " edges needs n <= " + Str(bound) +
                    " in K_" + Str(k) + "*");
  }
  const SpiderSpec spider{{l1, l2, l3, l4}};
  const LoopedGraph source = realize(spider).graph;

  if (l3 == 1) {
    Embedding e{source, build_k_star(k),
                std::vector<int>(source.vertex_count())};
    e.map[SpiderVertex(spider, 1, 1)] = 0;
    e.map[SpiderVertex(spider, 2, 1)] = 1;
    e.map[SpiderVertex(spider, 3, 1)] = 2;
    const EdgeSet used = MakeEdgeSet({Edge(0, 0), Edge(0, 1), Edge(0, 2),
                                      Edge(1, 2)});
    const std::vector<int> circuit =
        euler_trail(Subgraph(k, Difference(build_k_star(k).edges(), used)), 0,
                    0);
    Require(static_cast<int>(circuit.size()) > l4, "leg 4 longer than circuit");
    for (int t = 1; t <= l4; ++t) e.map[SpiderVertex(spider, 4, t)] = circuit[t];
    return Finish(std::move(e));
  }

  const bool two_first = l1 + l3 <= l2 + l4 - 1;
  const int pi = two_first ? 2 : 3;
  const int pj = two_first ? 3 : 2;
  const int ci = l1 + l3;
  const int cj = l2 + l4 - 1;
  const PetalSpec petal{{1, std::min(ci, cj), std::max(ci, cj)}};
  const Embedding inner =
      embed_petal_odd(k, std::min(ci, cj), std::max(ci, cj));
  auto u = [&](int p, int t) { return PetalVertex(petal, p, t); };
  std::vector<int> to(source.vertex_count());
  auto at = [&](int leg, int t) -> int& {
    return to[SpiderVertex(spider, leg, t)];
  };
  at(1, 0) = u(2, 0);
  for (int t = 1; t <= l1; ++t) at(1, t) = u(pi, t);
  at(2, 1) = u(2, 0);
  for (int t = 2; t <= l2; ++t) at(2, t) = u(pj, t - 1);
  for (int t = 1; t <= l3; ++t) at(3, t) = u(pi, ci - t);
  for (int t = 1; t <= l4; ++t) at(4, t) = u(pj, cj - t);
  return Finish(Compose(source, to, inner));
}

Embedding embed_caterpillar_odd(int k, const CaterpillarSpec& spec) {
  RequireOddK(k);
  Validate(spec);
  const int ell = spec.length;
  const int m = static_cast<int>(spec.attach.size());
  for (int t = 1; t < m; ++t) {
    if (spec.attach[t] == spec.attach[t - 1]) {
      throw Error(ErrorCode::kUnsupportedInput,
                  "two pendant edges at one vertex: the construction needs "
                  "distinct attachment vertices");
    }
  }
  if (m > k) {
    throw Error(ErrorCode::kUnsupportedInput,
                "more pendant edges (" + Str(m) + ") than k = " + Str(k));
  }
  if (ell + m > Choose2(k + 1)) {
    throw Error(ErrorCode::kTooManyEdges,
                "caterpillar has " + Str(ell + m) + " edges, K_" + Str(k) +
                    "* has " + Str(Choose2(k + 1)));
  }
  const LoopedGraph source = realize(spec).graph;

  if (k <= 5) {
    const SearchResult r = find_embedding(source, k);
    if (r.status == SearchStatus::kProvenNone) {
      throw Error(ErrorCode::kProvenImpossible,
                  ToString(FamilySpec{spec}) + " has no embedding in K_" +
                      Str(k) + "*");
    }
    Require(r.status == SearchStatus::kFound, "caterpillar search budget");
    return Finish(*r.embedding);
  }

  // Extend the central path so that the edges fill K_k* exactly.
  const int full = Choose2(k + 1) - m;
  std::vector<int> js;
  for (int j = 1; j < full && static_cast<int>(js.size()) < k - m;
       j += 2) {
    const bool clash =
        std::binary_search(spec.attach.begin(), spec.attach.end(), j) ||
        std::binary_search(spec.attach.begin(), spec.attach.end(), j + 1);
    if (!clash) js.push_back(j);
  }
  Require(static_cast<int>(js.size()) == k - m, "not enough free odd slots");

  // pos[alpha]: position of y_alpha on the closed walk z_0..z_N.
  std::vector<int> pos(full + 1);
  for (int alpha = 0, beta = 0; alpha <= full; ++alpha) {
    while (beta < static_cast<int>(js.size()) && js[beta] < alpha) ++beta;
    pos[alpha] = alpha - beta;
  }
  const int cycle_len = Choose2(k);
  Require(pos[full] == cycle_len, "extended path does not close the circuit");

  std::vector<int> black;
  for (int a : spec.attach) black.push_back(pos[a]);
  for (int j : js) black.push_back(pos[j]);
  std::sort(black.begin(), black.end());
  Require(std::adjacent_find(black.begin(), black.end()) == black.end(),
          "black positions collide");

  const std::vector<int> z = black_cycle_embedding(k, black);
  Embedding e{source, build_k_star(k), std::vector<int>(source.vertex_count())};
  for (int alpha = 0; alpha <= ell; ++alpha) e.map[alpha] = z[pos[alpha]];
  for (int g = 0; g < m; ++g) e.map[ell + 1 + g] = z[pos[spec.attach[g]]];
  return Finish(std::move(e));
}

}  // namespace edcn
