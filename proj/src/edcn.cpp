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


#include "edcn/edcn.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "construct_util.hpp"
#include "edcn/embed_even.hpp"
#include "edcn/embed_odd.hpp"
#include "edcn/error.hpp"
#include "edcn/euler.hpp"

namespace edcn {
namespace {

using detail::Str;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::uint64_t FloorSqrt(std::uint64_t x) {
  if (x < 2) return x;
  // Newton iteration from above converges to floor(sqrt(x)).
  std::uint64_t r = x;
  std::uint64_t next = (r + x / r) / 2;
  while (next < r) {
    r = next;
    next = (r + x / r) / 2;
  }
  return r;
}

// Shared shape of the petal, chorded and four-leg spider formulas.
FormulaValue Ceiling(std::int64_t tri_arg, std::int64_t sqrt_arg,
                     const std::string& family) {
  const std::int64_t t = tri_ceil(tri_arg);
  if (t % 2 == 1) return {static_cast<int>(t), family + ", odd branch"};
  return {static_cast<int>(ceil_sqrt(sqrt_arg)), family + ", even branch"};
}

FormulaValue PathFormula(int n) {
  if (n <= 2) return {1, "path, n<=2"};
  std::int64_t r1 = 0;
  while (2 * r1 * r1 < n - 2) ++r1;
  std::int64_t r2 = 1;
  while ((4 * r2 - 1) * (4 * r2 - 1) < 8LL * n - 7) ++r2;
  return {static_cast<int>(std::min(2 * r1, 2 * r2 - 1)), "path"};
}

FormulaValue CycleFormula(int n) {
  std::int64_t r1 = 0;
  while (2 * r1 * r1 < n) ++r1;
  std::int64_t r2 = 1;
  while ((4 * r2 - 1) * (4 * r2 - 1) < 8LL * n + 1) ++r2;
  return {static_cast<int>(std::min(2 * r1, 2 * r2 - 1)), "cycle"};
}

FormulaValue SpiderFormula(const std::vector<int>& legs) {
  const int delta = static_cast<int>(legs.size());
  int e = 0;
  for (int l : legs) e += l;
  if (delta == 3) {
    if (e <= 6 && legs[0] == 1) return {3, "spider3, L<=6, l1=1"};
    if (e == 6 && legs[0] == 2) return {4, "spider3, L=6, l1=2"};
    const std::int64_t t = tri_ceil(8LL * e + 1);
    if (e >= 7 && t % 2 == 1) {
      return {static_cast<int>(t), "spider3, odd branch"};
    }
    return {static_cast<int>(ceil_sqrt(2LL * e - 4)), "spider3, even branch"};
  }
  if (delta == 4) {
    if (legs[2] == 1) {
      if (e <= 10) return {4, "spider4 l3=1, e<=10"};
      return Ceiling(8LL * e + 9, 2LL * e - 4, "spider4 l3=1");
    }
    if (e <= 10 && legs[0] == 1) return {4, "spider4 l3>=2, e<=10, l1=1"};
    if (e <= 10 && legs[0] == 2) return {5, "spider4 l3>=2, e<=10, l1=2"};
    return Ceiling(8LL * e + 1, 2LL * e - 4, "spider4 l3>=2");
  }
  const bool short_legs =
      std::all_of(legs.begin(), legs.end(), [&](int l) {
        return l >= 2 && 2 * l <= delta + 3;
      });
  if (short_legs) return {delta + 1, "spider, legs in [2,(D+3)/2]"};
  throw Error(ErrorCode::kNoFormula,
              "spiders with " + Str(delta) +
                  " legs need every leg in [2, (D+3)/2]");
}

FormulaValue PetalFormula(const std::vector<int>& petals) {
  if (petals.size() != 3 || petals[0] != 1 || petals[1] < 3) {
    throw Error(ErrorCode::kNoFormula,
                "petal formula covers P_{1,c2,c3} with c2 >= 3 only");
  }
  const int e = 1 + petals[1] + petals[2];
  if (e <= 10) return {5, "petal, e<=10"};
  return Ceiling(8LL * e + 1, 2LL * e, "petal");
}

FormulaValue ChordedFormula(int n, int j) {
  const int e = n + 1;
  if (j == 2) {
    if (e <= 8) return {4, "chorded j=2, e<=8"};
    if (e == 9) return {5, "chorded j=2, e=9"};
    return Ceiling(8LL * e + 17, 2LL * e - 2, "chorded j=2");
  }
  if (e <= 6) return {4, "chorded j>=3, e<=6"};
  return Ceiling(8LL * e + 1, 2LL * e - 2, "chorded j>=3");
}

bool Refutes(const Error& e) {
  return e.code() == ErrorCode::kTooManyEdges ||
         e.code() == ErrorCode::kProvenImpossible;
}

std::vector<int> Identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Three-leg spider inside S(1, l1, l2, l3) by shifting legs up by one.
Embedding SpiderThroughFour(int k, const SpiderSpec& s) {
  const std::array<int, 4> legs = {1, s.legs[0], s.legs[1], s.legs[2]};
  const SpiderSpec four{{legs.begin(), legs.end()}};
  const Embedding big = k % 2 == 1 ? embed_spider4_odd(k, legs)
                                   : embed_spider4_even(k, legs);
  const LoopedGraph source = realize(s).graph;
  std::vector<int> to(source.vertex_count(), 0);
  for (int leg = 1; leg <= 3; ++leg) {
    for (int t = 1; t <= s.legs[leg - 1]; ++t) {
      to[SpiderVertex(s, leg, t)] = SpiderVertex(four, leg + 1, t);
    }
  }
  return Compose(source, to, big);
}

// P_n as a prefix of an Eulerian trail: K_k* for odd k, and
// (K_k* - I) + v_0 v_{k/2} for even k.
Embedding PathByTrail(int k, int n) {
  const int half = k / 2;
  const int room = k % 2 == 1 ? Choose2(k + 1) : k * k / 2 + 1;
  if (n - 1 > room) {
    throw Error(ErrorCode::kTooManyEdges,
                "P_" + Str(n) + " needs n - 1 <= " + Str(room) + " for k = " +
                    Str(k));
  }
  std::vector<int> trail;
  if (k % 2 == 1) {
    trail = euler_trail(build_k_star(k), 0, 0);
  } else {
    const EdgeSet edges = Union(
        Difference(build_k_star(k).edges(), perfect_matching(k)),
        {Edge(0, half)});
    trail = euler_trail(Subgraph(k, edges), 0, half);
  }
  const LoopedGraph source = realize(PathSpec{n}).graph;
  return Embedding{source, build_k_star(k),
                   std::vector<int>(trail.begin(), trail.begin() + n)};
}

// C_n as an Eulerian circuit of K_k* (odd k) or K_k* - I (even k) with an
// even subgraph of the right size removed.
Embedding CycleByCircuit(int k, int n) {
  const int room = k % 2 == 1 ? Choose2(k + 1) : k * k / 2;
  if (n > room || k < 3) {
    throw Error(ErrorCode::kTooManyEdges,
                "C_" + Str(n) + " needs n <= " + Str(room) + " for k = " +
                    Str(k));
  }
  int kw = k;
  if (kw % 2 == 0 && n <= Choose2(kw)) --kw;
  while (kw >= 5 && n <= Choose2(kw - 1)) kw -= 2;
  EdgeSet edges = build_k_star(kw).edges();
  if (kw % 2 == 0) {
    edges = Difference(edges, perfect_matching(kw));
    edges = Difference(edges, detail::Loops(0, kw * kw / 2 - n));
  } else {
    const int h = Choose2(kw + 1) - n;
    const int cycle = h <= kw ? 0 : std::max(3, h - kw);
    std::vector<int> walk;
    for (int v = 0; v < cycle; ++v) walk.push_back(v);
    if (cycle > 0) walk.push_back(0);
    edges = Difference(edges, detail::WalkSet(walk));
    edges = Difference(edges, detail::Loops(0, h - cycle));
  }
  const std::vector<int> circuit = euler_trail(Subgraph(kw, edges), 0, 0);
  detail::Require(static_cast<int>(circuit.size()) == n + 1,
                  "cycle circuit length");
  const LoopedGraph source = realize(CycleSpec{n}).graph;
  return Embedding{source, build_k_star(k),
                   std::vector<int>(circuit.begin(), circuit.end() - 1)};
}

// Constructive embedding at k. Throws kTooManyEdges / kProvenImpossible
// when a constructor's characterization rules k out; nullopt when no
// constructor covers (spec, k).
std::optional<Construction> ConstructAt(const FamilySpec& spec, int k) {
  const bool odd = k % 2 == 1;
  const std::string parity = odd ? "odd" : "even";
  return std::visit(
      Overloaded{
          [&](const PetalSpec& p) -> std::optional<Construction> {
            if (p.petals.size() != 3 || p.petals[0] != 1 || p.petals[1] < 3) {
              return std::nullopt;
            }
            const int c2 = p.petals[1], c3 = p.petals[2];
            return Construction{odd ? embed_petal_odd(k, c2, c3)
                                   : embed_petal_even(k, c2, c3),
                               parity + " petal construction"};
          },
          [&](const ChordedCycleSpec& c) -> std::optional<Construction> {
            return Construction{odd ? embed_chorded_odd(k, c.n, c.j)
                                   : embed_chorded_even(k, c.n, c.j),
                               parity + " chorded construction"};
          },
          [&](const SpiderSpec& s) -> std::optional<Construction> {
            int e = 0;
            for (int l : s.legs) e += l;
            if (s.legs.size() == 4) {
              const std::array<int, 4> legs = {s.legs[0], s.legs[1], s.legs[2],
                                               s.legs[3]};
              if (!odd) {
                return Construction{embed_spider4_even(k, legs),
                                   "even four-leg spider construction"};
              }
              if (e >= 7) {
                return Construction{embed_spider4_odd(k, legs),
                                   "odd four-leg spider construction"};
              }
              return std::nullopt;
            }
            if (s.legs.size() != 3) return std::nullopt;
            if (odd && e >= 7) {
              return Construction{
                  embed_spider3_odd(k, {s.legs[0], s.legs[1], s.legs[2]}),
                  "odd three-leg spider construction"};
            }
            if (!odd && k >= 6) {
              return Construction{
                  embed_spider3_even(k, {s.legs[0], s.legs[1], s.legs[2]}),
                  "even three-leg spider construction"};
            }
            if (odd && e + 1 < 7) return std::nullopt;
            try {
              return Construction{SpiderThroughFour(k, s),
                                 "restriction of a four-leg spider"};
            } catch (const Error& err) {
              if (Refutes(err)) return std::nullopt;
              throw;
            }
          },
          [&](const CaterpillarSpec& c) -> std::optional<Construction> {
            if (!odd) return std::nullopt;
            try {
              return Construction{embed_caterpillar_odd(k, c),
                                 "odd caterpillar construction"};
            } catch (const Error& err) {
              if (err.code() == ErrorCode::kUnsupportedInput) {
                return std::nullopt;
              }
              throw;
            }
          },
          [&](const PathSpec& p) -> std::optional<Construction> {
            if (p.n < 2) return std::nullopt;
            return Construction{PathByTrail(k, p.n), "Eulerian trail prefix"};
          },
          [&](const CycleSpec& c) -> std::optional<Construction> {
            return Construction{CycleByCircuit(k, c.n), "Eulerian circuit"};
          },
      },
      spec);
}

// Smallest k that the edge count and, for simple graphs, the degree bound
// do not rule out.
int TrivialFloor(const LoopedGraph& g) {
  int k = 1;
  while (static_cast<std::size_t>(k) * (k + 1) / 2 < g.edge_count()) ++k;
  if (!g.has_loops()) k = std::max(k, lower_bound(g));
  return k;
}

std::string Family(const FamilySpec& spec) {
  const std::string text = ToString(spec);
  return text.substr(0, text.find(':'));
}

}  // namespace

std::optional<Construction> construct_at(const FamilySpec& spec, int k) {
  Validate(spec);
  if (k < 1) throw Error(ErrorCode::kInvalidParameter, "k must be positive");
  return ConstructAt(spec, k);
}

std::int64_t ceil_sqrt(std::int64_t x) {
  if (x <= 0) return 0;
  const std::uint64_t r = FloorSqrt(static_cast<std::uint64_t>(x));
  return static_cast<std::int64_t>(r * r < static_cast<std::uint64_t>(x) ? r + 1
                                                                           : r);
}

std::int64_t tri_ceil(std::int64_t d) {
  if (d <= 1) return 0;
  return ceil_sqrt(d) / 2;
}

FormulaValue edcn_formula(const FamilySpec& spec) {
  Validate(spec);
  return std::visit(
      Overloaded{
          [](const PathSpec& p) { return PathFormula(p.n); },
          [](const CycleSpec& c) { return CycleFormula(c.n); },
          [](const SpiderSpec& s) { return SpiderFormula(s.legs); },
          [](const PetalSpec& p) { return PetalFormula(p.petals); },
          [](const ChordedCycleSpec& c) { return ChordedFormula(c.n, c.j); },
          [](const CaterpillarSpec&) -> FormulaValue {
            throw Error(ErrorCode::kNoFormula,
                        "no closed form for caterpillars");
          },
      },
      spec);
}

int lower_bound(const LoopedGraph& g) {
  if (g.has_loops()) {
    throw Error(ErrorCode::kUnsupportedInput,
                "the degree bound is stated for graphs without loops");
  }
  int delta = 0;
  for (int v = 0; v < g.vertex_count(); ++v) delta = std::max(delta, g.degree(v));
  if (delta == 0) return 1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != delta) continue;
    const auto& nb = g.neighbors(v);
    if (std::all_of(nb.begin(), nb.end(),
                    [&](int w) { return g.degree(w) > 1; })) {
      return delta + 1;
    }
  }
  return delta;
}

EdcnResult edcn_with_certificate(const FamilySpec& spec,
                                 const CertificateOptions& options) {
  Validate(spec);
  const LoopedGraph g = realize(spec).graph;
  const SearchOptions search{options.oracle_budget, true};

  std::optional<FormulaValue> formula;
  try {
    formula = edcn_formula(spec);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoFormula) throw;
  }

  // Certificate at k, or nullopt when k is ruled out.
  auto certify = [&](int k, bool must_exist) -> std::optional<Construction> {
    try {
      if (auto built = ConstructAt(spec, k)) return built;
    } catch (const Error& e) {
      if (!Refutes(e)) throw;
      if (must_exist) {
        throw Error(ErrorCode::kInternal,
                    "constructor rejects k = " + Str(k) + " for " +
                        ToString(spec) + ": " + e.what());
      }
      return std::nullopt;
    }
    const SearchResult r = find_embedding(g, k, search);
    if (r.status == SearchStatus::kFound) {
      return Construction{*r.embedding, "oracle search"};
    }
    if (r.status == SearchStatus::kProvenNone) {
      if (must_exist) {
        throw Error(ErrorCode::kInternal,
                    "oracle refutes the formula value for " + ToString(spec));
      }
      return std::nullopt;
    }
    throw Error(ErrorCode::kCapability,
                "no construction for " + Family(spec) + " at k = " + Str(k) +
                    " and the oracle budget ran out");
  };

  EdcnResult result;
  std::optional<Construction> found;
  if (formula) {
    result.lambda = formula->lambda;
    result.provenance = formula->branch;
    found = certify(formula->lambda, true);
    if (options.cross_check) {
      for (int k = TrivialFloor(g); k < formula->lambda; ++k) {
        if (certify(k, false)) {
          throw Error(ErrorCode::kInternal,
                      "cross-check embeds " + ToString(spec) + " at k = " +
                          Str(k) + " below the formula value");
        }
      }
    }
  } else {
    result.provenance = "oracle";
    for (int k = TrivialFloor(g);; ++k) {
      found = certify(k, false);
      if (found) {
        result.lambda = k;
        break;
      }
    }
  }

  result.embedding = LiftTo(std::move(found->embedding), result.lambda);
  result.method = found->method;
  RequireValidEmbedding(result.embedding);
  result.coloring = VertexColoring::FromEmbedding(result.embedding);
  if (!verify_coloring(g, result.coloring).ok) {
    throw Error(ErrorCode::kInternal, "certificate coloring fails");
  }
  return result;
}

std::optional<std::vector<int>> find_subgraph_map(const LoopedGraph& h,
                                                  const LoopedGraph& g,
                                                  std::uint64_t budget) {
  const int nh = h.vertex_count();
  const int ng = g.vertex_count();
  if (nh > ng || h.edge_count() > g.edge_count()) return std::nullopt;

  // Breadth-first order from the highest-degree vertex of each component.
  std::vector<int> order;
  std::vector<char> seen(nh, 0);
  std::vector<int> by_degree = Identity(nh);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return h.degree(a) > h.degree(b); });
  for (int root : by_degree) {
    if (seen[root]) continue;
    seen[root] = 1;
    const std::size_t head = order.size();
    order.push_back(root);
    for (std::size_t i = head; i < order.size(); ++i) {
      for (int w : h.neighbors(order[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
      }
    }
  }

  std::vector<int> map(nh, -1);
  std::vector<char> used(ng, 0);
  std::uint64_t nodes = 0;
  std::function<bool(int)> assign = [&](int depth) -> bool {
    if (depth == nh) return true;
    const int u = order[depth];
    for (int x = 0; x < ng; ++x) {
      if (used[x] || g.degree(x) < h.degree(u)) continue;
      if (h.HasLoop(u) && !g.HasLoop(x)) continue;
      bool ok = true;
      for (int w : h.neighbors(u)) {
        if (w != u && map[w] >= 0 && !g.HasEdge(map[w], x)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (++nodes > budget) {
        throw Error(ErrorCode::kCapability, "subgraph search budget exhausted");
      }
      map[u] = x;
      used[x] = 1;
      if (assign(depth + 1)) return true;
      map[u] = -1;
      used[x] = 0;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return map;
}

int edcn_value(const FamilySpec& spec, const SearchOptions& search) {
  try {
    return edcn_formula(spec).lambda;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoFormula) throw;
  }
  const LoopedGraph g = realize(spec).graph;
  const BruteforceResult r =
      edcn_bruteforce(g, std::max(1, g.vertex_count()), search);
  if (r.status != BruteforceResult::Status::kExact) {
    throw Error(ErrorCode::kCapability,
                "oracle budget exhausted for " + ToString(spec));
  }
  return r.lambda;
}

bool monotonicity_check(const FamilySpec& h, const FamilySpec& g,
                        const MonotonicityOptions& options) {
  const LoopedGraph hg = realize(h).graph;
  const LoopedGraph gg = realize(g).graph;
  if (!find_subgraph_map(hg, gg)) {
    throw Error(ErrorCode::kInvalidParameter,
                ToString(h) + " is not a subgraph of " + ToString(g));
  }
  auto lambda = [&](const FamilySpec& spec, const LoopedGraph& graph) {
    if (!options.oracle_only) return edcn_value(spec, options.search);
    const BruteforceResult r = edcn_bruteforce(
        graph, std::max(1, graph.vertex_count()), options.search);
    if (r.status != BruteforceResult::Status::kExact) {
      throw Error(ErrorCode::kCapability,
                  "oracle budget exhausted for " + ToString(spec));
    }
    return r.lambda;
  };
  return lambda(h, hg) <= lambda(g, gg);
}

}  // namespace edcn
