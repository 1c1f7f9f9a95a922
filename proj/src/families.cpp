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


#include "edcn/families.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "edcn/error.hpp"

namespace edcn {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void Invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidParameter, what);
}

std::string Join(const std::vector<int>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

int ParseInt(std::string_view text) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kParse, "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<int> ParseList(std::string_view text, char sep) {
  std::vector<int> out;
  if (text.empty()) return out;
  for (std::string_view part : Split(text, sep)) out.push_back(ParseInt(part));
  return out;
}

// key=value pairs separated by commas.
std::map<std::string, std::string, std::less<>> ParseKeyValues(
    std::string_view text) {
  std::map<std::string, std::string, std::less<>> out;
  for (std::string_view part : Split(text, ',')) {
    const std::size_t eq = part.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kParse, "expected key=value, got '" +
                                         std::string(part) + "'");
    }
    out.emplace(std::string(part.substr(0, eq)),
                std::string(part.substr(eq + 1)));
  }
  return out;
}

const std::string& Require(
    const std::map<std::string, std::string, std::less<>>& kv,
    std::string_view key) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    throw Error(ErrorCode::kParse, "missing key '" + std::string(key) + "'");
  }
  return it->second;
}

}  // namespace

void Validate(const FamilySpec& spec) {
  std::visit(
      Overloaded{
          [](const PathSpec& p) {
            if (p.n < 1) Invalid("path needs n >= 1");
          },
          [](const CycleSpec& c) {
            if (c.n < 3) Invalid("cycle needs n >= 3");
          },
          [](const CaterpillarSpec& c) {
            if (c.length < 1) Invalid("caterpillar needs l >= 1");
            for (std::size_t t = 0; t < c.attach.size(); ++t) {
              if (c.attach[t] <= 0 || c.attach[t] >= c.length) {
                Invalid("caterpillar needs 0 < i_t < l");
              }
              if (t > 0 && c.attach[t - 1] > c.attach[t]) {
                Invalid("caterpillar needs i_1 <= ... <= i_m");
              }
            }
          },
          [](const PetalSpec& p) {
            if (p.petals.size() < 2) Invalid("petal graph needs m >= 2");
            if (!std::is_sorted(p.petals.begin(), p.petals.end())) {
              Invalid("petal graph needs c_1 <= ... <= c_m");
            }
            for (int c : p.petals) {
              if (c < 1) Invalid("petal lengths must be positive");
              if (c == 2) Invalid("a petal of length 2 is a double edge");
            }
            if (p.petals.size() > 1 && p.petals[1] == 1) {
              Invalid("at most one loop petal");
            }
          },
          [](const ChordedCycleSpec& c) {
            if (c.n < 4) Invalid("chorded cycle needs n >= 4");
            if (c.j < 2 || 2 * c.j > c.n) {
              Invalid("chorded cycle needs 2 <= j <= n/2");
            }
          },
          [](const SpiderSpec& s) {
            if (s.legs.size() < 3) Invalid("spider needs at least 3 legs");
            if (!std::is_sorted(s.legs.begin(), s.legs.end())) {
              Invalid("spider legs must be sorted ascending");
            }
            if (s.legs.front() < 1) Invalid("spider legs must be positive");
          },
      },
      spec);
}

int VertexAtlas::Add(std::string name) {
  const int id = size();
  auto [it, inserted] = index_.emplace(name, id);
  if (!inserted) {
    throw Error(ErrorCode::kInternal, "duplicate vertex name " + name);
  }
  names_.push_back(std::move(name));
  return id;
}

int VertexAtlas::index(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) {
    throw Error(ErrorCode::kInvalidParameter,
                "unknown vertex name " + std::string(name));
  }
  return it->second;
}

RealizedFamily realize(const FamilySpec& spec) {
  Validate(spec);
  RealizedFamily out;
  VertexAtlas& atlas = out.atlas;
  std::vector<Edge> edges;

  std::visit(
      Overloaded{
          [&](const PathSpec& p) {
            for (int i = 0; i < p.n; ++i) atlas.Add("p" + std::to_string(i));
            for (int i = 1; i < p.n; ++i) edges.emplace_back(i - 1, i);
          },
          [&](const CycleSpec& c) {
            for (int i = 0; i < c.n; ++i) atlas.Add("c" + std::to_string(i));
            for (int i = 0; i < c.n; ++i) edges.emplace_back(i, (i + 1) % c.n);
          },
          [&](const CaterpillarSpec& c) {
            const int total = c.length + static_cast<int>(c.attach.size());
            for (int a = 0; a <= total; ++a) atlas.Add("y" + std::to_string(a));
            for (int a = 1; a <= c.length; ++a) edges.emplace_back(a - 1, a);
            for (std::size_t t = 0; t < c.attach.size(); ++t) {
              edges.emplace_back(c.length + 1 + static_cast<int>(t),
                                 c.attach[t]);
            }
          },
          [&](const PetalSpec& p) {
            atlas.Add("u0");
            for (std::size_t i = 0; i < p.petals.size(); ++i) {
              for (int t = 1; t < p.petals[i]; ++t) {
                atlas.Add("u^" + std::to_string(i + 1) + "_" +
                          std::to_string(t));
              }
            }
            for (std::size_t i = 0; i < p.petals.size(); ++i) {
              const int petal = static_cast<int>(i) + 1;
              for (int t = 0; t < p.petals[i]; ++t) {
                edges.emplace_back(PetalVertex(p, petal, t),
                                   PetalVertex(p, petal, t + 1));
              }
            }
          },
          [&](const ChordedCycleSpec& c) {
            for (int i = 0; i < c.n; ++i) atlas.Add("w" + std::to_string(i));
            for (int i = 0; i < c.n; ++i) edges.emplace_back(i, (i + 1) % c.n);
            edges.emplace_back(0, c.j);
          },
          [&](const SpiderSpec& s) {
            atlas.Add("x0");
            for (std::size_t i = 0; i < s.legs.size(); ++i) {
              for (int t = 1; t <= s.legs[i]; ++t) {
                atlas.Add("x^" + std::to_string(i + 1) + "_" +
                          std::to_string(t));
              }
            }
            for (std::size_t i = 0; i < s.legs.size(); ++i) {
              const int leg = static_cast<int>(i) + 1;
              for (int t = 1; t <= s.legs[i]; ++t) {
                edges.emplace_back(SpiderVertex(s, leg, t - 1),
                                   SpiderVertex(s, leg, t));
              }
            }
          },
      },
      spec);

  out.graph = LoopedGraph(atlas.size(), edges);
  for (int v = 0; v < atlas.size(); ++v) out.graph.SetLabel(v, atlas.name(v));
  return out;
}

int edge_count(const FamilySpec& spec) {
  Validate(spec);
  return std::visit(
      Overloaded{
          [](const PathSpec& p) { return p.n - 1; },
          [](const CycleSpec& c) { return c.n; },
          [](const CaterpillarSpec& c) {
            return c.length + static_cast<int>(c.attach.size());
          },
          [](const PetalSpec& p) {
            return std::accumulate(p.petals.begin(), p.petals.end(), 0);
          },
          [](const ChordedCycleSpec& c) { return c.n + 1; },
          [](const SpiderSpec& s) {
            return std::accumulate(s.legs.begin(), s.legs.end(), 0);
          },
      },
      spec);
}

MaxDegreeInfo max_degree_and_interior(const FamilySpec& spec) {
  const LoopedGraph g = realize(spec).graph;
  const std::vector<int> deg = degrees(g);
  MaxDegreeInfo info;
  info.max_degree = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] != info.max_degree) continue;
    const auto& nbrs = g.neighbors(v);
    if (std::all_of(nbrs.begin(), nbrs.end(),
                    [&](int w) { return deg[w] > 1; })) {
      info.interior = true;
    }
  }
  return info;
}

int PetalVertex(const PetalSpec& spec, int petal, int t) {
  const int c = spec.petals.at(petal - 1);
  if (t == 0 || t == c) return 0;
  if (t < 0 || t > c) {
    throw Error(ErrorCode::kInternal, "petal position out of range");
  }
  int offset = 1;
  for (int i = 0; i < petal - 1; ++i) offset += spec.petals[i] - 1;
  return offset + t - 1;
}

int SpiderVertex(const SpiderSpec& spec, int leg, int t) {
  if (t == 0) return 0;
  if (t < 0 || t > spec.legs.at(leg - 1)) {
    throw Error(ErrorCode::kInternal, "leg position out of range");
  }
  int offset = 1;
  for (int i = 0; i < leg - 1; ++i) offset += spec.legs[i];
  return offset + t - 1;
}

FamilySpec ParseFamilySpec(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::kParse,
                "expected <family>:<params>, got '" + std::string(text) + "'");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view params = text.substr(colon + 1);
  FamilySpec spec;
  if (kind == "path") {
    spec = PathSpec{ParseInt(params)};
  } else if (kind == "cycle") {
    spec = CycleSpec{ParseInt(params)};
  } else if (kind == "petal") {
    std::vector<int> petals = ParseList(params, ',');
    std::sort(petals.begin(), petals.end());
    spec = PetalSpec{std::move(petals)};
  } else if (kind == "spider") {
    std::vector<int> legs = ParseList(params, ',');
    std::sort(legs.begin(), legs.end());
    spec = SpiderSpec{std::move(legs)};
  } else if (kind == "chorded") {
    const auto kv = ParseKeyValues(params);
    spec = ChordedCycleSpec{ParseInt(Require(kv, "n")),
                            ParseInt(Require(kv, "j"))};
  } else if (kind == "caterpillar") {
    const auto kv = ParseKeyValues(params);
    CaterpillarSpec c;
    c.length = ParseInt(Require(kv, "l"));
    if (auto it = kv.find("attach"); it != kv.end()) {
      c.attach = ParseList(it->second, ';');
    }
    spec = std::move(c);
  } else {
    throw Error(ErrorCode::kParse, "unknown family '" + std::string(kind) + "'");
  }
  Validate(spec);
  return spec;
}

std::string ToString(const FamilySpec& spec) {
  return std::visit(
      Overloaded{
          [](const PathSpec& p) { return "path:" + std::to_string(p.n); },
          [](const CycleSpec& c) { return "cycle:" + std::to_string(c.n); },
          [](const CaterpillarSpec& c) {
            std::string out = "caterpillar:l=" + std::to_string(c.length);
            if (!c.attach.empty()) out += ",attach=" + Join(c.attach, ';');
            return out;
          },
          [](const PetalSpec& p) { return "petal:" + Join(p.petals, ','); },
          [](const ChordedCycleSpec& c) {
            return "chorded:n=" + std::to_string(c.n) +
                   ",j=" + std::to_string(c.j);
          },
          [](const SpiderSpec& s) { return "spider:" + Join(s.legs, ','); },
      },
      spec);
}

}  // namespace edcn
