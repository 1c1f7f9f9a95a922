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


#include "edcn/euler.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "edcn/error.hpp"

namespace edcn {
namespace {

std::string VertexList(const std::vector<int>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ",";
    out += "v" + std::to_string(vs[i]);
  }
  return out;
}

void CheckEulerian(const LoopedGraph& g, int start, int end) {
  const int n = g.vertex_count();
  if (start < 0 || start >= n || end < 0 || end >= n) {
    throw Error(ErrorCode::kInvalidParameter, "trail endpoint out of range");
  }
  const std::vector<int> deg = degrees(g);
  std::vector<int> odd;
  for (int v = 0; v < n; ++v) {
    if (deg[v] % 2 != 0) odd.push_back(v);
  }
  if (start == end) {
    if (!odd.empty()) {
      throw Error(ErrorCode::kNotEulerian,
                  "closed trail needs all degrees even; odd at " +
                      VertexList(odd));
    }
  } else {
    std::vector<int> want = {std::min(start, end), std::max(start, end)};
    if (odd != want) {
      throw Error(ErrorCode::kNotEulerian,
                  "open trail v" + std::to_string(start) + "->v" +
                      std::to_string(end) + " needs exactly those odd; odd at " +
                      VertexList(odd));
    }
  }
  if (!connected_after_pruning(g)) {
    throw Error(ErrorCode::kNotEulerian, "edges are not connected");
  }
  if (g.edge_count() > 0 && deg[start] == 0) {
    throw Error(ErrorCode::kNotEulerian,
                "start v" + std::to_string(start) + " has no edges");
  }
}

}  // namespace

std::vector<int> euler_trail(const LoopedGraph& g, int start, int end) {
  CheckEulerian(g, start, end);
  if (g.edge_count() == 0) return {start};

  const int n = g.vertex_count();
  const EdgeSet& edges = g.edges();
  // Incidence lists ordered loop first, then by neighbour index.
  std::vector<std::vector<std::pair<int, int>>> incidence(n);
  for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
    const Edge& e = edges[id];
    incidence[e.u].emplace_back(e.v, id);
    if (!e.is_loop()) incidence[e.v].emplace_back(e.u, id);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(incidence[v].begin(), incidence[v].end(),
              [v](const auto& a, const auto& b) {
                const bool la = a.first == v;
                const bool lb = b.first == v;
                if (la != lb) return la;
                return a.first < b.first;
              });
  }

  std::vector<char> used(edges.size(), 0);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<int> stack = {start};
  std::vector<int> circuit;
  circuit.reserve(edges.size() + 1);
  while (!stack.empty()) {
    const int v = stack.back();
    auto& list = incidence[v];
    while (cursor[v] < list.size() && used[list[cursor[v]].second]) ++cursor[v];
    if (cursor[v] == list.size()) {
      circuit.push_back(v);
      stack.pop_back();
    } else {
      const auto [w, id] = list[cursor[v]];
      used[id] = 1;
      stack.push_back(w);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  if (circuit.size() != edges.size() + 1 || circuit.back() != end) {
    throw Error(ErrorCode::kInternal, "Hierholzer produced a short trail");
  }
  return circuit;
}

namespace {

// Depth-first edge walk over K_k with black-position injectivity pruning.
// The walk starts at v0; the caller rotates positions beforehand.
class BlackCycleSearch {
 public:
  BlackCycleSearch(int k, std::span<const int> positions, std::uint64_t budget)
      : k_(k),
        length_(k * (k - 1) / 2),
        budget_(budget),
        black_(length_, 0),
        black_taken_(k, 0),
        touched_(k, 0),
        remaining_(k, k - 1),
        used_(k * k, 0) {
    for (int p : positions) black_[p] = 1;
    black_after_.assign(length_ + 1, 0);
    for (int p = length_ - 2; p >= 0; --p) {
      black_after_[p] = black_after_[p + 1] + black_[p + 1];
    }
  }

  std::optional<std::vector<int>> Run() {
    walk_.assign(length_ + 1, -1);
    walk_[0] = 0;
    touched_[0] = 1;
    if (black_[0]) black_taken_[0] = 1;
    if (k_ == 1) return walk_;
    if (Extend(0)) return walk_;
    return std::nullopt;
  }

 private:
  bool Used(int a, int b) const { return used_[a * k_ + b] != 0; }
  void SetUsed(int a, int b, char value) {
    used_[a * k_ + b] = value;
    used_[b * k_ + a] = value;
  }

  // Appearances of v strictly between the current position and the return
  // to v0: each uses two edge ends, the current vertex and v0 one fewer.
  int FutureVisits(int v, int here) const {
    return (remaining_[v] - (v == here ? 1 : 0) - (v == 0 ? 1 : 0)) / 2;
  }

  // The unused edges form one connected piece containing `here`, and enough
  // unclaimed vertices will still be visited to fill the black positions.
  bool Feasible(int here, int pos) const {
    const int edges_left = length_ - pos;
    int candidates = 0;
    for (int v = 0; v < k_; ++v) {
      if (!black_taken_[v] && FutureVisits(v, here) > 0) ++candidates;
    }
    if (candidates < black_after_[pos]) return false;
    if (edges_left == 0) return true;
    std::array<int, 64> queue{};
    std::vector<char> seen(k_, 0);
    int head = 0;
    int tail = 0;
    queue[tail++] = here;
    seen[here] = 1;
    int degree_sum = 0;
    while (head < tail) {
      const int v = queue[head++];
      degree_sum += remaining_[v];
      for (int w = 0; w < k_; ++w) {
        if (w != v && !seen[w] && !Used(v, w)) {
          seen[w] = 1;
          queue[tail++] = w;
        }
      }
    }
    return degree_sum == 2 * edges_left;
  }

  // Candidate next vertices. On a black step only unclaimed vertices, the
  // ones with fewest future visits first; elsewhere claimed vertices first so
  // unclaimed ones keep their visits. Untouched vertices are interchangeable,
  // so only the lowest one is offered.
  std::vector<int> Moves(int here, bool black) const {
    std::vector<int> moves;
    bool offered_untouched = false;
    for (int w = 0; w < k_; ++w) {
      if (w == here || Used(here, w)) continue;
      if (black && black_taken_[w]) continue;
      if (!touched_[w]) {
        if (offered_untouched) continue;
        offered_untouched = true;
      }
      moves.push_back(w);
    }
    auto key = [&](int w) {
      return black ? FutureVisits(w, here) : (black_taken_[w] ? 0 : 1);
    };
    std::stable_sort(moves.begin(), moves.end(),
                     [&](int a, int b) { return key(a) < key(b); });
    return moves;
  }

  // walk_[0..pos] is fixed; choose walk_[pos + 1].
  bool Extend(int pos) {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::kInternal,
                  "black cycle search exceeded its node budget");
    }
    const int here = walk_[pos];
    const int next_pos = pos + 1;
    if (next_pos == length_) {
      if (Used(here, walk_[0]) || here == walk_[0]) return false;
      walk_[next_pos] = walk_[0];
      return true;
    }
    const bool black = black_[next_pos] != 0;
    for (int w : Moves(here, black)) {
      SetUsed(here, w, 1);
      --remaining_[here];
      --remaining_[w];
      const char was_touched = touched_[w];
      touched_[w] = 1;
      if (black) black_taken_[w] = 1;
      walk_[next_pos] = w;

      if (Feasible(w, next_pos) && Extend(next_pos)) return true;

      if (black) black_taken_[w] = 0;
      touched_[w] = was_touched;
      ++remaining_[here];
      ++remaining_[w];
      SetUsed(here, w, 0);
    }
    return false;
  }

  int k_;
  int length_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<char> black_;
  // Number of black positions strictly after p.
  std::vector<int> black_after_;
  std::vector<char> black_taken_;
  std::vector<char> touched_;
  std::vector<int> remaining_;
  std::vector<char> used_;
  std::vector<int> walk_;
};

}  // namespace

std::optional<std::vector<int>> SearchBlackCycle(
    int k, std::span<const int> black_positions, std::uint64_t budget) {
  if (k < 1 || k > 64) {
    throw Error(ErrorCode::kInvalidParameter, "black cycle search needs 1 <= k <= 64");
  }
  if (k % 2 == 0) {
    throw Error(ErrorCode::kInvalidParameter,
                "K_k has an Eulerian circuit only for odd k");
  }
  const int length = k * (k - 1) / 2;
  std::vector<int> sorted(black_positions.begin(), black_positions.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidParameter, "black positions must be distinct");
  }
  for (int p : sorted) {
    if (p < 0 || p >= std::max(length, 1)) {
      throw Error(ErrorCode::kInvalidParameter,
                  "black position " + std::to_string(p) + " outside the cycle");
    }
  }
  if (static_cast<int>(sorted.size()) > k) return std::nullopt;
  if (sorted.empty() || length <= 1) {
    return BlackCycleSearch(k, sorted, budget).Run();
  }
  // Rotate so the longest black-free stretch closes the cycle: once the last
  // black vertex is placed, the connectivity rule alone finishes the circuit.
  int shift = 0;
  int best_gap = -1;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const int next = (i + 1 < sorted.size()) ? sorted[i + 1]
                                             : sorted[0] + length;
    if (next - sorted[i] > best_gap) {
      best_gap = next - sorted[i];
      shift = next % length;
    }
  }
  std::vector<int> rotated;
  for (int p : sorted) rotated.push_back((p - shift + length) % length);
  auto walk = BlackCycleSearch(k, rotated, budget).Run();
  if (!walk) return std::nullopt;
  std::vector<int> out(length + 1);
  for (int p = 0; p < length; ++p) out[p] = (*walk)[(p - shift + length) % length];
  out[length] = out[0];
  return out;
}

std::vector<int> black_cycle_embedding(int k,
                                       std::span<const int> black_positions,
                                       std::uint64_t budget) {
  if (k < 3 || k % 2 == 0) {
    throw Error(ErrorCode::kInvalidParameter,
                "black cycle embedding needs odd k >= 3");
  }
  if (static_cast<int>(black_positions.size()) != k) {
    throw Error(ErrorCode::kInvalidParameter,
                "need exactly k = " + std::to_string(k) + " black positions");
  }
  if (k == 5 && is_forbidden_k5_pattern(black_positions)) {
    throw Error(ErrorCode::kProvenImpossible,
                "black positions form an excluded k = 5 pattern");
  }
  auto walk = SearchBlackCycle(k, black_positions, budget);
  if (!walk) {
    throw Error(ErrorCode::kInternal,
                "no black cycle embedding found for k = " + std::to_string(k));
  }
  return *walk;
}

bool is_forbidden_k5_pattern(std::span<const int> positions) {
  static constexpr std::array<std::array<int, 5>, 2> kPatterns = {{
      {0, 3, 4, 6, 7},
      {0, 1, 3, 7, 9},
  }};
  std::array<char, 10> have{};
  int distinct = 0;
  for (int p : positions) {
    const int r = ((p % 10) + 10) % 10;
    if (!have[r]) ++distinct;
    have[r] = 1;
  }
  if (distinct != 5 || positions.size() != 5) return false;
  for (const auto& pattern : kPatterns) {
    for (int c = 0; c < 10; ++c) {
      if (std::all_of(pattern.begin(), pattern.end(),
                      [&](int p) { return have[(p + c) % 10] != 0; })) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace edcn
