// Copyright 2026 The hfactor Authors
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

// Brute-force reference implementations used as test oracles. They work on
// raw edge lists and degree arrays and share no algorithmic code with the
// library: no Gray codes, no incremental walkers, no memoisation.

#ifndef HFACTOR_TESTS_TEST_SUPPORT_H_
#define HFACTOR_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "hfactor/graph.h"
#include "hfactor/prescription.h"

namespace hfactor::testing {

using Sets = std::vector<std::vector<int>>;

// Vertex names used throughout the worked examples.
inline constexpr Vertex kA = 0;
inline constexpr Vertex kB = 1;
inline constexpr Vertex kC = 2;
inline constexpr Vertex kD = 3;

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph(n, edges);
}

inline PrescriptionMap ones(int n) { return PrescriptionMap::uniform(n, {1}); }

inline Sets sets_of(const PrescriptionMap& h) { return h.sets(); }

inline int naive_dist(int d, const std::vector<int>& s) {
  int best = INT_MAX;
  for (int x : s) best = std::min(best, std::abs(d - x));
  return best;
}

inline std::vector<int> naive_degrees(const Graph& g, std::uint64_t mask) {
  std::vector<int> deg(g.vertex_count(), 0);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (mask >> i & 1) {
      ++deg[g.edge(i).u];
      ++deg[g.edge(i).v];
    }
  }
  return deg;
}

inline int naive_def(const Graph& g, const Sets& sets, std::uint64_t mask) {
  const std::vector<int> deg = naive_degrees(g, mask);
  int total = 0;
  for (int v = 0; v < g.vertex_count(); ++v) total += naive_dist(deg[v], sets[v]);
  return total;
}

inline int naive_total_deficiency(const Graph& g, const Sets& sets) {
  int best = INT_MAX;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.edge_count()); ++m) {
    best = std::min(best, naive_def(g, sets, m));
  }
  return best;
}

inline std::vector<std::uint64_t> naive_optimal(const Graph& g, const Sets& sets) {
  const int best = naive_total_deficiency(g, sets);
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.edge_count()); ++m) {
    if (naive_def(g, sets, m) == best) out.push_back(m);
  }
  return out;
}

inline std::vector<std::set<int>> naive_spectra(const Graph& g, const Sets& sets) {
  std::vector<std::set<int>> out(g.vertex_count());
  for (std::uint64_t m : naive_optimal(g, sets)) {
    const std::vector<int> deg = naive_degrees(g, m);
    for (int v = 0; v < g.vertex_count(); ++v) out[v].insert(deg[v]);
  }
  return out;
}

// Maximum matching size by trying every edge subset.
inline int naive_matching_number(const Graph& g) {
  int best = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.edge_count()); ++m) {
    const std::vector<int> deg = naive_degrees(g, m);
    if (std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 1; })) {
      best = std::max(best, static_cast<int>(__builtin_popcountll(m)));
    }
  }
  return best;
}

// Evaluates the (S,T) expression from first principles: shift sets, split
// G-S-T into components by flood fill, test each component for a factor by
// trying all its edge subsets.
inline int naive_dual_value(const Graph& g, const Sets& sets, std::uint32_t s_mask,
                            std::uint32_t t_mask) {
  const int n = g.vertex_count();
  auto in = [](std::uint32_t m, int v) { return (m >> v & 1) != 0; };
  std::vector<int> comp(n, -1);
  int comps = 0;
  for (int v = 0; v < n; ++v) {
    if (in(s_mask, v) || in(t_mask, v) || comp[v] >= 0) continue;
    std::vector<int> stack{v};
    comp[v] = comps;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const Edge& e : g.edges()) {
        if (!e.touches(x)) continue;
        const int y = e.other(x);
        if (in(s_mask, y) || in(t_mask, y) || comp[y] >= 0) continue;
        comp[y] = comps;
        stack.push_back(y);
      }
    }
    ++comps;
  }
  int tau = 0;
  for (int k = 0; k < comps; ++k) {
    std::vector<int> inner;
    for (int i = 0; i < g.edge_count(); ++i) {
      if (comp[g.edge(i).u] == k && comp[g.edge(i).v] == k) inner.push_back(i);
    }
    bool found = false;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << inner.size()) && !found; ++m) {
      std::vector<int> deg(n, 0);
      for (std::size_t j = 0; j < inner.size(); ++j) {
        if (m >> j & 1) {
          ++deg[g.edge(inner[j]).u];
          ++deg[g.edge(inner[j]).v];
        }
      }
      bool ok = true;
      for (int v = 0; v < n && ok; ++v) {
        if (comp[v] != k) continue;
        int into_t = 0;
        for (const Edge& e : g.edges()) {
          if (e.touches(v) && in(t_mask, e.other(v))) ++into_t;
        }
        const std::vector<int>& hv = sets[v];
        ok = std::find(hv.begin(), hv.end(), deg[v] + into_t) != hv.end();
      }
      found = ok;
    }
    if (!found) ++tau;
  }
  int value = tau;
  for (int v = 0; v < n; ++v) {
    if (in(s_mask, v)) value -= sets[v].back();
    if (!in(t_mask, v)) continue;
    value += sets[v].front();
    for (const Edge& e : g.edges()) {
      if (e.touches(v) && !in(s_mask, e.other(v))) --value;
    }
  }
  return value;
}

inline int naive_max_dual(const Graph& g, const Sets& sets) {
  const int n = g.vertex_count();
  int best = INT_MIN;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    for (std::uint32_t t = 0; t < (1u << n); ++t) {
      if (s & t) continue;
      best = std::max(best, naive_dual_value(g, sets, s, t));
    }
  }
  return best;
}

// Checks every prefix of a trail against the changeable-trail conditions,
// recomputing all degrees from the edge mask.
inline bool naive_trail_ok(const Graph& g, const Sets& sets, std::uint64_t f,
                           const std::vector<int>& vertices,
                           const std::vector<int>& edges) {
  const std::vector<int> base = naive_degrees(g, f);
  const int v0 = vertices.front();
  if (base[v0] >= sets[v0].front()) return false;
  if (!edges.empty() && (f >> edges.front() & 1)) return false;
  const int start_def = naive_dist(base[v0], sets[v0]);
  for (std::size_t j = 1; j <= edges.size(); ++j) {
    std::uint64_t flipped = f;
    for (std::size_t i = 0; i < j; ++i) flipped ^= std::uint64_t{1} << edges[i];
    const std::vector<int> deg = naive_degrees(g, flipped);
    const int end = vertices[j];
    for (std::size_t i = 0; i <= j; ++i) {
      const int x = vertices[i];
      if (x == v0 || x == end) continue;
      if (naive_dist(base[x], sets[x]) != 0 || naive_dist(deg[x], sets[x]) != 0) {
        return false;
      }
    }
    if (end != v0 && naive_dist(deg[v0], sets[v0]) >= start_def) return false;
  }
  return true;
}

// Calls visit(vertices, edges) for every trail (distinct edges) in g,
// including the length-0 trail at each vertex.
inline void naive_for_each_trail(
    const Graph& g,
    const std::function<void(const std::vector<int>&, const std::vector<int>&)>& visit) {
  std::vector<int> vertices;
  std::vector<int> edges;
  std::vector<bool> used(g.edge_count(), false);
  std::function<void()> grow = [&] {
    visit(vertices, edges);
    const int x = vertices.back();
    for (int i = 0; i < g.edge_count(); ++i) {
      if (used[i] || !g.edge(i).touches(x)) continue;
      used[i] = true;
      vertices.push_back(g.edge(i).other(x));
      edges.push_back(i);
      grow();
      edges.pop_back();
      vertices.pop_back();
      used[i] = false;
    }
  };
  for (int v = 0; v < g.vertex_count(); ++v) {
    vertices = {v};
    grow();
  }
}

struct NaiveReach {
  std::vector<bool> even;
  std::vector<bool> odd;
};

inline NaiveReach naive_reachability(const Graph& g, const Sets& sets,
                                     std::uint64_t f) {
  NaiveReach r{std::vector<bool>(g.vertex_count(), false),
               std::vector<bool>(g.vertex_count(), false)};
  naive_for_each_trail(g, [&](const std::vector<int>& vs, const std::vector<int>& es) {
    if (!naive_trail_ok(g, sets, f, vs, es)) return;
    const bool odd = !es.empty() && !(f >> es.back() & 1);
    (odd ? r.odd : r.even)[vs.back()] = true;
  });
  return r;
}

// True iff some changeable trail lowers the total deficiency.
inline bool naive_has_augmenting_trail(const Graph& g, const Sets& sets,
                                       std::uint64_t f) {
  const int before = naive_def(g, sets, f);
  bool found = false;
  naive_for_each_trail(g, [&](const std::vector<int>& vs, const std::vector<int>& es) {
    if (found || !naive_trail_ok(g, sets, f, vs, es)) return;
    std::uint64_t flipped = f;
    for (int e : es) flipped ^= std::uint64_t{1} << e;
    found = naive_def(g, sets, flipped) < before;
  });
  return found;
}

}  // namespace hfactor::testing

#endif  // HFACTOR_TESTS_TEST_SUPPORT_H_
