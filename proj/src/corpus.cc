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

#include "hfactor/corpus.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hfactor::corpus {
namespace {

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  return pairs;
}

Graph graph_from_mask(int n, const std::vector<Edge>& pairs,
                      std::uint64_t mask) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if ((mask >> i) & 1U) edges.push_back(pairs[i]);
  }
  return Graph(n, std::move(edges));
}

// Smallest relabeled pair mask over all vertex permutations.
std::uint64_t canonical_mask(int n, const std::vector<Edge>& pairs,
                             std::uint64_t mask,
                             const std::vector<std::vector<int>>& pair_index) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t relabeled = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) {
        relabeled |= std::uint64_t{1}
                     << pair_index[perm[pairs[i].u]][perm[pairs[i].v]];
      }
    }
    best = std::min(best, relabeled);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || components(g).size() == 1;
}

std::vector<Graph> connected_graphs(int n, bool up_to_isomorphism) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > 8) throw std::invalid_argument("exhaustive enumeration needs n <= 8");
  const std::vector<Edge> pairs = all_pairs(n);
  std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    pair_index[pairs[i].u][pairs[i].v] = static_cast<int>(i);
    pair_index[pairs[i].v][pairs[i].u] = static_cast<int>(i);
  }
  std::vector<Graph> out;
  std::set<std::uint64_t> classes;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g = graph_from_mask(n, pairs, mask);
    if (!is_connected(g)) continue;
    if (up_to_isomorphism &&
        !classes.insert(canonical_mask(n, pairs, mask, pair_index)).second) {
      continue;
    }
    out.push_back(std::move(g));
  }
  return out;
}

PrescriptionMap random_prescription(const Graph& g, Rng& rng) {
  std::vector<DegreeSet> sets;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int top = g.degree(v) + 1;
    DegreeSet s;
    for (int d = 0; d <= top; ++d) {
      if (rng() & 1U) s.push_back(d);
    }
    if (s.empty()) s.push_back(static_cast<int>(rng() % (top + 1)));
    DegreeSet repaired;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i > 0) {
        for (int fill = s[i - 1] + 2; fill < s[i]; fill += 2) {
          repaired.push_back(fill);
        }
      }
      repaired.push_back(s[i]);
    }
    sets.push_back(std::move(repaired));
  }
  return PrescriptionMap(std::move(sets));
}

Graph random_connected_graph(int n, int max_edges, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random graph needs n >= 1");
  const std::vector<Edge> pairs = all_pairs(n);
  if (max_edges < n - 1) {
    throw std::invalid_argument("edge cap too small for a connected graph");
  }
  for (;;) {
    std::vector<Edge> edges;
    for (const Edge& e : pairs) {
      if (rng() & 1U) edges.push_back(e);
    }
    if (static_cast<int>(edges.size()) > max_edges) continue;
    Graph g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
}

std::vector<Instance> exhaustive_corpus(int n_max, int per_graph,
                                        std::uint64_t seed,
                                        bool up_to_isomorphism) {
  Rng rng(seed);
  std::vector<Instance> out;
  int graph_index = 0;
  for (int n = 1; n <= n_max; ++n) {
    for (Graph& g : connected_graphs(n, up_to_isomorphism)) {
      for (int j = 0; j < per_graph; ++j) {
        PrescriptionMap h = random_prescription(g, rng);
        out.push_back({"g" + std::to_string(graph_index) + "-n" +
                           std::to_string(n) + "-p" + std::to_string(j),
                       g, std::move(h)});
      }
      ++graph_index;
    }
  }
  return out;
}

std::vector<Instance> random_corpus(int count, int n_max, int m_max,
                                    std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max));
    Graph g = random_connected_graph(n, m_max, rng);
    PrescriptionMap h = random_prescription(g, rng);
    out.push_back({"r" + std::to_string(i) + "-n" + std::to_string(n),
                   std::move(g), std::move(h)});
  }
  return out;
}

}  // namespace hfactor::corpus
