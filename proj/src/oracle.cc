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

#include "hfactor/oracle.h"

#include <algorithm>
#include <bit>
#include <climits>
#include <thread>

namespace hfactor::oracle {
namespace {

void check_inputs(const Graph& g, const PrescriptionMap& h,
                  const Options& options) {
  if (h.size() != g.vertex_count()) {
    throw std::invalid_argument("prescription size does not match the graph");
  }
  if (g.edge_count() > options.edge_cap) {
    throw CapExceeded("oracle edge cap", options.edge_cap, g.edge_count());
  }
}

// Walks the masks gray(i) for i in [first, last) updating the degree vector
// and total deficiency one edge flip at a time.
class GrayScanner {
 public:
  GrayScanner(const Graph& g, const PrescriptionMap& h) : g_(g) {
    table_.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      for (int d = 0; d <= g.degree(v); ++d) table_[v].push_back(h.dist(v, d));
    }
  }

  // visit(mask, deficiency) returns false to stop early.
  template <typename Visit>
  void scan(std::uint64_t first, std::uint64_t last, Visit&& visit) const {
    if (first >= last) return;
    std::vector<int> degree(g_.vertex_count(), 0);
    std::uint64_t mask = first ^ (first >> 1);
    for (EdgeId id = 0; id < g_.edge_count(); ++id) {
      if ((mask >> id) & 1U) {
        ++degree[g_.edge(id).u];
        ++degree[g_.edge(id).v];
      }
    }
    int def = 0;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) def += table_[v][degree[v]];
    for (std::uint64_t i = first;;) {
      if (!visit(mask, def)) return;
      if (++i == last) return;
      const int bit = std::countr_zero(i);
      const Edge& e = g_.edge(bit);
      const int step = ((mask >> bit) & 1U) ? -1 : 1;
      mask ^= std::uint64_t{1} << bit;
      def -= table_[e.u][degree[e.u]] + table_[e.v][degree[e.v]];
      degree[e.u] += step;
      degree[e.v] += step;
      def += table_[e.u][degree[e.u]] + table_[e.v][degree[e.v]];
    }
  }

 private:
  const Graph& g_;
  std::vector<std::vector<int>> table_;
};

struct Best {
  int value = INT_MAX;
  std::vector<std::uint64_t> masks;
};

// Minimum deficiency and every mask achieving it, in ascending order.
Best scan_optimal(const Graph& g, const PrescriptionMap& h,
                  const Options& options) {
  check_inputs(g, h, options);
  const GrayScanner scanner(g, h);
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  const int workers = static_cast<int>(std::clamp<std::uint64_t>(
      static_cast<std::uint64_t>(std::max(options.workers, 1)), 1, total));
  std::vector<Best> partial(workers);
  auto run = [&](int w) {
    const std::uint64_t first = total * w / workers;
    const std::uint64_t last = total * (w + 1) / workers;
    Best& best = partial[w];
    scanner.scan(first, last, [&](std::uint64_t mask, int def) {
      if (def < best.value) {
        best.value = def;
        best.masks.clear();
      }
      if (def == best.value) best.masks.push_back(mask);
      return true;
    });
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }
  Best merged;
  for (const Best& b : partial) merged.value = std::min(merged.value, b.value);
  for (Best& b : partial) {
    if (b.value == merged.value) {
      merged.masks.insert(merged.masks.end(), b.masks.begin(), b.masks.end());
    }
  }
  std::sort(merged.masks.begin(), merged.masks.end());
  return merged;
}

std::vector<int> mask_degrees(const Graph& g, std::uint64_t mask) {
  std::vector<int> degree(g.vertex_count(), 0);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if ((mask >> id) & 1U) {
      ++degree[g.edge(id).u];
      ++degree[g.edge(id).v];
    }
  }
  return degree;
}

}  // namespace

DeficiencyResult total_deficiency(const Graph& g, const PrescriptionMap& h,
                                  const Options& options) {
  Best best = scan_optimal(g, h, options);
  return {best.value, SpanningSubgraph::from_mask(g, best.masks.front())};
}

bool has_factor(const Graph& g, const PrescriptionMap& h,
                const Options& options) {
  check_inputs(g, h, options);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (h.max(v) < 0) return false;
  }
  bool found = false;
  GrayScanner(g, h).scan(0, std::uint64_t{1} << g.edge_count(),
                         [&](std::uint64_t, int def) {
                           found = def == 0;
                           return !found;
                         });
  return found;
}

std::vector<std::uint64_t> optimal_masks(const Graph& g,
                                         const PrescriptionMap& h,
                                         const OptimalFilter& filter,
                                         const Options& options) {
  std::vector<std::uint64_t> masks = scan_optimal(g, h, options).masks;
  if (filter.max_bounded) {
    std::erase_if(masks, [&](std::uint64_t mask) {
      const std::vector<int> degree = mask_degrees(g, mask);
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (degree[v] > h.max(v)) return true;
      }
      return false;
    });
  }
  if (filter.edge_minimal) {
    // Subsets of a bounded subgraph stay bounded, so the filtered list is
    // enough for the subset test.
    std::vector<std::uint64_t> all = masks;
    std::sort(all.begin(), all.end(), [](std::uint64_t a, std::uint64_t b) {
      return std::popcount(a) < std::popcount(b);
    });
    std::erase_if(masks, [&](std::uint64_t mask) {
      const int size = std::popcount(mask);
      for (std::uint64_t other : all) {
        if (std::popcount(other) >= size) break;
        if ((other & ~mask) == 0) return true;
      }
      return false;
    });
  }
  return masks;
}

std::vector<SpanningSubgraph> enumerate_optimal(const Graph& g,
                                                const PrescriptionMap& h,
                                                const OptimalFilter& filter,
                                                const Options& options) {
  std::vector<SpanningSubgraph> out;
  for (std::uint64_t mask : optimal_masks(g, h, filter, options)) {
    out.push_back(SpanningSubgraph::from_mask(g, mask));
  }
  return out;
}

SpectrumTable degree_spectra(const Graph& g, const PrescriptionMap& h,
                             const Options& options) {
  const Best best = scan_optimal(g, h, options);
  std::vector<std::vector<bool>> seen(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    seen[v].assign(g.degree(v) + 1, false);
  }
  for (std::uint64_t mask : best.masks) {
    const std::vector<int> degree = mask_degrees(g, mask);
    for (Vertex v = 0; v < g.vertex_count(); ++v) seen[v][degree[v]] = true;
  }
  SpectrumTable table;
  table.min_deficiency = best.value;
  table.optimal_count = static_cast<std::int64_t>(best.masks.size());
  table.spectra.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (int d = 0; d <= g.degree(v); ++d) {
      if (seen[v][d]) table.spectra[v].push_back(d);
    }
  }
  return table;
}

LovaszPartition lovasz_partition(const PrescriptionMap& h,
                                 const SpectrumTable& spectra) {
  LovaszPartition p;
  for (Vertex v = 0; v < h.size(); ++v) {
    const DegreeSet& seen = spectra.spectra.at(v);
    const bool inside = std::all_of(seen.begin(), seen.end(),
                                    [&](int d) { return h.contains(v, d); });
    if (inside) {
      p.c.push_back(v);
    } else if (seen.front() >= h.max(v)) {
      p.a.push_back(v);
    } else if (seen.back() <= h.min(v)) {
      p.b.push_back(v);
    } else {
      p.d.push_back(v);
    }
  }
  return p;
}

LovaszPartition lovasz_partition(const Graph& g, const PrescriptionMap& h,
                                 const Options& options) {
  return lovasz_partition(h, degree_spectra(g, h, options));
}

}  // namespace hfactor::oracle
