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

#include "hfactor/formula.h"

#include <map>
#include <sstream>
#include <tuple>

namespace hfactor::formula {
namespace {

std::string describe(const VertexSet& k) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < k.size(); ++i) out << (i ? "," : "") << k[i];
  out << "}";
  return out.str();
}

bool component_has_factor(const Graph& g, const VertexSet& k,
                          std::vector<DegreeSet> sets,
                          const Options& options) {
  const InducedSubgraph sub = induced_subgraph(g, k);
  try {
    return oracle::has_factor(
        sub.graph, PrescriptionMap::allowing_negative(std::move(sets)),
        options.component);
  } catch (const CapExceeded& e) {
    throw CapExceeded("oracle edge cap on component " + describe(k),
                      e.limit(), e.actual());
  }
}

int boundary_terms(const Graph& g, const PrescriptionMap& h,
                   const VertexSet& s, const VertexSet& t) {
  int value = -h.max_sum(s) + h.min_sum(t);
  for (Vertex x : t) value -= degree_outside(g, x, s);
  return value;
}

bool better(const DualWitness& a, const DualWitness& b) {
  if (a.value != b.value) return a.value > b.value;
  const auto size_a = a.s.size() + a.t.size();
  const auto size_b = b.s.size() + b.t.size();
  return std::tie(size_a, a.s, a.t) < std::tie(size_b, b.s, b.t);
}

}  // namespace

TauResult tau_count(const Graph& g, const PrescriptionMap& h,
                    const VertexSet& s, const VertexSet& t,
                    const Options& options) {
  ShiftedPrescription shifted = shift_prescription(g, h, s, t);
  if (options.corrupt_shift) {
    for (DegreeSet& set : shifted.sets) set = shift_set(set, -1);
  }
  TauResult result;
  for (const VertexSet& k : components(g, set_union(s, t))) {
    const PrescriptionMap restricted = restrict_to_component(g, shifted, s, t, k);
    if (!component_has_factor(g, k, restricted.sets(), options)) {
      ++result.count;
      result.components.push_back(k);
    }
  }
  return result;
}

DualWitness evaluate_dual(const Graph& g, const PrescriptionMap& h,
                          const VertexSet& s, const VertexSet& t,
                          const Options& options) {
  TauResult tau = tau_count(g, h, s, t, options);
  DualWitness w{s, t, tau.count, tau.count + boundary_terms(g, h, s, t),
                std::move(tau.components)};
  return w;
}

int lovasz_rhs(const Graph& g, const PrescriptionMap& h, const VertexSet& s,
               const VertexSet& t, const Options& options) {
  return evaluate_dual(g, h, s, t, options).value;
}

void for_each_dual(const Graph& g, const PrescriptionMap& h,
                   const std::function<void(const DualWitness&)>& visit,
                   const Options& options) {
  const int n = g.vertex_count();
  if (n > options.dual_n_cap) {
    throw CapExceeded("dual sweep vertex cap", options.dual_n_cap, n);
  }
  if (h.size() != n) {
    throw std::invalid_argument("prescription size does not match the graph");
  }
  if (n > 63) throw CapExceeded("dual sweep vertex cap", 63, n);
  // Factor existence on a component depends only on its vertex set and on
  // how many of each vertex's neighbors sit in T.
  std::map<std::pair<std::uint64_t, std::vector<int>>, bool> memo;
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  std::vector<int> state(n, 0);
  std::vector<int> into_t(n, 0);
  for (std::int64_t index = 0; index < total; ++index) {
    std::int64_t rest = index;
    DualWitness w;
    for (Vertex v = 0; v < n; ++v) {
      state[v] = static_cast<int>(rest % 3);
      rest /= 3;
      if (state[v] == 1) w.s.push_back(v);
      if (state[v] == 2) w.t.push_back(v);
    }
    for (Vertex v = 0; v < n; ++v) {
      into_t[v] = 0;
      for (Vertex y : g.neighbors(v)) into_t[v] += state[y] == 2 ? 1 : 0;
      if (options.corrupt_shift) ++into_t[v];
    }
    for (const VertexSet& k : components(g, set_union(w.s, w.t))) {
      std::pair<std::uint64_t, std::vector<int>> key{0, {}};
      for (Vertex u : k) {
        key.first |= std::uint64_t{1} << u;
        key.second.push_back(into_t[u]);
      }
      auto it = memo.find(key);
      if (it == memo.end()) {
        std::vector<DegreeSet> sets;
        for (Vertex u : k) sets.push_back(shift_set(h.at(u), -into_t[u]));
        it = memo.emplace(key, component_has_factor(g, k, std::move(sets),
                                                    options))
                 .first;
      }
      if (!it->second) {
        ++w.tau;
        w.deficient_components.push_back(k);
      }
    }
    w.value = w.tau + boundary_terms(g, h, w.s, w.t);
    visit(w);
  }
}

DualWitness max_dual(const Graph& g, const PrescriptionMap& h,
                     const Options& options) {
  DualWitness best;
  bool first = true;
  for_each_dual(
      g, h,
      [&](const DualWitness& w) {
        if (first || better(w, best)) best = w;
        first = false;
      },
      options);
  return best;
}

bool has_factor_criterion(const Graph& g, const PrescriptionMap& h,
                          const Options& options) {
  return max_dual(g, h, options).value <= 0;
}

int partition_value(const Graph& g, const PrescriptionMap& h,
                   const trails::TrailPartition& partition) {
  int value = partition.tau() - h.max_sum(partition.a);
  for (Vertex v : partition.b) {
    value += h.min(v) - degree_outside(g, v, partition.a);
  }
  return value;
}

}  // namespace hfactor::formula
