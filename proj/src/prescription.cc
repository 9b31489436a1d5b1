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

#include "hfactor/prescription.h"

#include <algorithm>
#include <climits>
#include <cstdlib>

namespace hfactor {

int dist_to_set(int d, std::span<const int> set) {
  if (set.empty()) throw std::invalid_argument("distance to an empty set");
  auto it = std::lower_bound(set.begin(), set.end(), d);
  int best = INT_MAX;
  if (it != set.end()) best = *it - d;
  if (it != set.begin()) best = std::min(best, d - *std::prev(it));
  return best;
}

std::optional<Gap> find_wide_gap(std::span<const int> set) {
  for (std::size_t i = 1; i < set.size(); ++i) {
    if (set[i] - set[i - 1] > 2) return Gap{set[i - 1] + 1, set[i] - 1};
  }
  return std::nullopt;
}

bool validate_star_property(std::span<const int> set) {
  return !find_wide_gap(set).has_value();
}

DegreeSet interval_set(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("empty interval");
  DegreeSet out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

DegreeSet normalize_set(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

DegreeSet shift_set(std::span<const int> set, int c) {
  DegreeSet out(set.begin(), set.end());
  for (int& x : out) x += c;
  return out;
}

bool is_interval(std::span<const int> set) {
  return !set.empty() &&
         set.back() - set.front() + 1 == static_cast<int>(set.size());
}

namespace {

void validate_entry(Vertex v, const DegreeSet& set, bool allow_negative) {
  const std::string where = "H(" + std::to_string(v) + ")";
  if (set.empty()) {
    throw PrescriptionError(PrescriptionError::Kind::kEmpty, v, std::nullopt,
                            where + " is empty");
  }
  if (!std::is_sorted(set.begin(), set.end()) ||
      std::adjacent_find(set.begin(), set.end()) != set.end()) {
    throw std::invalid_argument(where + " is not sorted and duplicate-free");
  }
  if (!allow_negative && set.front() < 0) {
    throw PrescriptionError(PrescriptionError::Kind::kNegative, v,
                            std::nullopt,
                            where + " contains negative degree " +
                                std::to_string(set.front()));
  }
  if (auto gap = find_wide_gap(set)) {
    std::string missing;
    for (int d = gap->first; d <= gap->last; ++d) {
      missing += (d == gap->first ? "" : ",") + std::to_string(d);
    }
    throw PrescriptionError(PrescriptionError::Kind::kWideGap, v, gap,
                            where + " has gap {" + missing + "} of " +
                                std::to_string(gap->size()) +
                                " missing degrees; at most one is allowed");
  }
}

}  // namespace

PrescriptionMap::PrescriptionMap(std::vector<DegreeSet> sets)
    : sets_(std::move(sets)) {
  for (Vertex v = 0; v < size(); ++v) validate_entry(v, sets_[v], false);
}

PrescriptionMap PrescriptionMap::uniform(int vertex_count,
                                         const DegreeSet& set) {
  return PrescriptionMap(std::vector<DegreeSet>(vertex_count, set));
}

PrescriptionMap PrescriptionMap::allowing_negative(
    std::vector<DegreeSet> sets) {
  PrescriptionMap out;
  out.sets_ = std::move(sets);
  for (Vertex v = 0; v < out.size(); ++v) validate_entry(v, out.sets_[v], true);
  return out;
}

bool PrescriptionMap::contains(Vertex v, int d) const {
  const DegreeSet& s = sets_.at(v);
  return std::binary_search(s.begin(), s.end(), d);
}

int PrescriptionMap::min_sum(const VertexSet& s) const {
  int total = 0;
  for (Vertex v : s) total += min(v);
  return total;
}

int PrescriptionMap::max_sum(const VertexSet& s) const {
  int total = 0;
  for (Vertex v : s) total += max(v);
  return total;
}

PrescriptionMap PrescriptionMap::shifted(int c) const {
  std::vector<DegreeSet> out;
  out.reserve(sets_.size());
  for (const DegreeSet& s : sets_) out.push_back(shift_set(s, c));
  return allowing_negative(std::move(out));
}

std::span<const int> ShiftedPrescription::at(Vertex v) const {
  auto it = std::lower_bound(domain.begin(), domain.end(), v);
  if (it == domain.end() || *it != v) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " is outside the shifted domain");
  }
  return sets[it - domain.begin()];
}

ShiftedPrescription shift_prescription(const Graph& g, const PrescriptionMap& h,
                                       const VertexSet& x, const VertexSet& y) {
  if (h.size() != g.vertex_count()) {
    throw std::invalid_argument("prescription size does not match the graph");
  }
  if (!disjoint(x, y)) {
    throw std::invalid_argument("shift sets X and Y overlap");
  }
  const std::vector<bool> in_x = indicator(g, x);
  const std::vector<bool> in_y = indicator(g, y);
  ShiftedPrescription out;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (in_x[u] || in_y[u]) continue;
    int into_y = 0;
    for (Vertex w : g.neighbors(u)) into_y += in_y[w] ? 1 : 0;
    out.domain.push_back(u);
    out.sets.push_back(shift_set(h.at(u), -into_y));
  }
  return out;
}

PrescriptionMap restrict_to_component(const Graph& g,
                                      const ShiftedPrescription& shifted,
                                      const VertexSet& x, const VertexSet& y,
                                      const VertexSet& k) {
  const std::vector<VertexSet> comps = components(g, set_union(x, y));
  if (std::find(comps.begin(), comps.end(), k) == comps.end()) {
    throw std::invalid_argument("vertex set is not a component of G - X - Y");
  }
  std::vector<DegreeSet> sets;
  sets.reserve(k.size());
  for (Vertex u : k) {
    auto s = shifted.at(u);
    sets.emplace_back(s.begin(), s.end());
  }
  return PrescriptionMap::allowing_negative(std::move(sets));
}

}  // namespace hfactor
