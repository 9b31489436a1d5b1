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

#ifndef HFACTOR_PRESCRIPTION_H_
#define HFACTOR_PRESCRIPTION_H_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hfactor/graph.h"

namespace hfactor {

// Sorted, duplicate-free set of allowed degrees.
using DegreeSet = std::vector<int>;

// min over h in `set` of |d - h|. Throws std::invalid_argument on an empty set.
int dist_to_set(int d, std::span<const int> set);

// A maximal run first..last of integers missing from a set, strictly between
// its minimum and maximum.
struct Gap {
  int first = 0;
  int last = 0;
  int size() const { return last - first + 1; }
};

// First gap of two or more consecutive missing integers, if any.
std::optional<Gap> find_wide_gap(std::span<const int> set);

// True iff every gap of `set` is a single integer. The set must be sorted.
bool validate_star_property(std::span<const int> set);

DegreeSet interval_set(int lo, int hi);
DegreeSet normalize_set(std::vector<int> values);
// H + c.
DegreeSet shift_set(std::span<const int> set, int c);
bool is_interval(std::span<const int> set);

// Raised when a set violates the prescription invariants.
class PrescriptionError : public std::invalid_argument {
 public:
  enum class Kind { kEmpty, kNegative, kWideGap };

  PrescriptionError(Kind kind, Vertex vertex, std::optional<Gap> gap,
                    const std::string& what)
      : std::invalid_argument(what), kind_(kind), vertex_(vertex), gap_(gap) {}

  Kind kind() const { return kind_; }
  Vertex vertex() const { return vertex_; }
  const std::optional<Gap>& gap() const { return gap_; }

 private:
  Kind kind_;
  Vertex vertex_;
  std::optional<Gap> gap_;
};

// Per-vertex degree prescription H. Every set is nonempty and satisfies the
// one-element-gap property. Sets built by the public constructor are also
// nonnegative; shifted maps (see shift_prescription) may hold negative
// values, which no subgraph can realize.
class PrescriptionMap {
 public:
  PrescriptionMap() = default;
  explicit PrescriptionMap(std::vector<DegreeSet> sets);

  static PrescriptionMap uniform(int vertex_count, const DegreeSet& set);
  // Accepts negative elements; still enforces nonemptiness and gap structure.
  static PrescriptionMap allowing_negative(std::vector<DegreeSet> sets);

  int size() const { return static_cast<int>(sets_.size()); }
  std::span<const int> at(Vertex v) const { return sets_.at(v); }
  const std::vector<DegreeSet>& sets() const { return sets_; }

  int min(Vertex v) const { return sets_.at(v).front(); }
  int max(Vertex v) const { return sets_.at(v).back(); }
  bool contains(Vertex v, int d) const;
  int dist(Vertex v, int d) const { return dist_to_set(d, sets_.at(v)); }

  // mH(S) and MH(S).
  int min_sum(const VertexSet& s) const;
  int max_sum(const VertexSet& s) const;

  // H + c applied to every vertex.
  PrescriptionMap shifted(int c) const;

  friend bool operator==(const PrescriptionMap&,
                         const PrescriptionMap&) = default;

 private:
  std::vector<DegreeSet> sets_;
};

// H_(X,Y): H(u) - |E_G(u,Y)| for every u outside X and Y. Entries are stored
// for the ascending vertex list `domain`.
struct ShiftedPrescription {
  VertexSet domain;
  std::vector<DegreeSet> sets;

  std::span<const int> at(Vertex v) const;
};

// Throws std::invalid_argument when X and Y overlap.
ShiftedPrescription shift_prescription(const Graph& g, const PrescriptionMap& h,
                                       const VertexSet& x, const VertexSet& y);

// H_(X,Y)|K, indexed like induced_subgraph(g, k). Throws
// std::invalid_argument unless `k` is exactly one component of G - X - Y.
PrescriptionMap restrict_to_component(const Graph& g,
                                      const ShiftedPrescription& shifted,
                                      const VertexSet& x, const VertexSet& y,
                                      const VertexSet& k);

}  // namespace hfactor

#endif  // HFACTOR_PRESCRIPTION_H_
