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

#ifndef HFACTOR_SUBGRAPH_H_
#define HFACTOR_SUBGRAPH_H_

#include <cstdint>
#include <span>
#include <vector>

#include "hfactor/graph.h"
#include "hfactor/prescription.h"

namespace hfactor {

// Spanning subgraph F of a host graph: an edge subset plus its degree
// vector. The host must outlive the subgraph.
class SpanningSubgraph {
 public:
  explicit SpanningSubgraph(const Graph& host);
  SpanningSubgraph(const Graph& host, const std::vector<EdgeId>& edges);

  // Bit i of `mask` selects edge i. Requires edge_count() <= 64.
  static SpanningSubgraph from_mask(const Graph& host, std::uint64_t mask);

  const Graph& host() const { return *host_; }
  bool contains(EdgeId id) const { return selected_.at(id) != 0; }
  int degree(Vertex v) const { return degrees_.at(v); }
  std::span<const int> degrees() const { return degrees_; }
  int size() const { return size_; }

  void insert(EdgeId id);
  void erase(EdgeId id);
  void toggle(EdgeId id);

  std::vector<EdgeId> edge_ids() const;
  std::uint64_t mask() const;

  // True iff every selected edge of `this` is selected in `other`.
  bool is_subset_of(const SpanningSubgraph& other) const;

  friend bool operator==(const SpanningSubgraph& a,
                         const SpanningSubgraph& b) {
    return a.host_ == b.host_ && a.selected_ == b.selected_;
  }

 private:
  const Graph* host_;
  std::vector<char> selected_;
  std::vector<int> degrees_;
  int size_ = 0;
};

// def(F; x) = dist(d_F(x), H(x)).
int vertex_deficiency(const SpanningSubgraph& f, const PrescriptionMap& h,
                      Vertex x);

// def_H(F; S). Throws std::invalid_argument on unknown vertices.
int deficiency_of(const SpanningSubgraph& f, const PrescriptionMap& h,
                  const VertexSet& s);

// def_H[F], the S = V(G) case.
int deficiency_of(const SpanningSubgraph& f, const PrescriptionMap& h);

// d_F(v) <= MH(v) for every v.
bool within_max(const SpanningSubgraph& f, const PrescriptionMap& h);

}  // namespace hfactor

#endif  // HFACTOR_SUBGRAPH_H_
