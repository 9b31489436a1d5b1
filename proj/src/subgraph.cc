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

#include "hfactor/subgraph.h"

#include <stdexcept>
#include <string>

namespace hfactor {

SpanningSubgraph::SpanningSubgraph(const Graph& host)
    : host_(&host),
      selected_(host.edge_count(), 0),
      degrees_(host.vertex_count(), 0) {}

SpanningSubgraph::SpanningSubgraph(const Graph& host,
                                   const std::vector<EdgeId>& edges)
    : SpanningSubgraph(host) {
  for (EdgeId id : edges) {
    if (id < 0 || id >= host.edge_count()) {
      throw std::invalid_argument("unknown edge id " + std::to_string(id));
    }
    insert(id);
  }
}

SpanningSubgraph SpanningSubgraph::from_mask(const Graph& host,
                                             std::uint64_t mask) {
  if (host.edge_count() > 64) {
    throw std::invalid_argument("mask form needs at most 64 edges");
  }
  SpanningSubgraph f(host);
  for (EdgeId id = 0; id < host.edge_count(); ++id) {
    if ((mask >> id) & 1U) f.insert(id);
  }
  return f;
}

void SpanningSubgraph::insert(EdgeId id) {
  if (selected_.at(id)) return;
  selected_[id] = 1;
  const Edge& e = host_->edge(id);
  ++degrees_[e.u];
  ++degrees_[e.v];
  ++size_;
}

void SpanningSubgraph::erase(EdgeId id) {
  if (!selected_.at(id)) return;
  selected_[id] = 0;
  const Edge& e = host_->edge(id);
  --degrees_[e.u];
  --degrees_[e.v];
  --size_;
}

void SpanningSubgraph::toggle(EdgeId id) {
  if (contains(id)) {
    erase(id);
  } else {
    insert(id);
  }
}

std::vector<EdgeId> SpanningSubgraph::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(size_);
  for (EdgeId id = 0; id < static_cast<EdgeId>(selected_.size()); ++id) {
    if (selected_[id]) out.push_back(id);
  }
  return out;
}

std::uint64_t SpanningSubgraph::mask() const {
  if (selected_.size() > 64) {
    throw std::invalid_argument("mask form needs at most 64 edges");
  }
  std::uint64_t m = 0;
  for (std::size_t id = 0; id < selected_.size(); ++id) {
    if (selected_[id]) m |= std::uint64_t{1} << id;
  }
  return m;
}

bool SpanningSubgraph::is_subset_of(const SpanningSubgraph& other) const {
  if (other.selected_.size() != selected_.size()) return false;
  for (std::size_t id = 0; id < selected_.size(); ++id) {
    if (selected_[id] && !other.selected_[id]) return false;
  }
  return true;
}

int vertex_deficiency(const SpanningSubgraph& f, const PrescriptionMap& h,
                      Vertex x) {
  return h.dist(x, f.degree(x));
}

int deficiency_of(const SpanningSubgraph& f, const PrescriptionMap& h,
                  const VertexSet& s) {
  validate_vertex_set(f.host(), s);
  if (h.size() != f.host().vertex_count()) {
    throw std::invalid_argument("prescription size does not match the graph");
  }
  int total = 0;
  for (Vertex x : s) total += vertex_deficiency(f, h, x);
  return total;
}

int deficiency_of(const SpanningSubgraph& f, const PrescriptionMap& h) {
  return deficiency_of(f, h, all_vertices(f.host()));
}

bool within_max(const SpanningSubgraph& f, const PrescriptionMap& h) {
  for (Vertex v = 0; v < f.host().vertex_count(); ++v) {
    if (f.degree(v) > h.max(v)) return false;
  }
  return true;
}

}  // namespace hfactor
