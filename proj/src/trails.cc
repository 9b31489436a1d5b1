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

#include "hfactor/trails.h"

#include <algorithm>
#include <utility>

namespace hfactor::trails {

const char* to_string(Parity parity) {
  return parity == Parity::kEven ? "even" : "odd";
}

namespace {

void check_structure(const Graph& g, const ChangeableTrail& trail) {
  if (trail.vertices.empty()) throw TrailError("trail has no vertices");
  if (trail.vertices.size() != trail.edges.size() + 1 ||
      trail.in_f.size() != trail.edges.size()) {
    throw TrailError("trail vertex, edge and flag counts disagree");
  }
  std::vector<bool> used(g.edge_count(), false);
  for (int i = 0; i < trail.length(); ++i) {
    const EdgeId id = trail.edges[i];
    if (id < 0 || id >= g.edge_count()) {
      throw TrailError("trail edge " + std::to_string(id) + " is not in host");
    }
    const Edge& e = g.edge(id);
    const Vertex from = trail.vertices[i];
    const Vertex to = trail.vertices[i + 1];
    if (!(e.touches(from) && e.other(from) == to)) {
      throw TrailError("trail edge " + std::to_string(id) + " does not join " +
                       std::to_string(from) + " and " + std::to_string(to));
    }
    if (used[id]) {
      throw TrailError("trail repeats edge " + std::to_string(id));
    }
    used[id] = true;
  }
}

void check_flags(const SpanningSubgraph& f, const ChangeableTrail& trail) {
  for (int i = 0; i < trail.length(); ++i) {
    if (f.contains(trail.edges[i]) != trail.in_f[i]) {
      throw TrailError("flag mismatch: edge " +
                       std::to_string(trail.edges[i]) +
                       (trail.in_f[i] ? " is flagged in F but is not"
                                      : " is flagged outside F but is in F"));
    }
  }
}

// Depth-first enumeration of the changeable trails rooted at one B0 vertex.
// Each extension only changes the status of the previous endpoint (which
// becomes interior) and of v0, so validity is maintained incrementally.
class TrailWalker {
 public:
  TrailWalker(const SpanningSubgraph& f, const PrescriptionMap& h)
      : f_(f),
        h_(h),
        g_(f.host()),
        used_(g_.edge_count(), false),
        delta_(g_.vertex_count(), 0),
        base_def_(g_.vertex_count(), 0) {
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      base_def_[v] = h.dist(v, f.degree(v));
    }
  }

  // visit(trail, deficiency_change) is called for every changeable trail from
  // `root` in preorder and returns true to stop the walk.
  template <typename Visit>
  bool walk(Vertex root, Visit&& visit) {
    root_ = root;
    trail_ = ChangeableTrail{{root}, {}, {}};
    def_change_ = 0;
    if (visit(std::as_const(trail_), def_change_)) return true;
    return extend(root, visit);
  }

 private:
  int flipped_def(Vertex v) const {
    return h_.dist(v, f_.degree(v) + delta_[v]);
  }

  void adjust(Vertex v, int step) {
    def_change_ -= flipped_def(v);
    delta_[v] += step;
    def_change_ += flipped_def(v);
  }

  template <typename Visit>
  bool extend(Vertex current, Visit& visit) {
    // `current` turns interior on any extension; it must start feasible.
    if (current != root_ && base_def_[current] != 0) return false;
    for (EdgeId id : g_.incident_edges(current)) {
      if (used_[id]) continue;
      const bool in_f = f_.contains(id);
      if (trail_.edges.empty() && in_f) continue;
      const Vertex next = g_.edge(id).other(current);
      const int step = in_f ? -1 : 1;
      used_[id] = true;
      adjust(current, step);
      adjust(next, step);
      trail_.vertices.push_back(next);
      trail_.edges.push_back(id);
      trail_.in_f.push_back(in_f);

      bool ok = current == root_ || flipped_def(current) == 0;
      if (ok && next != root_) ok = flipped_def(root_) < base_def_[root_];
      if (ok) {
        if (visit(std::as_const(trail_), def_change_)) return true;
        if (extend(next, visit)) return true;
      }

      trail_.vertices.pop_back();
      trail_.edges.pop_back();
      trail_.in_f.pop_back();
      adjust(next, -step);
      adjust(current, -step);
      used_[id] = false;
    }
    return false;
  }

  const SpanningSubgraph& f_;
  const PrescriptionMap& h_;
  const Graph& g_;
  std::vector<bool> used_;
  std::vector<int> delta_;
  std::vector<int> base_def_;
  Vertex root_ = 0;
  ChangeableTrail trail_;
  int def_change_ = 0;
};

void check_search_inputs(const SpanningSubgraph& f, const PrescriptionMap& h,
                         const Options& options) {
  if (h.size() != f.host().vertex_count()) {
    throw std::invalid_argument("prescription size does not match the graph");
  }
  if (f.host().edge_count() > options.edge_cap) {
    throw CapExceeded("trail-search edge cap", options.edge_cap,
                      f.host().edge_count());
  }
}

}  // namespace

ChangeableTrail make_trail(const SpanningSubgraph& f,
                           const std::vector<Vertex>& vertices) {
  ChangeableTrail trail;
  trail.vertices = vertices;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    auto id = f.host().find_edge(vertices[i], vertices[i + 1]);
    if (!id) {
      throw TrailError("vertices " + std::to_string(vertices[i]) + " and " +
                       std::to_string(vertices[i + 1]) + " are not adjacent");
    }
    trail.edges.push_back(*id);
    trail.in_f.push_back(f.contains(*id));
  }
  check_structure(f.host(), trail);
  return trail;
}

SpanningSubgraph apply_trail(const SpanningSubgraph& f,
                             const ChangeableTrail& trail) {
  check_structure(f.host(), trail);
  check_flags(f, trail);
  SpanningSubgraph out = f;
  for (EdgeId id : trail.edges) out.toggle(id);
  return out;
}

TrailVerdict is_changeable_trail(const SpanningSubgraph& f,
                                 const PrescriptionMap& h,
                                 const ChangeableTrail& trail) {
  const Graph& g = f.host();
  check_structure(g, trail);
  check_flags(f, trail);
  TrailVerdict verdict;
  verdict.parity = trail.parity();
  auto fail = [&](char condition, int position, std::string reason) {
    verdict.valid = false;
    verdict.condition = condition;
    verdict.position = position;
    verdict.reason = std::move(reason);
    return verdict;
  };

  const Vertex v0 = trail.start();
  const int base_v0 = vertex_deficiency(f, h, v0);
  if (f.degree(v0) >= h.min(v0)) {
    return fail('a', 0,
                "start vertex " + std::to_string(v0) + " is not in B0");
  }
  std::vector<int> degree(f.degrees().begin(), f.degrees().end());
  std::vector<bool> on_trail(g.vertex_count(), false);
  on_trail[v0] = true;
  for (int l = 1; l <= trail.length(); ++l) {
    if (l == 1 && trail.in_f[0]) {
      return fail('a', 1, "first edge " + std::to_string(trail.edges[0]) +
                              " belongs to F");
    }
    const Edge& e = g.edge(trail.edges[l - 1]);
    const int step = trail.in_f[l - 1] ? -1 : 1;
    degree[e.u] += step;
    degree[e.v] += step;
    on_trail[trail.vertices[l]] = true;
    const Vertex end = trail.vertices[l];
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      if (!on_trail[x] || x == v0 || x == end) continue;
      if (vertex_deficiency(f, h, x) != 0) {
        return fail('b', l,
                    "interior vertex " + std::to_string(x) +
                        " is infeasible in F (degree " +
                        std::to_string(f.degree(x)) + ")");
      }
      if (h.dist(x, degree[x]) != 0) {
        return fail('b', l,
                    "interior vertex " + std::to_string(x) +
                        " becomes infeasible after flipping (degree " +
                        std::to_string(degree[x]) + ")");
      }
    }
    if (end != v0 && h.dist(v0, degree[v0]) >= base_v0) {
      return fail('c', l,
                  "deficiency of start vertex " + std::to_string(v0) +
                      " does not drop (" + std::to_string(base_v0) + " -> " +
                      std::to_string(h.dist(v0, degree[v0])) + ")");
    }
  }
  verdict.valid = true;
  return verdict;
}

VertexSet compute_b0(const SpanningSubgraph& f, const PrescriptionMap& h) {
  VertexSet out;
  for (Vertex v = 0; v < f.host().vertex_count(); ++v) {
    if (f.degree(v) < h.min(v)) out.push_back(v);
  }
  return out;
}

std::optional<ChangeableTrail> find_augmenting_trail(
    const SpanningSubgraph& f, const PrescriptionMap& h,
    const Options& options) {
  check_search_inputs(f, h, options);
  if (!within_max(f, h)) {
    throw std::invalid_argument(
        "augmenting-trail search needs d_F(v) <= MH(v) at every vertex");
  }
  TrailWalker walker(f, h);
  std::optional<ChangeableTrail> found;
  for (Vertex root : compute_b0(f, h)) {
    const bool stopped =
        walker.walk(root, [&](const ChangeableTrail& trail, int change) {
          if (change >= 0) return false;
          found = trail;
          return true;
        });
    if (stopped) break;
  }
  return found;
}

VertexSet Reachability::even_set() const {
  VertexSet out;
  for (Vertex v = 0; v < static_cast<Vertex>(even.size()); ++v) {
    if (even[v]) out.push_back(v);
  }
  return out;
}

VertexSet Reachability::odd_set() const {
  VertexSet out;
  for (Vertex v = 0; v < static_cast<Vertex>(odd.size()); ++v) {
    if (odd[v]) out.push_back(v);
  }
  return out;
}

Reachability reachability(const SpanningSubgraph& f, const PrescriptionMap& h,
                          const Options& options) {
  check_search_inputs(f, h, options);
  const int n = f.host().vertex_count();
  Reachability reach{std::vector<bool>(n, false), std::vector<bool>(n, false)};
  TrailWalker walker(f, h);
  for (Vertex root : compute_b0(f, h)) {
    walker.walk(root, [&](const ChangeableTrail& trail, int) {
      if (trail.parity() == Parity::kEven) {
        reach.even[trail.end()] = true;
      } else {
        reach.odd[trail.end()] = true;
      }
      return false;
    });
  }
  return reach;
}

TrailPartition partition_from_reachability(const SpanningSubgraph& f,
                                           const PrescriptionMap& h,
                                           const Reachability& reach) {
  const Graph& g = f.host();
  TrailPartition p;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int d = f.degree(v);
    const bool both = reach.even[v] && reach.odd[v];
    const bool even_window = reach.even[v] && h.min(v) < d && d <= h.max(v);
    const bool odd_window = reach.odd[v] && h.min(v) <= d && d < h.max(v);
    if (both || even_window || odd_window) {
      p.d.push_back(v);
    } else if (reach.even[v]) {
      p.b.push_back(v);
    } else if (reach.odd[v]) {
      p.a.push_back(v);
    } else {
      p.c.push_back(v);
    }
  }
  p.d_components = components(g, set_difference(all_vertices(g), p.d));
  return p;
}

TrailPartition trail_partition(const SpanningSubgraph& f,
                               const PrescriptionMap& h,
                               const Options& options) {
  return partition_from_reachability(f, h, reachability(f, h, options));
}

}  // namespace hfactor::trails
