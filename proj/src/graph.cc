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

#include "hfactor/graph.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hfactor {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      neighbors_(vertex_count < 0 ? 0 : vertex_count),
      incidence_(vertex_count < 0 ? 0 : vertex_count) {
  if (vertex_count < 0) {
    throw std::invalid_argument("negative vertex count");
  }
  for (EdgeId id = 0; id < edge_count(); ++id) {
    const Edge& e = edges_[id];
    if (!contains(e.u) || !contains(e.v)) {
      throw std::invalid_argument("edge " + std::to_string(id) +
                                  " has an endpoint outside 0.." +
                                  std::to_string(vertex_count - 1));
    }
    if (e.u == e.v) {
      throw std::invalid_argument("edge " + std::to_string(id) +
                                  " is a loop at vertex " +
                                  std::to_string(e.u));
    }
    neighbors_[e.u].push_back(e.v);
    neighbors_[e.v].push_back(e.u);
    incidence_[e.u].push_back(id);
    incidence_[e.v].push_back(id);
  }
  for (Vertex v = 0; v < vertex_count_; ++v) {
    auto& nbrs = neighbors_[v];
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw std::invalid_argument("parallel edges at vertex " +
                                  std::to_string(v));
    }
  }
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return std::nullopt;
  for (EdgeId id : incidence_[u]) {
    if (edges_[id].other(u) == v) return id;
  }
  return std::nullopt;
}

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  return vertices;
}

void validate_vertex_set(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (!g.contains(v)) {
      throw std::invalid_argument("unknown vertex " + std::to_string(v));
    }
  }
}

std::vector<bool> indicator(const Graph& g, const VertexSet& s) {
  validate_vertex_set(g, s);
  std::vector<bool> in(g.vertex_count(), false);
  for (Vertex v : s) in[v] = true;
  return in;
}

VertexSet all_vertices(const Graph& g) {
  VertexSet all(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
  return all;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  std::vector<bool> seen = indicator(g, removed);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    VertexSet comp;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  validate_vertex_set(g, s);
  std::vector<int> local(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(s.size()); ++i) local[s[i]] = i;
  std::vector<Edge> edges;
  std::vector<EdgeId> host_edges;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (local[e.u] >= 0 && local[e.v] >= 0) {
      edges.push_back({local[e.u], local[e.v]});
      host_edges.push_back(id);
    }
  }
  return {Graph(static_cast<int>(s.size()), std::move(edges)), s,
          std::move(host_edges)};
}

std::vector<EdgeId> cross_edges(const Graph& g, const VertexSet& s,
                                const VertexSet& t) {
  const std::vector<bool> in_s = indicator(g, s);
  const std::vector<bool> in_t = indicator(g, t);
  std::vector<EdgeId> out;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if ((in_s[e.u] && in_t[e.v]) || (in_t[e.u] && in_s[e.v])) {
      out.push_back(id);
    }
  }
  return out;
}

int cross_edge_count(const Graph& g, const VertexSet& s, const VertexSet& t) {
  return static_cast<int>(cross_edges(g, s, t).size());
}

int degree_outside(const Graph& g, Vertex x, const VertexSet& removed) {
  int d = 0;
  for (Vertex y : g.neighbors(x)) {
    if (!std::binary_search(removed.begin(), removed.end(), y)) ++d;
  }
  return d;
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});        // outer cycle
    edges.push_back({i, i + 5});              // spokes
    edges.push_back({i + 5, (i + 2) % 5 + 5});  // inner pentagram
  }
  return Graph(10, std::move(edges));
}

}  // namespace hfactor
