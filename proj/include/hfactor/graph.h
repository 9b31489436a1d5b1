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

#ifndef HFACTOR_GRAPH_H_
#define HFACTOR_GRAPH_H_

#include <optional>
#include <span>
#include <vector>

namespace hfactor {

// Vertices are dense indices 0..n-1. Edge ids are positions in the edge list
// and never change for the lifetime of a Graph.
using Vertex = int;
using EdgeId = int;

// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool touches(Vertex x) const { return x == u || x == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite simple undirected graph. Construction rejects loops, parallel edges
// and out-of-range endpoints with std::invalid_argument.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count, std::vector<Edge> edges = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool contains(Vertex v) const { return v >= 0 && v < vertex_count_; }

  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  std::span<const Edge> edges() const { return edges_; }

  // Ascending neighbor indices.
  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_.at(v); }
  // Ascending edge ids.
  std::span<const EdgeId> incident_edges(Vertex v) const {
    return incidence_.at(v);
  }
  int degree(Vertex v) const {
    return static_cast<int>(incidence_.at(v).size());
  }

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::vector<EdgeId>> incidence_;
};

// Sorts and deduplicates.
VertexSet make_vertex_set(std::vector<Vertex> vertices);

// Throws std::invalid_argument if `s` names a vertex outside `g`.
void validate_vertex_set(const Graph& g, const VertexSet& s);

// Indicator vector of length g.vertex_count().
std::vector<bool> indicator(const Graph& g, const VertexSet& s);

VertexSet all_vertices(const Graph& g);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool disjoint(const VertexSet& a, const VertexSet& b);

// Connected components of G - removed, each sorted, listed in order of their
// smallest vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed = {});

// G[S] with vertices renumbered 0..|S|-1 in ascending host order.
struct InducedSubgraph {
  Graph graph;
  VertexSet host_vertices;        // local index -> host vertex
  std::vector<EdgeId> host_edges;  // local edge id -> host edge id
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Edge ids of E_G(S, T): edges with one end in S and the other in T.
std::vector<EdgeId> cross_edges(const Graph& g, const VertexSet& s,
                                const VertexSet& t);
int cross_edge_count(const Graph& g, const VertexSet& s, const VertexSet& t);

// d_{G-S}(x): neighbors of x outside `removed`.
int degree_outside(const Graph& g, Vertex x, const VertexSet& removed);

// Small named graphs used by tests, examples and the CLI.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();

}  // namespace hfactor

#endif  // HFACTOR_GRAPH_H_
