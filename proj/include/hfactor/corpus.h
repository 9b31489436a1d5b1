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

#ifndef HFACTOR_CORPUS_H_
#define HFACTOR_CORPUS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hfactor/graph.h"
#include "hfactor/prescription.h"

// Test corpora: exhaustive small graphs and seeded random instances. All
// randomness comes from std::mt19937_64, whose output sequence is fixed by
// the standard, so a seed pins the corpus on every platform.
namespace hfactor::corpus {

using Rng = std::mt19937_64;

bool is_connected(const Graph& g);

// Connected graphs on exactly n vertices with edges listed in lexicographic
// pair order. With up_to_isomorphism, one representative per class (the
// first in enumeration order); otherwise every labeled graph.
std::vector<Graph> connected_graphs(int n, bool up_to_isomorphism);

// Random prescription: a random subset of 0..d_G(x)+1 per vertex (never
// empty) with every gap wider than one closed by inserting fillers.
PrescriptionMap random_prescription(const Graph& g, Rng& rng);

// G(n, 1/2) conditioned on connectivity and at most max_edges edges.
Graph random_connected_graph(int n, int max_edges, Rng& rng);

struct Instance {
  std::string label;
  Graph graph;
  PrescriptionMap prescription;
};

// Every connected graph with 1..n_max vertices, each paired with
// `per_graph` random prescriptions drawn from one generator seeded by `seed`.
std::vector<Instance> exhaustive_corpus(int n_max, int per_graph,
                                        std::uint64_t seed,
                                        bool up_to_isomorphism);

// `count` random instances with 1..n_max vertices and at most m_max edges.
std::vector<Instance> random_corpus(int count, int n_max, int m_max,
                                    std::uint64_t seed);

}  // namespace hfactor::corpus

#endif  // HFACTOR_CORPUS_H_
