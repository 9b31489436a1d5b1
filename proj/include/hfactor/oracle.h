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

#ifndef HFACTOR_ORACLE_H_
#define HFACTOR_ORACLE_H_

#include <cstdint>
#include <vector>

#include "hfactor/errors.h"
#include "hfactor/graph.h"
#include "hfactor/prescription.h"
#include "hfactor/subgraph.h"

// Exact answers by enumerating all 2^|E| spanning subgraphs.
//
// Subgraphs are ordered by their edge mask read as an unsigned integer with
// bit i standing for edge i; "least" and "first" always refer to that order.
// Every entry point throws CapExceeded when |E| exceeds the edge cap.
namespace hfactor::oracle {

struct Options {
  int edge_cap = 22;
  // Workers splitting the mask range. Results do not depend on this value.
  int workers = 1;
};

struct DeficiencyResult {
  int value = 0;
  SpanningSubgraph witness;
};

// def_H(G) together with the least minimizing subgraph.
DeficiencyResult total_deficiency(const Graph& g, const PrescriptionMap& h,
                                  const Options& options = {});

// def_H(G) == 0. Sets may contain negative values; those never match.
bool has_factor(const Graph& g, const PrescriptionMap& h,
                const Options& options = {});

struct OptimalFilter {
  // Drop F when some other optimal subgraph is a proper edge subset of F.
  bool edge_minimal = false;
  // Keep only F with d_F(v) <= MH(v) everywhere.
  bool max_bounded = false;
};

// All H-optimal subgraphs in ascending mask order, optionally filtered.
std::vector<SpanningSubgraph> enumerate_optimal(const Graph& g,
                                                const PrescriptionMap& h,
                                                const OptimalFilter& filter = {},
                                                const Options& options = {});

// Same enumeration as raw masks.
std::vector<std::uint64_t> optimal_masks(const Graph& g,
                                         const PrescriptionMap& h,
                                         const OptimalFilter& filter = {},
                                         const Options& options = {});

// I_H(x) for every vertex, collected over all optimal subgraphs.
struct SpectrumTable {
  std::vector<DegreeSet> spectra;
  std::int64_t optimal_count = 0;
  int min_deficiency = 0;
};

SpectrumTable degree_spectra(const Graph& g, const PrescriptionMap& h,
                             const Options& options = {});

// Classification by degree spectra, applied in the order C, A, B, then D.
struct LovaszPartition {
  VertexSet c;
  VertexSet a;
  VertexSet b;
  VertexSet d;
};

LovaszPartition lovasz_partition(const PrescriptionMap& h,
                                 const SpectrumTable& spectra);
LovaszPartition lovasz_partition(const Graph& g, const PrescriptionMap& h,
                                 const Options& options = {});

}  // namespace hfactor::oracle

#endif  // HFACTOR_ORACLE_H_
