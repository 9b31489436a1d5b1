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

#ifndef HFACTOR_FORMULA_H_
#define HFACTOR_FORMULA_H_

#include <functional>
#include <vector>

#include "hfactor/graph.h"
#include "hfactor/oracle.h"
#include "hfactor/prescription.h"
#include "hfactor/trails.h"

// The two deficiency formulas: the max over disjoint (S, T) and the identity
// in terms of the trail partition.
namespace hfactor::formula {

struct Options {
  // Largest n for the 3^n sweep over disjoint pairs.
  int dual_n_cap = 12;
  // Oracle options for per-component factor tests.
  oracle::Options component;
  // Negative control: shift prescriptions by one extra unit inside tau so
  // that the sweep provably disagrees with the oracle.
  bool corrupt_shift = false;
};

struct TauResult {
  int count = 0;
  // Components of G - S - T without an H_(S,T)|K-factor.
  std::vector<VertexSet> components;
};

// tau_H(S, T). Throws std::invalid_argument if S and T overlap and
// CapExceeded (naming the component) if a component is too large.
TauResult tau_count(const Graph& g, const PrescriptionMap& h,
                    const VertexSet& s, const VertexSet& t,
                    const Options& options = {});

struct DualWitness {
  VertexSet s;
  VertexSet t;
  int tau = 0;
  // tau - sum_{x in T} d_{G-S}(x) - MH(S) + mH(T)
  int value = 0;
  std::vector<VertexSet> deficient_components;
};

DualWitness evaluate_dual(const Graph& g, const PrescriptionMap& h,
                          const VertexSet& s, const VertexSet& t,
                          const Options& options = {});

int lovasz_rhs(const Graph& g, const PrescriptionMap& h, const VertexSet& s,
               const VertexSet& t, const Options& options = {});

// Calls `visit` for every ordered pair of disjoint vertex sets, enumerated by
// base-3 counting (digit v: 0 = neither, 1 = in S, 2 = in T). Factor tests
// are memoized across pairs. Throws CapExceeded when n > dual_n_cap.
void for_each_dual(const Graph& g, const PrescriptionMap& h,
                   const std::function<void(const DualWitness&)>& visit,
                   const Options& options = {});

// Maximum of the dual expression; ties go to the smallest |S| + |T|, then the
// lexicographically smallest S, then T.
DualWitness max_dual(const Graph& g, const PrescriptionMap& h,
                     const Options& options = {});

// True iff G has an H-factor according to the max over (S, T).
bool has_factor_criterion(const Graph& g, const PrescriptionMap& h,
                          const Options& options = {});

// tau + sum_{v in B} (mH(v) - d_{G-A}(v)) - MH(A) for a trail partition.
int partition_value(const Graph& g, const PrescriptionMap& h,
                   const trails::TrailPartition& partition);

}  // namespace hfactor::formula

#endif  // HFACTOR_FORMULA_H_
