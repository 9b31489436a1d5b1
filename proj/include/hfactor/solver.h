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

#ifndef HFACTOR_SOLVER_H_
#define HFACTOR_SOLVER_H_

#include <optional>
#include <string>
#include <vector>

#include "hfactor/formula.h"
#include "hfactor/oracle.h"
#include "hfactor/trails.h"

// Builds an H-optimal subgraph: greedy seeding, changeable-trail
// augmentation, pruning to an edge-minimal support, then an independent
// optimality certificate. Trail exhaustion alone is never taken as proof of
// optimality.
namespace hfactor::solver {

struct Options {
  trails::Options trail;
  oracle::Options oracle;
  formula::Options formula;
};

enum class CertificateSource { kNone, kDual, kOracle };

const char* to_string(CertificateSource source);

struct Certification {
  bool certified = false;
  CertificateSource source = CertificateSource::kNone;
  int deficiency = 0;
  // Lower bound from the certificate (equal to def_H(G) when present).
  std::optional<int> bound;
  std::optional<formula::DualWitness> dual;
  std::string note;
};

enum class SolvePath { kTrails, kOracle, kGreedyOnly };

const char* to_string(SolvePath path);

struct SolveOutcome {
  SpanningSubgraph subgraph;
  int deficiency = 0;
  Certification certification;
  std::vector<trails::ChangeableTrail> augmentation_log;
  // Deficiency after each logged augmentation.
  std::vector<int> deficiency_trace;
  // Edges dropped to restore d_F <= MH after an augmentation.
  int clamped_edges = 0;
  SolvePath path = SolvePath::kTrails;
  // Augmentation ran out of trails above the certified optimum.
  bool stalled = false;
};

// Greedy seed: passes over edges in ascending id, adding an edge when that
// strictly lowers def_H and keeps both endpoints at or below MH.
SpanningSubgraph initial_subgraph(const Graph& g, const PrescriptionMap& h);

// Removes edges in ascending id order while a single removal leaves def_H
// unchanged, until no such edge remains.
SpanningSubgraph prune_to_minimal(const PrescriptionMap& h,
                                  const SpanningSubgraph& f);

// Compares def_H[F] with the dual maximum, or with the oracle when the dual
// sweep is over its cap. A gap is reported, never accepted.
Certification certify(const Graph& g, const PrescriptionMap& h,
                      const SpanningSubgraph& f, const Options& options = {});

SolveOutcome optimize(const Graph& g, const PrescriptionMap& h,
                      const Options& options = {});

}  // namespace hfactor::solver

#endif  // HFACTOR_SOLVER_H_
