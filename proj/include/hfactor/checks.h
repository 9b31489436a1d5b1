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

#ifndef HFACTOR_CHECKS_H_
#define HFACTOR_CHECKS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfactor/formula.h"
#include "hfactor/oracle.h"
#include "hfactor/solver.h"
#include "hfactor/trails.h"

// Per-instance verification of the structure theory against the oracle.
//
// "Qualifying" subgraphs are the H-optimal F with d_F <= MH everywhere and no
// optimal proper edge subset; the partition checks run on every one of them.
//
//   duality                  def_H(G) equals the max over disjoint (S, T)
//   weak_duality             every (S, T) value is at most def_H(G)
//   no_augmenting_trail      no optimal F (d_F <= MH) has an augmenting trail
//   component_deficiency     def(F; D_i) <= 1 for every D-component
//   deficient_component_edges  def(F; D_i) = 1 implies E(D_i, B) in F and
//                            E(D_i, A) disjoint from F
//   class_edges              E(B, B u C) in F, E(A, A u C) disjoint from F,
//                            E(D, C) empty
//   component_boundary       F misses at most one D_i-B edge, holds at most
//                            one D_i-A edge, and never both
//   tau_split                tau = (#deficient D_i) + (#missed B edges)
//                            + (#held A edges)
//   structural_identity      tau + sum_B (mH - d_{G-A}) - MH(A) = def_H(G)
//   identity_bridge          the (S, T) = (A, B) dual value equals the
//                            structural value
//   component_optimality     F[D_i] has deficiency 1 under H_(A,B)|D_i and
//                            that is optimal there
//   optimal_degree_bounds    every optimal R: d_R in H on C, >= MH on A,
//                            <= mH on B
//   partition_equivalence    trail partition equals the spectral partition
//   partition_degrees        d_F <= mH on B and d_F = MH on A
//   interval_rule            vertices with interval H of 2+ elements avoid D
//   matching_count           H = {1} everywhere: def_H(G) = n - 2 nu(G)
//   solver_agreement         the solver's certified deficiency is def_H(G)
namespace hfactor::verify {

enum class Verdict { kPass, kFail, kSkipped };

const char* to_string(Verdict verdict);

struct CheckResult {
  std::string check;
  Verdict verdict = Verdict::kPass;
  // Number of individual assertions evaluated.
  int cases = 0;
  // Failure description or skip reason.
  std::string detail;
  // Subgraph F under which the failure occurred, if any.
  std::optional<std::vector<EdgeId>> subgraph;
};

struct Config {
  oracle::Options oracle;
  trails::Options trail;
  formula::Options formula;
  // Empty selects every check.
  std::vector<std::string> selected;
};

const std::vector<std::string>& catalog();
bool is_known_check(std::string_view name);

std::vector<CheckResult> run_checks(const Graph& g, const PrescriptionMap& h,
                                    const Config& config = {});

// Maximum matching size by exhaustive branching over vertices, independent
// of the subgraph enumeration used by the oracle.
int matching_number(const Graph& g);

}  // namespace hfactor::verify

#endif  // HFACTOR_CHECKS_H_
