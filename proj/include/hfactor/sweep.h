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

#ifndef HFACTOR_SWEEP_H_
#define HFACTOR_SWEEP_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hfactor/checks.h"
#include "hfactor/corpus.h"
#include "json.hpp"

// Corpus-wide verification: run the check catalog on every instance, tally
// verdicts and emit a standalone reproduction for each failure.
namespace hfactor::sweep {

enum class Mode { kExhaustive, kRandom };

struct SweepConfig {
  Mode mode = Mode::kExhaustive;
  int n_max = 5;
  int m_max = 16;
  int prescriptions_per_graph = 50;
  // Instance count in random mode.
  int random_count = 200;
  std::uint64_t seed = 7;
  // Exhaustive mode: every labeled graph, or one per isomorphism class.
  bool labeled = true;
  verify::Config checks;
  bool strict = false;
  int jobs = 1;
};

struct CheckTally {
  std::string check;
  int pass = 0;
  int fail = 0;
  int skipped = 0;
  std::int64_t cases = 0;
};

struct Failure {
  std::string label;
  verify::CheckResult result;
  nlohmann::ordered_json repro;
};

struct SweepSummary {
  int instances = 0;
  std::vector<CheckTally> tallies;  // catalog order
  std::vector<Failure> failures;
  std::vector<std::string> warnings;

  int failure_count() const { return static_cast<int>(failures.size()); }
  int skip_count() const;
  bool ok(bool strict) const {
    return failures.empty() && (!strict || skip_count() == 0);
  }
};

std::vector<corpus::Instance> build_corpus(const SweepConfig& config);

SweepSummary run_sweep(const SweepConfig& config);
SweepSummary run_sweep(const std::vector<corpus::Instance>& instances,
                       const SweepConfig& config);

nlohmann::ordered_json summary_to_json(const SweepSummary& summary,
                                       const SweepConfig& config);

// Self-contained failure record: the instance, the failing subgraph, the
// violated check and the options needed to rerun it.
nlohmann::ordered_json make_repro(const corpus::Instance& instance,
                                  const verify::CheckResult& result,
                                  const verify::Config& config);

// Reruns the recorded check on the recorded instance.
verify::CheckResult replay(const nlohmann::json& repro);

}  // namespace hfactor::sweep

#endif  // HFACTOR_SWEEP_H_
