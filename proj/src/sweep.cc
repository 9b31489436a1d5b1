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

#include "hfactor/sweep.h"

#include <algorithm>
#include <atomic>
#include <thread>

#include "hfactor/instance_io.h"
#include "hfactor/report.h"

namespace hfactor::sweep {

int SweepSummary::skip_count() const {
  int total = 0;
  for (const CheckTally& t : tallies) total += t.skipped;
  return total;
}

std::vector<corpus::Instance> build_corpus(const SweepConfig& config) {
  if (config.mode == Mode::kRandom) {
    return corpus::random_corpus(config.random_count, config.n_max,
                                 config.m_max, config.seed);
  }
  return corpus::exhaustive_corpus(config.n_max,
                                   config.prescriptions_per_graph,
                                   config.seed, !config.labeled);
}

SweepSummary run_sweep(const SweepConfig& config) {
  return run_sweep(build_corpus(config), config);
}

SweepSummary run_sweep(const std::vector<corpus::Instance>& instances,
                       const SweepConfig& config) {
  std::vector<std::vector<verify::CheckResult>> results(instances.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      results[i] = verify::run_checks(instances[i].graph,
                                      instances[i].prescription, config.checks);
    }
  };
  const int jobs = std::max(config.jobs, 1);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(work);
  }

  SweepSummary summary;
  summary.instances = static_cast<int>(instances.size());
  if (instances.empty()) summary.warnings.push_back("empty corpus");
  for (const std::string& name : verify::catalog()) {
    if (config.checks.selected.empty() ||
        std::find(config.checks.selected.begin(), config.checks.selected.end(),
                  name) != config.checks.selected.end()) {
      summary.tallies.push_back({name});
    }
  }
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (const verify::CheckResult& r : results[i]) {
      auto it = std::find_if(summary.tallies.begin(), summary.tallies.end(),
                             [&](const CheckTally& t) { return t.check == r.check; });
      it->cases += r.cases;
      switch (r.verdict) {
        case verify::Verdict::kPass:
          ++it->pass;
          break;
        case verify::Verdict::kFail:
          ++it->fail;
          summary.failures.push_back(
              {instances[i].label, r, make_repro(instances[i], r, config.checks)});
          break;
        case verify::Verdict::kSkipped:
          ++it->skipped;
          break;
      }
    }
  }
  return summary;
}

nlohmann::ordered_json summary_to_json(const SweepSummary& summary,
                                       const SweepConfig& config) {
  nlohmann::ordered_json out;
  nlohmann::ordered_json cfg;
  cfg["mode"] = config.mode == Mode::kRandom ? "random" : "exhaustive";
  cfg["enumeration"] = config.mode == Mode::kRandom
                           ? "random connected G(n,1/2)"
                           : (config.labeled ? "labeled" : "up-to-isomorphism");
  cfg["n_max"] = config.n_max;
  if (config.mode == Mode::kRandom) {
    cfg["m_max"] = config.m_max;
    cfg["count"] = config.random_count;
  } else {
    cfg["prescriptions_per_graph"] = config.prescriptions_per_graph;
  }
  cfg["seed"] = config.seed;
  cfg["oracle_edge_cap"] = config.checks.oracle.edge_cap;
  cfg["trail_edge_cap"] = config.checks.trail.edge_cap;
  cfg["dual_n_cap"] = config.checks.formula.dual_n_cap;
  cfg["corrupt_shift"] = config.checks.formula.corrupt_shift;
  cfg["strict"] = config.strict;
  out["config"] = std::move(cfg);
  out["instances"] = summary.instances;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckTally& t : summary.tallies) {
    nlohmann::ordered_json row;
    row["check"] = t.check;
    row["pass"] = t.pass;
    row["fail"] = t.fail;
    row["skipped"] = t.skipped;
    row["cases"] = t.cases;
    checks.push_back(std::move(row));
  }
  out["checks"] = std::move(checks);
  out["failures"] = summary.failure_count();
  out["skipped"] = summary.skip_count();
  out["warnings"] = summary.warnings;
  out["ok"] = summary.ok(config.strict);
  return out;
}

nlohmann::ordered_json make_repro(const corpus::Instance& instance,
                                  const verify::CheckResult& result,
                                  const verify::Config& config) {
  nlohmann::ordered_json out;
  out["check"] = result.check;
  out["label"] = instance.label;
  out["detail"] = result.detail;
  out["subgraph"] = result.subgraph ? nlohmann::ordered_json(*result.subgraph)
                                    : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json options;
  options["oracle_edge_cap"] = config.oracle.edge_cap;
  options["trail_edge_cap"] = config.trail.edge_cap;
  options["dual_n_cap"] = config.formula.dual_n_cap;
  options["corrupt_shift"] = config.formula.corrupt_shift;
  out["options"] = std::move(options);
  out["instance"] = instance_to_json(instance.graph, instance.prescription);
  return out;
}

verify::CheckResult replay(const nlohmann::json& repro) {
  const Instance instance = parse_instance(repro.at("instance"));
  verify::Config config;
  const nlohmann::json& options = repro.at("options");
  config.oracle.edge_cap = options.at("oracle_edge_cap").get<int>();
  config.formula.component.edge_cap = config.oracle.edge_cap;
  config.trail.edge_cap = options.at("trail_edge_cap").get<int>();
  config.formula.dual_n_cap = options.at("dual_n_cap").get<int>();
  config.formula.corrupt_shift = options.at("corrupt_shift").get<bool>();
  const std::string check = repro.at("check").get<std::string>();
  if (!verify::is_known_check(check)) {
    throw std::invalid_argument("unknown check \"" + check + "\"");
  }
  config.selected = {check};
  std::vector<verify::CheckResult> results =
      verify::run_checks(instance.graph, instance.prescription, config);
  return results.front();
}

}  // namespace hfactor::sweep
