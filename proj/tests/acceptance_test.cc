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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. All comparisons are exact integers.

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hfactor/checks.h"
#include "hfactor/corpus.h"
#include "hfactor/formula.h"
#include "hfactor/oracle.h"
#include "hfactor/sweep.h"
#include "hfactor/trails.h"
#include "test_support.h"

namespace hfactor {
namespace {

constexpr int kNMax = 5;
constexpr int kPerGraph = 50;
constexpr std::uint64_t kSeed = 7;
constexpr double kDualityBudgetSeconds = 300.0;

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Totals {
  int pass = 0;
  int fail = 0;
  int skipped = 0;
  std::int64_t cases = 0;
  std::string first_failure;
};

Totals sum_checks(const sweep::SweepSummary& summary,
                  const std::vector<std::string>& names) {
  Totals t;
  for (const sweep::CheckTally& tally : summary.tallies) {
    if (std::find(names.begin(), names.end(), tally.check) == names.end()) continue;
    t.pass += tally.pass;
    t.fail += tally.fail;
    t.skipped += tally.skipped;
    t.cases += tally.cases;
  }
  for (const sweep::Failure& f : summary.failures) {
    if (std::find(names.begin(), names.end(), f.result.check) != names.end()) {
      t.first_failure = f.label + " " + f.result.check + ": " + f.result.detail;
      break;
    }
  }
  return t;
}

std::string describe(const Totals& t, int instances) {
  std::string out = std::to_string(t.pass) + "/" + std::to_string(instances) +
                    " instance-checks pass, " + std::to_string(t.cases) +
                    " assertions, " + std::to_string(t.fail) + " failed, " +
                    std::to_string(t.skipped) + " skipped";
  if (!t.first_failure.empty()) out += "; first failure " + t.first_failure;
  return out;
}

bool clean(const Totals& t) { return t.fail == 0 && t.skipped == 0; }

// Random interval prescriptions [lo, hi] with hi > lo and hi <= d + 1.
PrescriptionMap random_interval_prescription(const Graph& g, corpus::Rng& rng) {
  std::vector<DegreeSet> sets;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int top = g.degree(v) + 1;
    const int lo = static_cast<int>(rng() % top);
    const int hi = lo + 1 + static_cast<int>(rng() % (top - lo));
    sets.push_back(interval_set(lo, hi));
  }
  return PrescriptionMap(std::move(sets));
}

bool all_wide_intervals(const PrescriptionMap& h) {
  for (Vertex v = 0; v < h.size(); ++v) {
    if (!is_interval(h.at(v)) || h.at(v).size() < 2) return false;
  }
  return true;
}

const std::vector<std::string> kStructureChecks = {
    "structural_identity",   "partition_equivalence", "no_augmenting_trail",
    "component_deficiency",  "deficient_component_edges", "class_edges",
    "component_boundary",    "tau_split",             "identity_bridge",
    "component_optimality",  "optimal_degree_bounds", "partition_degrees"};

const std::vector<std::string> kStructuralSuite = {
    "no_augmenting_trail", "component_deficiency", "deficient_component_edges",
    "class_edges",         "component_boundary",   "tau_split",
    "identity_bridge",     "component_optimality", "optimal_degree_bounds",
    "partition_degrees"};

// Check catalog results over one exhaustive corpus.
struct CorpusRun {
  std::string name;
  std::vector<corpus::Instance> instances;
  sweep::SweepSummary summary;
  double duality_seconds = 0;

  int size() const { return static_cast<int>(instances.size()); }
};

CorpusRun sweep_corpus(const std::string& name, bool up_to_isomorphism) {
  CorpusRun run{name, corpus::exhaustive_corpus(kNMax, kPerGraph, kSeed, up_to_isomorphism)};
  sweep::SweepConfig config;
  config.checks.selected = {"duality", "weak_duality"};
  const auto start = std::chrono::steady_clock::now();
  sweep::SweepSummary dual = sweep::run_sweep(run.instances, config);
  run.duality_seconds = seconds_since(start);
  config.checks.selected = kStructureChecks;
  sweep::SweepSummary structure = sweep::run_sweep(run.instances, config);
  // Merge: the two selections are disjoint.
  run.summary = std::move(dual);
  for (sweep::CheckTally& t : structure.tallies) run.summary.tallies.push_back(std::move(t));
  for (sweep::Failure& f : structure.failures) run.summary.failures.push_back(std::move(f));
  return run;
}

// Requires every named check to pass on every instance of every corpus.
void report_checks(int id, const std::string& name, const std::vector<CorpusRun>& runs,
                   const std::vector<std::string>& checks, const std::string& extra = "",
                   bool extra_ok = true) {
  bool pass = extra_ok;
  std::string detail;
  for (const CorpusRun& run : runs) {
    const Totals t = sum_checks(run.summary, checks);
    const int expected = run.size() * static_cast<int>(checks.size());
    pass = pass && clean(t) && t.pass == expected && t.cases > 0;
    if (!detail.empty()) detail += " | ";
    detail += run.name + ": " + describe(t, expected);
  }
  if (checks.size() > 1) detail = std::to_string(checks.size()) + " checks; " + detail;
  report(id, name, pass, detail + extra);
}

int run() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CorpusRun> runs;
  runs.push_back(sweep_corpus("up-to-isomorphism", true));
  runs.push_back(sweep_corpus("labeled", false));
  const std::vector<corpus::Instance>& corpus = runs.front().instances;
  const int instances = runs.front().size();
  int iso_graphs = 0;
  for (int n = 1; n <= kNMax; ++n) iso_graphs += corpus::connected_graphs(n, true).size();
  std::printf("corpus: connected graphs with n <= %d, %d prescriptions each, seed %llu; "
              "up-to-isomorphism %d graphs -> %d instances; labeled -> %d instances\n",
              kNMax, kPerGraph, static_cast<unsigned long long>(kSeed), iso_graphs,
              instances, runs.back().size());

  // 1. Duality, plus an independent brute-force recomputation of both sides
  // on the up-to-isomorphism corpus.
  {
    int mismatch = 0;
    for (const corpus::Instance& in : corpus) {
      const int brute = testing::naive_total_deficiency(in.graph, in.prescription.sets());
      const int dual = testing::naive_max_dual(in.graph, in.prescription.sets());
      if (brute != dual || brute != oracle::total_deficiency(in.graph, in.prescription).value) {
        ++mismatch;
      }
    }
    bool in_budget = true;
    std::string extra = "; brute-force mismatches " + std::to_string(mismatch);
    for (const CorpusRun& run : runs) {
      char timing[96];
      std::snprintf(timing, sizeof timing, "; %s sweep %.2fs (budget %.0fs)", run.name.c_str(),
                    run.duality_seconds, kDualityBudgetSeconds);
      extra += timing;
      in_budget = in_budget && run.duality_seconds < kDualityBudgetSeconds;
    }
    report_checks(1, "duality", runs, {"duality"}, extra, mismatch == 0 && in_budget);
  }

  // 2. Weak duality over every disjoint (S,T).
  report_checks(2, "weak_duality", runs, {"weak_duality"});
  // 3. Structural identity on every qualifying F.
  report_checks(3, "structural_identity", runs, {"structural_identity"});
  // 4. Trail partition equals the spectral partition on every qualifying F.
  report_checks(4, "partition_equivalence", runs, {"partition_equivalence"});
  // 5. Per-F structural checks and degree bounds over all optimal subgraphs.
  report_checks(5, "structural_suite", runs, kStructuralSuite);

  // 6. H = {1}: deficiency equals n - 2 * matching number.
  {
    struct Named {
      const char* name;
      Graph graph;
      int expected;
    };
    const std::vector<Named> named = {{"K3", complete_graph(3), 1},
                                      {"K4", complete_graph(4), 0},
                                      {"C5", cycle_graph(5), 1},
                                      {"K1,3", star_graph(3), 2},
                                      {"Petersen", petersen_graph(), 0}};
    int checked = 0;
    std::string bad;
    auto check = [&](const std::string& name, const Graph& g, std::optional<int> expected) {
      const int n = g.vertex_count();
      const int def = oracle::total_deficiency(g, testing::ones(n)).value;
      const int brute = n - 2 * testing::naive_matching_number(g);
      ++checked;
      if (def != brute || (expected && def != *expected)) {
        if (bad.empty()) {
          bad = name + ": deficiency " + std::to_string(def) + ", n-2nu " +
                std::to_string(brute);
        }
      }
    };
    int index = 0;
    for (int n = 1; n <= kNMax; ++n) {
      for (const Graph& g : corpus::connected_graphs(n, true)) {
        check("corpus graph " + std::to_string(index++), g, std::nullopt);
      }
    }
    for (const Named& x : named) check(x.name, x.graph, x.expected);
    report(6, "matching_specialisation", bad.empty(),
           std::to_string(checked) + " graphs (" + std::to_string(index) +
               " corpus + K3, K4, C5, K1,3, Petersen)" + (bad.empty() ? "" : "; " + bad));
  }

  // 7. Solver agreement on random instances.
  {
    const std::vector<corpus::Instance> random = corpus::random_corpus(200, 7, 16, kSeed);
    int agree = 0;
    int stalls = 0;
    int other = 0;
    std::string first;
    for (const corpus::Instance& in : random) {
      const solver::SolveOutcome out = solver::optimize(in.graph, in.prescription);
      const int optimum = oracle::total_deficiency(in.graph, in.prescription).value;
      if (out.certification.certified && out.deficiency == optimum) {
        ++agree;
        continue;
      }
      (out.stalled ? stalls : other)++;
      if (first.empty()) {
        first = in.label + ": solver " + std::to_string(out.deficiency) + ", oracle " +
                std::to_string(optimum);
      }
    }
    report(7, "solver_agreement", agree == static_cast<int>(random.size()),
           std::to_string(agree) + "/" + std::to_string(random.size()) +
               " certified-equal (n <= 7, m <= 16, seed " + std::to_string(kSeed) +
               "), stalls " + std::to_string(stalls) + ", other " + std::to_string(other) +
               (first.empty() ? "" : "; first " + first));
  }

  // 8. All-interval prescriptions (each with >= 2 elements) give D = {}.
  {
    corpus::Rng rng(kSeed);
    std::vector<corpus::Instance> cases;
    for (const corpus::Instance& in : corpus) {
      if (all_wide_intervals(in.prescription)) cases.push_back(in);
    }
    const int from_main = static_cast<int>(cases.size());
    for (int n = 2; n <= kNMax; ++n) {
      for (const Graph& g : corpus::connected_graphs(n, true)) {
        for (int j = 0; j < kPerGraph; ++j) {
          cases.push_back({"interval", g, random_interval_prescription(g, rng)});
        }
      }
    }
    int partitions = 0;
    int violations = 0;
    for (const corpus::Instance& in : cases) {
      for (std::uint64_t m : oracle::optimal_masks(in.graph, in.prescription, {true, true})) {
        const SpanningSubgraph f = SpanningSubgraph::from_mask(in.graph, m);
        ++partitions;
        if (!trails::trail_partition(f, in.prescription).d.empty()) ++violations;
      }
    }
    report(8, "interval_rule", violations == 0 && partitions > 0,
           std::to_string(cases.size()) + " all-interval instances (" +
               std::to_string(from_main) + " from the main corpus), " +
               std::to_string(partitions) + " partitions, " + std::to_string(violations) +
               " with D nonempty");
  }

  // 9. Negative control: corrupting the shift inside tau must break duality.
  {
    sweep::SweepConfig mutated;
    mutated.checks.selected = {"duality"};
    mutated.checks.formula.corrupt_shift = true;
    const sweep::SweepSummary s = sweep::run_sweep(corpus, mutated);
    const Totals t = sum_checks(s, {"duality"});
    report(9, "negative_control", t.fail > 0 && !s.ok(false),
           "mutated duality check fails on " + std::to_string(t.fail) + "/" +
               std::to_string(instances) + " instances");
  }

  std::printf("%s: %d criteria failed, %.2fs total\n", failures ? "FAIL" : "PASS", failures,
              seconds_since(start));
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace hfactor

int main() { return hfactor::run(); }
