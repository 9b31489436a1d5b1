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

#include "hfactor/cli.h"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hfactor/instance_io.h"
#include "hfactor/report.h"
#include "hfactor/sweep.h"

namespace hfactor::cli {
namespace {

using report::Json;

struct Caps {
  int oracle_edges = 22;
  int trail_edges = 16;
  int dual_vertices = 12;
};

struct Flags {
  Caps caps;
  bool timing = false;
  std::string instance_path;

  // verify
  int n_max = 5;
  int m_max = 16;
  int per_graph = 50;
  int count = 200;
  std::uint64_t seed = 7;
  std::string mode = "exhaustive";
  std::string enumeration = "labeled";
  std::vector<std::string> checks;
  bool strict = false;
  bool mutate_shift = false;
  std::string replay;
  std::string repro_dir = "hfactor-repro";
  int jobs = 1;
};

solver::Options solver_options(const Caps& caps) {
  solver::Options o;
  o.oracle.edge_cap = caps.oracle_edges;
  o.trail.edge_cap = caps.trail_edges;
  o.formula.dual_n_cap = caps.dual_vertices;
  o.formula.component.edge_cap = caps.oracle_edges;
  return o;
}

// Wall-clock per phase; only emitted with --timing so reports stay
// byte-identical by default.
class PhaseTimer {
 public:
  template <typename Fn>
  auto run(const std::string& phase, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    struct Record {
      PhaseTimer* self;
      std::string phase;
      std::chrono::steady_clock::time_point start;
      ~Record() {
        const auto stop = std::chrono::steady_clock::now();
        self->phases_[phase] =
            std::chrono::duration<double, std::milli>(stop - start).count();
      }
    } record{this, phase, start};
    return fn();
  }

  void attach(Json& doc, bool enabled) const {
    if (enabled) doc["timing_ms"] = phases_;
  }

 private:
  Json phases_ = Json::object();
};

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

int cmd_solve(const Instance& in, const Flags& flags, std::ostream& out) {
  PhaseTimer timer;
  const solver::SolveOutcome outcome = timer.run("solve", [&] {
    return solver::optimize(in.graph, in.prescription, solver_options(flags.caps));
  });
  Json doc;
  doc["command"] = "solve";
  doc["instance"] = report::instance_digest(in.graph, in.prescription);
  doc["outcome"] = report::to_json(outcome);
  timer.attach(doc, flags.timing);
  emit(out, doc);
  if (outcome.certification.certified) return kExitOk;
  if (outcome.certification.source == solver::CertificateSource::kNone) {
    return kExitCapRefused;
  }
  return kExitCheckFailed;
}

int cmd_partition(const Instance& in, const Flags& flags, std::ostream& out) {
  PhaseTimer timer;
  const Graph& g = in.graph;
  const PrescriptionMap& h = in.prescription;
  const solver::Options options = solver_options(flags.caps);

  std::optional<SpanningSubgraph> f;
  std::optional<oracle::LovaszPartition> spectral;
  std::string source = "oracle";
  try {
    timer.run("oracle", [&] {
      auto masks = oracle::optimal_masks(g, h, {true, true}, options.oracle);
      f = SpanningSubgraph::from_mask(g, masks.front());
      spectral = oracle::lovasz_partition(g, h, options.oracle);
      return 0;
    });
  } catch (const CapExceeded&) {
    source = "solver";
    const solver::SolveOutcome outcome = timer.run(
        "solve", [&] { return solver::optimize(g, h, options); });
    if (!outcome.certification.certified) {
      throw CapExceeded("partition: no certified optimal subgraph",
                        flags.caps.oracle_edges, g.edge_count());
    }
    f = outcome.subgraph;
  }
  const trails::TrailPartition p = timer.run(
      "trails", [&] { return trails::trail_partition(*f, h, options.trail); });

  Json doc;
  doc["command"] = "partition";
  doc["instance"] = report::instance_digest(g, h);
  doc["subgraph_source"] = source;
  doc["subgraph"] = report::to_json(*f);
  doc["deficiency"] = deficiency_of(*f, h);
  doc["trail_partition"] = report::to_json(p);
  bool agree = true;
  if (spectral) {
    doc["spectral_partition"] = report::to_json(*spectral);
    agree = p.a == spectral->a && p.b == spectral->b && p.c == spectral->c &&
            p.d == spectral->d;
    doc["partitions_agree"] = agree;
  } else {
    doc["spectral_partition"] = nullptr;
  }
  timer.attach(doc, flags.timing);
  emit(out, doc);
  return agree ? kExitOk : kExitCheckFailed;
}

int cmd_formula(const Instance& in, const Flags& flags, std::ostream& out) {
  PhaseTimer timer;
  const formula::DualWitness w = timer.run("dual_sweep", [&] {
    return formula::max_dual(in.graph, in.prescription,
                             solver_options(flags.caps).formula);
  });
  Json doc;
  doc["command"] = "formula";
  doc["instance"] = report::instance_digest(in.graph, in.prescription);
  doc["max_dual"] = report::to_json(w);
  doc["verdict"] = w.value <= 0 ? "H-factor exists" : "no H-factor";
  doc["deficiency"] = std::max(w.value, 0);
  doc["certificate"] = w.value > 0 ? report::to_json(w) : Json(nullptr);
  timer.attach(doc, flags.timing);
  emit(out, doc);
  return kExitOk;
}

int cmd_oracle(const Instance& in, const Flags& flags, std::ostream& out) {
  PhaseTimer timer;
  const oracle::Options options = solver_options(flags.caps).oracle;
  const oracle::DeficiencyResult best = timer.run("enumerate", [&] {
    return oracle::total_deficiency(in.graph, in.prescription, options);
  });
  const oracle::SpectrumTable spectra = timer.run("spectra", [&] {
    return oracle::degree_spectra(in.graph, in.prescription, options);
  });
  Json doc;
  doc["command"] = "oracle";
  doc["instance"] = report::instance_digest(in.graph, in.prescription);
  doc["deficiency"] = best.value;
  doc["has_factor"] = best.value == 0;
  doc["witness"] = report::to_json(best.witness);
  doc["spectra"] = report::to_json(spectra);
  doc["spectral_partition"] =
      report::to_json(oracle::lovasz_partition(in.prescription, spectra));
  timer.attach(doc, flags.timing);
  emit(out, doc);
  return kExitOk;
}

int cmd_verify(const Flags& flags, std::ostream& out, std::ostream& err) {
  if (!flags.replay.empty()) {
    std::ifstream in(flags.replay);
    if (!in) {
      err << "error: cannot open " << flags.replay << "\n";
      return kExitUsage;
    }
    const nlohmann::json repro = nlohmann::json::parse(in);
    const verify::CheckResult result = sweep::replay(repro);
    Json doc;
    doc["command"] = "verify";
    doc["replay"] = flags.replay;
    doc["result"] = report::to_json(result);
    doc["reproduced"] = result.verdict == verify::Verdict::kFail;
    emit(out, doc);
    return result.verdict == verify::Verdict::kFail ? kExitCheckFailed : kExitOk;
  }

  sweep::SweepConfig config;
  config.mode = flags.mode == "random" ? sweep::Mode::kRandom : sweep::Mode::kExhaustive;
  config.n_max = flags.n_max;
  config.m_max = flags.m_max;
  config.prescriptions_per_graph = flags.per_graph;
  config.random_count = flags.count;
  config.seed = flags.seed;
  config.labeled = flags.enumeration == "labeled";
  const solver::Options options = solver_options(flags.caps);
  config.checks.oracle = options.oracle;
  config.checks.trail = options.trail;
  config.checks.formula = options.formula;
  config.checks.formula.corrupt_shift = flags.mutate_shift;
  config.checks.selected = flags.checks;
  config.strict = flags.strict;
  config.jobs = flags.jobs;
  for (const std::string& name : flags.checks) {
    if (!verify::is_known_check(name)) {
      err << "error: unknown check \"" << name << "\"\n";
      return kExitUsage;
    }
  }

  PhaseTimer timer;
  const sweep::SweepSummary summary =
      timer.run("sweep", [&] { return sweep::run_sweep(config); });
  Json doc;
  doc["command"] = "verify";
  Json body = sweep::summary_to_json(summary, config);
  for (auto& [key, value] : body.items()) doc[key] = value;
  Json files = Json::array();
  if (!summary.failures.empty()) {
    std::filesystem::create_directories(flags.repro_dir);
    for (std::size_t i = 0; i < summary.failures.size(); ++i) {
      const sweep::Failure& failure = summary.failures[i];
      const std::filesystem::path path =
          std::filesystem::path(flags.repro_dir) /
          ("repro-" + std::to_string(i) + "-" + failure.result.check + ".json");
      std::ofstream file(path);
      file << failure.repro.dump(2) << "\n";
      files.push_back(path.string());
    }
  }
  doc["reproductions"] = std::move(files);
  Json details = Json::array();
  for (std::size_t i = 0; i < summary.failures.size() && i < 20; ++i) {
    Json row;
    row["label"] = summary.failures[i].label;
    row["check"] = summary.failures[i].result.check;
    row["detail"] = summary.failures[i].result.detail;
    details.push_back(std::move(row));
  }
  doc["failure_details"] = std::move(details);
  timer.attach(doc, flags.timing);
  for (const std::string& w : summary.warnings) err << "warning: " << w << "\n";
  emit(out, doc);
  return summary.ok(config.strict) ? kExitOk : kExitCheckFailed;
}

void add_caps(CLI::App* app, Flags& flags) {
  app->add_option("--oracle-edge-cap", flags.caps.oracle_edges,
                  "Largest edge count for exhaustive enumeration")
      ->capture_default_str();
  app->add_option("--trail-edge-cap", flags.caps.trail_edges,
                  "Largest edge count for changeable-trail search")
      ->capture_default_str();
  app->add_option("--dual-n-cap", flags.caps.dual_vertices,
                  "Largest vertex count for the (S,T) sweep")
      ->capture_default_str();
  app->add_flag("--timing", flags.timing, "Add per-phase wall-clock times");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"General factor (H-factor) toolkit"};
  app.name("hfactor");
  app.require_subcommand(1);
  Flags flags;

  struct Command {
    const char* name;
    const char* help;
    int (*fn)(const Instance&, const Flags&, std::ostream&);
  };
  const Command commands[] = {
      {"solve", "Compute a certified H-optimal subgraph", cmd_solve},
      {"partition", "Compute the canonical (A,B,C,D) partition", cmd_partition},
      {"formula", "Evaluate the max over disjoint (S,T)", cmd_formula},
      {"oracle", "Exhaustive deficiency, spectra and partition", cmd_oracle},
  };
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("instance", flags.instance_path, "Instance JSON file")
        ->required();
    add_caps(sub, flags);
  }

  CLI::App* verify = app.add_subcommand("verify", "Run the check catalog over a corpus");
  add_caps(verify, flags);
  verify->add_option("--mode", flags.mode, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}))
      ->capture_default_str();
  verify->add_option("--enumeration", flags.enumeration,
                     "labeled or isomorphism (exhaustive mode)")
      ->check(CLI::IsMember({"labeled", "isomorphism"}))
      ->capture_default_str();
  verify->add_option("--n-max", flags.n_max, "Largest vertex count")->capture_default_str();
  verify->add_option("--m-max", flags.m_max, "Largest edge count (random mode)")
      ->capture_default_str();
  verify->add_option("--count", flags.count, "Instances in random mode")->capture_default_str();
  verify->add_option("--prescriptions-per-graph", flags.per_graph,
                     "Random prescriptions per graph (exhaustive mode)")
      ->capture_default_str();
  verify->add_option("--seed", flags.seed, "Corpus seed")->capture_default_str();
  verify->add_option("--checks", flags.checks, "Comma-separated check names")
      ->delimiter(',');
  verify->add_flag("--strict", flags.strict, "Treat cap skips as failures");
  verify->add_flag("--mutate-shift", flags.mutate_shift,
                   "Negative control: corrupt the shift inside tau");
  verify->add_option("--replay", flags.replay, "Rerun a reproduction file");
  verify->add_option("--repro-dir", flags.repro_dir,
                     "Directory for failure reproductions")
      ->capture_default_str();
  verify->add_option("--jobs", flags.jobs, "Worker threads")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(flags, out, err);
    for (const Command& c : commands) {
      if (app.got_subcommand(c.name)) {
        const Instance instance = load_instance(flags.instance_path);
        return c.fn(instance, flags, out);
      }
    }
  } catch (const InstanceError& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapRefused;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace hfactor::cli
