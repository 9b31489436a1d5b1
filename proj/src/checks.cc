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

#include "hfactor/checks.h"

#include <algorithm>
#include <map>
#include <sstream>

namespace hfactor::verify {

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkipped:
      break;
  }
  return "skipped";
}

const std::vector<std::string>& catalog() {
  static const std::vector<std::string> names = {
      "duality",
      "weak_duality",
      "no_augmenting_trail",
      "component_deficiency",
      "deficient_component_edges",
      "class_edges",
      "component_boundary",
      "tau_split",
      "structural_identity",
      "identity_bridge",
      "component_optimality",
      "optimal_degree_bounds",
      "partition_equivalence",
      "partition_degrees",
      "interval_rule",
      "matching_count",
      "solver_agreement",
  };
  return names;
}

bool is_known_check(std::string_view name) {
  const auto& names = catalog();
  return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

std::string set_text(const VertexSet& s) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << "}";
  return out.str();
}

class Recorder {
 public:
  explicit Recorder(const Config& config) {
    for (const std::string& name : catalog()) {
      if (config.selected.empty() ||
          std::find(config.selected.begin(), config.selected.end(), name) !=
              config.selected.end()) {
        CheckResult r;
        r.check = name;
        results_[name] = r;
      }
    }
  }

  bool wants(const std::string& name) const { return results_.count(name) > 0; }

  template <typename Detail>
  void expect(const std::string& name, bool ok, Detail&& detail,
              const SpanningSubgraph* f = nullptr) {
    auto it = results_.find(name);
    if (it == results_.end()) return;
    CheckResult& r = it->second;
    ++r.cases;
    if (ok || r.verdict == Verdict::kFail) return;
    r.verdict = Verdict::kFail;
    r.detail = detail();
    if (f != nullptr) r.subgraph = f->edge_ids();
  }

  void skip(const std::string& name, const std::string& reason) {
    auto it = results_.find(name);
    if (it == results_.end() || it->second.verdict == Verdict::kFail) return;
    it->second.verdict = Verdict::kSkipped;
    it->second.detail = reason;
  }

  void skip_all(const std::vector<std::string>& names,
                const std::string& reason) {
    for (const std::string& name : names) skip(name, reason);
  }

  std::vector<CheckResult> take() {
    std::vector<CheckResult> out;
    for (const std::string& name : catalog()) {
      auto it = results_.find(name);
      if (it != results_.end()) out.push_back(std::move(it->second));
    }
    return out;
  }

 private:
  std::map<std::string, CheckResult> results_;
};

const std::vector<std::string> kPartitionChecks = {
    "component_deficiency", "deficient_component_edges", "class_edges",
    "component_boundary",   "tau_split",                 "structural_identity",
    "identity_bridge",      "component_optimality",      "optimal_degree_bounds",
    "partition_equivalence", "partition_degrees",        "interval_rule",
};

struct BoundaryCounts {
  int missed_b = 0;  // |E(D_i, B) - E(F)|
  int held_a = 0;    // |E(D_i, A) n E(F)|
};

BoundaryCounts boundary(const Graph& g, const SpanningSubgraph& f,
                        const VertexSet& comp, const trails::TrailPartition& p) {
  BoundaryCounts counts;
  for (EdgeId id : cross_edges(g, comp, p.b)) counts.missed_b += f.contains(id) ? 0 : 1;
  for (EdgeId id : cross_edges(g, comp, p.a)) counts.held_a += f.contains(id) ? 1 : 0;
  return counts;
}

void check_partition(const Graph& g, const PrescriptionMap& h,
                     const SpanningSubgraph& f, int optimum,
                     const trails::TrailPartition& p,
                     const oracle::LovaszPartition& spectral,
                     const std::vector<std::uint64_t>& all_optimal,
                     const Config& config, Recorder& rec) {
  const std::string where = " at F=" + set_text(f.edge_ids());

  int tau1 = 0;
  int tau_a = 0;
  int tau_b = 0;
  for (const VertexSet& comp : p.d_components) {
    const int def = deficiency_of(f, h, comp);
    rec.expect("component_deficiency", def <= 1, [&] {
      return "def(F; " + set_text(comp) + ") = " + std::to_string(def) + where;
    }, &f);

    const BoundaryCounts counts = boundary(g, f, comp, p);
    if (def == 1) {
      rec.expect("deficient_component_edges",
                 counts.missed_b == 0 && counts.held_a == 0, [&] {
                   return "deficient component " + set_text(comp) + " misses " +
                          std::to_string(counts.missed_b) + " B-edges, holds " +
                          std::to_string(counts.held_a) + " A-edges" + where;
                 }, &f);
    }
    rec.expect("component_boundary",
               counts.missed_b <= 1 && counts.held_a <= 1 &&
                   !(counts.missed_b == 1 && counts.held_a == 1),
               [&] {
                 return "component " + set_text(comp) + " misses " +
                        std::to_string(counts.missed_b) + " B-edges, holds " +
                        std::to_string(counts.held_a) + " A-edges" + where;
               }, &f);
    tau1 += def == 1 ? 1 : 0;
    tau_b += counts.missed_b == 1 ? 1 : 0;
    tau_a += counts.held_a == 1 ? 1 : 0;

    if (rec.wants("component_optimality")) {
      const ShiftedPrescription shifted = shift_prescription(g, h, p.a, p.b);
      const PrescriptionMap local_h =
          restrict_to_component(g, shifted, p.a, p.b, comp);
      const InducedSubgraph sub = induced_subgraph(g, comp);
      std::vector<EdgeId> local_edges;
      for (EdgeId local = 0; local < sub.graph.edge_count(); ++local) {
        if (f.contains(sub.host_edges[local])) local_edges.push_back(local);
      }
      const SpanningSubgraph f_i(sub.graph, local_edges);
      const int local_def = deficiency_of(f_i, local_h);
      const int local_opt =
          oracle::total_deficiency(sub.graph, local_h, config.oracle).value;
      rec.expect("component_optimality", local_def == 1 && local_opt == 1, [&] {
        return "component " + set_text(comp) + ": F_i deficiency " +
               std::to_string(local_def) + ", optimum " +
               std::to_string(local_opt) + where;
      }, &f);
    }
  }
  rec.expect("tau_split", p.tau() == tau1 + tau_a + tau_b, [&] {
    return "tau " + std::to_string(p.tau()) + " != " + std::to_string(tau1) +
           " + " + std::to_string(tau_a) + " + " + std::to_string(tau_b) + where;
  }, &f);

  const VertexSet b_or_c = set_union(p.b, p.c);
  const VertexSet a_or_c = set_union(p.a, p.c);
  int missing = 0;
  for (EdgeId id : cross_edges(g, p.b, b_or_c)) missing += f.contains(id) ? 0 : 1;
  int present = 0;
  for (EdgeId id : cross_edges(g, p.a, a_or_c)) present += f.contains(id) ? 1 : 0;
  const int dc = cross_edge_count(g, p.d, p.c);
  rec.expect("class_edges", missing == 0 && present == 0 && dc == 0, [&] {
    return std::to_string(missing) + " B-(B u C) edges outside F, " +
           std::to_string(present) + " A-(A u C) edges in F, " +
           std::to_string(dc) + " D-C edges" + where;
  }, &f);

  const int structural = formula::partition_value(g, h, p);
  rec.expect("structural_identity", structural == optimum, [&] {
    return "structural value " + std::to_string(structural) +
           " != deficiency " + std::to_string(optimum) + where;
  }, &f);
  if (rec.wants("identity_bridge")) {
    const int bridge = formula::lovasz_rhs(g, h, p.a, p.b, config.formula);
    rec.expect("identity_bridge", bridge == structural, [&] {
      return "dual value at (A,B) " + std::to_string(bridge) +
             " != structural value " + std::to_string(structural) + where;
    }, &f);
  }

  if (rec.wants("optimal_degree_bounds")) {
    for (std::uint64_t mask : all_optimal) {
      const SpanningSubgraph r = SpanningSubgraph::from_mask(g, mask);
      for (Vertex v : p.c) {
        rec.expect("optimal_degree_bounds", h.contains(v, r.degree(v)), [&] {
          return "vertex " + std::to_string(v) + " in C has degree " +
                 std::to_string(r.degree(v)) + " outside H in optimal R=" +
                 set_text(r.edge_ids()) + where;
        }, &f);
      }
      for (Vertex v : p.a) {
        rec.expect("optimal_degree_bounds", r.degree(v) >= h.max(v), [&] {
          return "vertex " + std::to_string(v) + " in A has degree " +
                 std::to_string(r.degree(v)) + " < MH in optimal R=" +
                 set_text(r.edge_ids()) + where;
        }, &f);
      }
      for (Vertex v : p.b) {
        rec.expect("optimal_degree_bounds", r.degree(v) <= h.min(v), [&] {
          return "vertex " + std::to_string(v) + " in B has degree " +
                 std::to_string(r.degree(v)) + " > mH in optimal R=" +
                 set_text(r.edge_ids()) + where;
        }, &f);
      }
    }
  }

  rec.expect("partition_equivalence",
             p.a == spectral.a && p.b == spectral.b && p.c == spectral.c &&
                 p.d == spectral.d,
             [&] {
               return "trail A=" + set_text(p.a) + " B=" + set_text(p.b) +
                      " C=" + set_text(p.c) + " D=" + set_text(p.d) +
                      " vs spectral A=" + set_text(spectral.a) +
                      " B=" + set_text(spectral.b) + " C=" +
                      set_text(spectral.c) + " D=" + set_text(spectral.d) +
                      where;
             },
             &f);

  for (Vertex v : p.b) {
    rec.expect("partition_degrees", f.degree(v) <= h.min(v), [&] {
      return "B vertex " + std::to_string(v) + " has d_F > mH" + where;
    }, &f);
  }
  for (Vertex v : p.a) {
    rec.expect("partition_degrees", f.degree(v) == h.max(v), [&] {
      return "A vertex " + std::to_string(v) + " has d_F != MH" + where;
    }, &f);
  }
  for (Vertex v : p.d) {
    const auto set = h.at(v);
    if (is_interval(set) && set.size() >= 2) {
      rec.expect("interval_rule", false, [&] {
        return "vertex " + std::to_string(v) + " with interval prescription is in D" + where;
      }, &f);
    }
  }
  // Count every interval vertex as a case, including those that passed.
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto set = h.at(v);
    if (is_interval(set) && set.size() >= 2 &&
        !std::binary_search(p.d.begin(), p.d.end(), v)) {
      rec.expect("interval_rule", true, [] { return std::string(); });
    }
  }
}

bool is_matching_prescription(const PrescriptionMap& h) {
  for (Vertex v = 0; v < h.size(); ++v) {
    if (h.at(v).size() != 1 || h.at(v)[0] != 1) return false;
  }
  return true;
}

}  // namespace

std::vector<CheckResult> run_checks(const Graph& g, const PrescriptionMap& h,
                                    const Config& config) {
  Recorder rec(config);

  std::optional<oracle::SpectrumTable> spectra;
  std::vector<std::uint64_t> all_optimal;
  std::vector<std::uint64_t> bounded;
  std::vector<std::uint64_t> qualifying;
  try {
    spectra = oracle::degree_spectra(g, h, config.oracle);
    all_optimal = oracle::optimal_masks(g, h, {}, config.oracle);
    bounded = oracle::optimal_masks(g, h, {false, true}, config.oracle);
    qualifying = oracle::optimal_masks(g, h, {true, true}, config.oracle);
  } catch (const CapExceeded& e) {
    rec.skip_all(catalog(), e.what());
    return rec.take();
  }
  const int optimum = spectra->min_deficiency;

  if (rec.wants("duality") || rec.wants("weak_duality")) {
    try {
      formula::DualWitness best;
      bool first = true;
      formula::for_each_dual(
          g, h,
          [&](const formula::DualWitness& w) {
            rec.expect("weak_duality", w.value <= optimum, [&] {
              return "dual value " + std::to_string(w.value) + " at S=" +
                     set_text(w.s) + " T=" + set_text(w.t) +
                     " exceeds deficiency " + std::to_string(optimum);
            });
            if (first || w.value > best.value) best = w;
            first = false;
          },
          config.formula);
      rec.expect("duality", best.value == optimum, [&] {
        return "max dual value " + std::to_string(best.value) + " at S=" +
               set_text(best.s) + " T=" + set_text(best.t) +
               " != deficiency " + std::to_string(optimum);
      });
    } catch (const CapExceeded& e) {
      rec.skip_all({"duality", "weak_duality"}, e.what());
    }
  }

  try {
    if (rec.wants("no_augmenting_trail")) {
      for (std::uint64_t mask : bounded) {
        const SpanningSubgraph f = SpanningSubgraph::from_mask(g, mask);
        const auto trail = trails::find_augmenting_trail(f, h, config.trail);
        rec.expect("no_augmenting_trail", !trail.has_value(), [&] {
          std::string path;
          for (Vertex v : trail->vertices) path += std::to_string(v) + " ";
          return "augmenting trail " + path + "at optimal F=" +
                 set_text(f.edge_ids());
        }, &f);
      }
    }
    const oracle::LovaszPartition spectral = oracle::lovasz_partition(h, *spectra);
    bool any_partition_check = false;
    for (const std::string& name : kPartitionChecks) {
      any_partition_check = any_partition_check || rec.wants(name);
    }
    if (any_partition_check) {
      for (std::uint64_t mask : qualifying) {
        const SpanningSubgraph f = SpanningSubgraph::from_mask(g, mask);
        const trails::TrailPartition p =
            trails::trail_partition(f, h, config.trail);
        check_partition(g, h, f, optimum, p, spectral, all_optimal, config, rec);
      }
    }
  } catch (const CapExceeded& e) {
    rec.skip("no_augmenting_trail", e.what());
    rec.skip_all(kPartitionChecks, e.what());
  }

  if (rec.wants("matching_count")) {
    if (is_matching_prescription(h)) {
      const int nu = matching_number(g);
      rec.expect("matching_count", optimum == g.vertex_count() - 2 * nu, [&] {
        return "deficiency " + std::to_string(optimum) + " != n - 2*nu = " +
               std::to_string(g.vertex_count() - 2 * nu);
      });
    } else {
      rec.skip("matching_count", "prescription is not H = {1}");
    }
  }

  if (rec.wants("solver_agreement")) {
    solver::Options options{config.trail, config.oracle, config.formula};
    options.formula.corrupt_shift = false;
    const solver::SolveOutcome outcome = solver::optimize(g, h, options);
    rec.expect("solver_agreement",
               outcome.certification.certified && outcome.deficiency == optimum,
               [&] {
                 return std::string(outcome.stalled ? "stall: " : "") +
                        "solver deficiency " + std::to_string(outcome.deficiency) +
                        " (" + solver::to_string(outcome.path) + ", " +
                        (outcome.certification.certified ? "certified"
                                                         : "uncertified") +
                        ") vs oracle " + std::to_string(optimum);
               },
               &outcome.subgraph);
  }

  return rec.take();
}

namespace {

int best_matching(const Graph& g, std::vector<bool>& used, Vertex v) {
  while (v < g.vertex_count() && used[v]) ++v;
  if (v == g.vertex_count()) return 0;
  used[v] = true;
  int best = best_matching(g, used, v + 1);
  for (Vertex w : g.neighbors(v)) {
    if (used[w]) continue;
    used[w] = true;
    best = std::max(best, 1 + best_matching(g, used, v + 1));
    used[w] = false;
  }
  used[v] = false;
  return best;
}

}  // namespace

int matching_number(const Graph& g) {
  std::vector<bool> used(g.vertex_count(), false);
  return best_matching(g, used, 0);
}

}  // namespace hfactor::verify
