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

#include "hfactor/report.h"

namespace hfactor::report {
namespace {

Json sets_json(const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (const VertexSet& s : sets) out.push_back(s);
  return out;
}

}  // namespace

Json instance_digest(const Graph& g, const PrescriptionMap& h) {
  Json out;
  out["n"] = g.vertex_count();
  out["m"] = g.edge_count();
  Json sets = Json::array();
  for (Vertex v = 0; v < h.size(); ++v) {
    auto s = h.at(v);
    sets.push_back(std::vector<int>(s.begin(), s.end()));
  }
  out["H"] = std::move(sets);
  return out;
}

Json to_json(const SpanningSubgraph& f) {
  Json out;
  out["edges"] = f.edge_ids();
  out["degrees"] = std::vector<int>(f.degrees().begin(), f.degrees().end());
  return out;
}

Json to_json(const trails::ChangeableTrail& trail) {
  Json out;
  out["vertices"] = trail.vertices;
  out["edges"] = trail.edges;
  out["parity"] = trails::to_string(trail.parity());
  return out;
}

Json to_json(const trails::TrailPartition& partition) {
  Json out;
  out["A"] = partition.a;
  out["B"] = partition.b;
  out["C"] = partition.c;
  out["D"] = partition.d;
  out["tau"] = partition.tau();
  out["D_components"] = sets_json(partition.d_components);
  return out;
}

Json to_json(const oracle::LovaszPartition& partition) {
  Json out;
  out["A"] = partition.a;
  out["B"] = partition.b;
  out["C"] = partition.c;
  out["D"] = partition.d;
  return out;
}

Json to_json(const oracle::SpectrumTable& spectra) {
  Json out;
  out["min_deficiency"] = spectra.min_deficiency;
  out["optimal_count"] = spectra.optimal_count;
  out["spectra"] = sets_json(spectra.spectra);
  return out;
}

Json to_json(const formula::DualWitness& witness) {
  Json out;
  out["S"] = witness.s;
  out["T"] = witness.t;
  out["tau"] = witness.tau;
  out["value"] = witness.value;
  out["deficient_components"] = sets_json(witness.deficient_components);
  return out;
}

Json to_json(const solver::Certification& certification) {
  Json out;
  out["certified"] = certification.certified;
  out["source"] = solver::to_string(certification.source);
  out["deficiency"] = certification.deficiency;
  out["bound"] = certification.bound ? Json(*certification.bound) : Json(nullptr);
  out["dual"] = certification.dual ? to_json(*certification.dual) : Json(nullptr);
  if (!certification.note.empty()) out["note"] = certification.note;
  return out;
}

Json to_json(const solver::SolveOutcome& outcome) {
  Json out;
  out["deficiency"] = outcome.deficiency;
  out["path"] = solver::to_string(outcome.path);
  out["stalled"] = outcome.stalled;
  out["subgraph"] = to_json(outcome.subgraph);
  out["certificate"] = to_json(outcome.certification);
  Json log = Json::array();
  for (std::size_t i = 0; i < outcome.augmentation_log.size(); ++i) {
    Json step = to_json(outcome.augmentation_log[i]);
    step["deficiency_after"] = outcome.deficiency_trace[i];
    log.push_back(std::move(step));
  }
  out["augmentations"] = std::move(log);
  out["clamped_edges"] = outcome.clamped_edges;
  return out;
}

Json to_json(const verify::CheckResult& result) {
  Json out;
  out["check"] = result.check;
  out["verdict"] = verify::to_string(result.verdict);
  out["cases"] = result.cases;
  if (!result.detail.empty()) out["detail"] = result.detail;
  if (result.subgraph) out["subgraph"] = *result.subgraph;
  return out;
}

}  // namespace hfactor::report
