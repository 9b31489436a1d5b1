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

#include "hfactor/solver.h"

#include <stdexcept>

namespace hfactor::solver {

const char* to_string(CertificateSource source) {
  switch (source) {
    case CertificateSource::kDual:
      return "dual";
    case CertificateSource::kOracle:
      return "oracle";
    case CertificateSource::kNone:
      break;
  }
  return "none";
}

const char* to_string(SolvePath path) {
  switch (path) {
    case SolvePath::kTrails:
      return "trails";
    case SolvePath::kOracle:
      return "oracle";
    case SolvePath::kGreedyOnly:
      break;
  }
  return "greedy-only";
}

namespace {

// Change in def_H when edge `id` is toggled.
int toggle_change(const SpanningSubgraph& f, const PrescriptionMap& h,
                  EdgeId id) {
  const Edge& e = f.host().edge(id);
  const int step = f.contains(id) ? -1 : 1;
  return h.dist(e.u, f.degree(e.u) + step) - h.dist(e.u, f.degree(e.u)) +
         h.dist(e.v, f.degree(e.v) + step) - h.dist(e.v, f.degree(e.v));
}

// Drops F-edges at vertices above MH, lowest edge id first. Each removal
// lowers the overfull end by one unit of deficiency and raises the other end
// by at most one, so def_H never grows.
int clamp_to_max(SpanningSubgraph& f, const PrescriptionMap& h) {
  int removed = 0;
  const Graph& g = f.host();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (EdgeId id : g.incident_edges(v)) {
      if (f.degree(v) <= h.max(v)) break;
      if (f.contains(id)) {
        f.erase(id);
        ++removed;
      }
    }
  }
  return removed;
}

}  // namespace

SpanningSubgraph initial_subgraph(const Graph& g, const PrescriptionMap& h) {
  SpanningSubgraph f(g);
  for (bool changed = true; changed;) {
    changed = false;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
      if (f.contains(id)) continue;
      const Edge& e = g.edge(id);
      if (f.degree(e.u) + 1 > h.max(e.u) || f.degree(e.v) + 1 > h.max(e.v)) {
        continue;
      }
      if (toggle_change(f, h, id) < 0) {
        f.insert(id);
        changed = true;
      }
    }
  }
  return f;
}

SpanningSubgraph prune_to_minimal(const PrescriptionMap& h,
                                  const SpanningSubgraph& f) {
  SpanningSubgraph out = f;
  for (bool changed = true; changed;) {
    changed = false;
    for (EdgeId id = 0; id < out.host().edge_count(); ++id) {
      if (out.contains(id) && toggle_change(out, h, id) == 0) {
        out.erase(id);
        changed = true;
      }
    }
  }
  return out;
}

Certification certify(const Graph& g, const PrescriptionMap& h,
                      const SpanningSubgraph& f, const Options& options) {
  Certification cert;
  cert.deficiency = deficiency_of(f, h);
  try {
    formula::DualWitness dual = formula::max_dual(g, h, options.formula);
    cert.source = CertificateSource::kDual;
    cert.bound = dual.value;
    cert.dual = std::move(dual);
  } catch (const CapExceeded& dual_cap) {
    try {
      cert.bound = oracle::total_deficiency(g, h, options.oracle).value;
      cert.source = CertificateSource::kOracle;
    } catch (const CapExceeded& oracle_cap) {
      cert.note = std::string("uncertifiable: ") + dual_cap.what() + "; " +
                  oracle_cap.what();
      return cert;
    }
  }
  cert.certified = cert.deficiency == *cert.bound;
  if (!cert.certified) {
    cert.note = "deficiency " + std::to_string(cert.deficiency) +
                " exceeds the certified optimum " +
                std::to_string(*cert.bound);
  }
  return cert;
}

SolveOutcome optimize(const Graph& g, const PrescriptionMap& h,
                      const Options& options) {
  SolveOutcome outcome{initial_subgraph(g, h), 0, {}, {}, {}, 0,
                       SolvePath::kTrails, false};
  if (g.edge_count() <= options.trail.edge_cap) {
    outcome.path = SolvePath::kTrails;
    int current = deficiency_of(outcome.subgraph, h);
    while (auto trail =
               trails::find_augmenting_trail(outcome.subgraph, h, options.trail)) {
      SpanningSubgraph next = trails::apply_trail(outcome.subgraph, *trail);
      const int after = deficiency_of(next, h);
      if (after >= current) {
        throw std::logic_error("augmenting trail did not lower the deficiency");
      }
      outcome.clamped_edges += clamp_to_max(next, h);
      outcome.subgraph = std::move(next);
      current = deficiency_of(outcome.subgraph, h);
      outcome.augmentation_log.push_back(std::move(*trail));
      outcome.deficiency_trace.push_back(current);
    }
  } else if (g.edge_count() <= options.oracle.edge_cap) {
    outcome.path = SolvePath::kOracle;
    outcome.subgraph = oracle::total_deficiency(g, h, options.oracle).witness;
    clamp_to_max(outcome.subgraph, h);
  } else {
    outcome.path = SolvePath::kGreedyOnly;
  }
  outcome.subgraph = prune_to_minimal(h, outcome.subgraph);
  outcome.deficiency = deficiency_of(outcome.subgraph, h);
  outcome.certification = certify(g, h, outcome.subgraph, options);
  outcome.stalled = outcome.certification.bound.has_value() &&
                    outcome.deficiency > *outcome.certification.bound;
  return outcome;
}

}  // namespace hfactor::solver
