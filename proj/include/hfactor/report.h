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

#ifndef HFACTOR_REPORT_H_
#define HFACTOR_REPORT_H_

#include "hfactor/checks.h"
#include "hfactor/formula.h"
#include "hfactor/oracle.h"
#include "hfactor/solver.h"
#include "hfactor/trails.h"
#include "json.hpp"

// JSON forms of the library's results. Field order is fixed, so equal inputs
// serialize to identical bytes.
namespace hfactor::report {

using Json = nlohmann::ordered_json;

Json instance_digest(const Graph& g, const PrescriptionMap& h);
Json to_json(const SpanningSubgraph& f);
Json to_json(const trails::ChangeableTrail& trail);
Json to_json(const trails::TrailPartition& partition);
Json to_json(const oracle::LovaszPartition& partition);
Json to_json(const oracle::SpectrumTable& spectra);
Json to_json(const formula::DualWitness& witness);
Json to_json(const solver::Certification& certification);
Json to_json(const solver::SolveOutcome& outcome);
Json to_json(const verify::CheckResult& result);

}  // namespace hfactor::report

#endif  // HFACTOR_REPORT_H_
