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

#ifndef HFACTOR_INSTANCE_IO_H_
#define HFACTOR_INSTANCE_IO_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hfactor/graph.h"
#include "hfactor/prescription.h"
#include "json.hpp"

// Instance documents are JSON objects:
//
//   {"n": 3,
//    "edges": [[0, 1], [1, 2], [0, 2]],
//    "H": {"*": [1], "2": {"interval": [0, 2]}}}
//
// "H" maps vertex indices (as strings) to an explicit list of degrees or to
// {"interval": [a, b]}; the optional "*" entry applies to every vertex not
// listed. An array of n entries is accepted in place of the object.
namespace hfactor {

struct Instance {
  Graph graph;
  PrescriptionMap prescription;
};

class InstanceError : public std::runtime_error {
 public:
  enum class Kind {
    kMalformed,
    kVertexRange,
    kLoop,
    kDuplicateEdge,
    kMissingPrescription,
    kEmptyPrescription,
    kNegativeDegree,
    kGapViolation,
  };

  InstanceError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }
  // Process exit code reported by the CLI for this kind (10 and up).
  int exit_code() const { return 10 + static_cast<int>(kind_); }

 private:
  Kind kind_;
};

Instance parse_instance(const nlohmann::json& document);
Instance parse_instance_text(std::string_view text);
Instance load_instance(const std::filesystem::path& path);

// Canonical document: explicit element lists for every vertex.
nlohmann::ordered_json instance_to_json(const Graph& g,
                                        const PrescriptionMap& h);

}  // namespace hfactor

#endif  // HFACTOR_INSTANCE_IO_H_
