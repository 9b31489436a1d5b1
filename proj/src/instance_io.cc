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

#include "hfactor/instance_io.h"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

namespace hfactor {
namespace {

using Kind = InstanceError::Kind;
using nlohmann::json;

[[noreturn]] void fail(Kind kind, const std::string& what) {
  throw InstanceError(kind, what);
}

int read_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) fail(Kind::kMalformed, where + " must be an integer");
  return value.get<int>();
}

DegreeSet read_set(const json& entry, const std::string& where) {
  std::vector<int> values;
  if (entry.is_object()) {
    if (entry.size() != 1 || !entry.contains("interval")) {
      fail(Kind::kMalformed, where + ": expected a list or {\"interval\": [a, b]}");
    }
    const json& bounds = entry["interval"];
    if (!bounds.is_array() || bounds.size() != 2) {
      fail(Kind::kMalformed, where + ": interval needs exactly two bounds");
    }
    const int lo = read_int(bounds[0], where + " interval start");
    const int hi = read_int(bounds[1], where + " interval end");
    if (lo > hi) fail(Kind::kEmptyPrescription, where + ": interval is empty");
    for (int i = lo; i <= hi; ++i) values.push_back(i);
  } else if (entry.is_array()) {
    for (const json& x : entry) values.push_back(read_int(x, where + " element"));
  } else {
    fail(Kind::kMalformed, where + ": expected a list or {\"interval\": [a, b]}");
  }
  return normalize_set(std::move(values));
}

}  // namespace

Instance parse_instance(const json& doc) {
  if (!doc.is_object()) fail(Kind::kMalformed, "instance must be a JSON object");
  for (const char* key : {"n", "edges", "H"}) {
    if (!doc.contains(key)) {
      fail(Kind::kMalformed, std::string("missing field \"") + key + "\"");
    }
  }
  const int n = read_int(doc["n"], "n");
  if (n < 0) fail(Kind::kMalformed, "n must be nonnegative");

  const json& edge_list = doc["edges"];
  if (!edge_list.is_array()) fail(Kind::kMalformed, "edges must be a list");
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < edge_list.size(); ++i) {
    const std::string where = "edge " + std::to_string(i);
    const json& pair = edge_list[i];
    if (!pair.is_array() || pair.size() != 2) {
      fail(Kind::kMalformed, where + " must be a pair of vertex indices");
    }
    const int u = read_int(pair[0], where);
    const int v = read_int(pair[1], where);
    if (u < 0 || u >= n || v < 0 || v >= n) {
      fail(Kind::kVertexRange, where + " [" + std::to_string(u) + "," +
                                   std::to_string(v) + "] leaves 0.." +
                                   std::to_string(n - 1));
    }
    if (u == v) fail(Kind::kLoop, where + " is a loop at vertex " + std::to_string(u));
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      fail(Kind::kDuplicateEdge, where + " duplicates {" + std::to_string(u) +
                                     "," + std::to_string(v) + "}");
    }
    edges.push_back({u, v});
  }

  std::vector<std::optional<DegreeSet>> sets(n);
  const json& h = doc["H"];
  if (h.is_array()) {
    if (static_cast<int>(h.size()) != n) {
      fail(Kind::kMalformed, "H list must have n entries");
    }
    for (int v = 0; v < n; ++v) sets[v] = read_set(h[v], "H(" + std::to_string(v) + ")");
  } else if (h.is_object()) {
    std::optional<DegreeSet> fallback;
    for (const auto& [key, entry] : h.items()) {
      if (key == "*") {
        fallback = read_set(entry, "H(*)");
        continue;
      }
      std::size_t used = 0;
      int v = -1;
      try {
        v = std::stoi(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size()) fail(Kind::kMalformed, "H key \"" + key + "\" is not a vertex index");
      if (v < 0 || v >= n) fail(Kind::kVertexRange, "H key " + key + " is not a vertex");
      sets[v] = read_set(entry, "H(" + key + ")");
    }
    for (int v = 0; v < n; ++v) {
      if (!sets[v]) sets[v] = fallback;
    }
  } else {
    fail(Kind::kMalformed, "H must be an object or a list");
  }

  std::vector<DegreeSet> resolved;
  for (int v = 0; v < n; ++v) {
    if (!sets[v]) {
      fail(Kind::kMissingPrescription, "no prescription for vertex " + std::to_string(v));
    }
    resolved.push_back(std::move(*sets[v]));
  }
  try {
    return {Graph(n, std::move(edges)), PrescriptionMap(std::move(resolved))};
  } catch (const PrescriptionError& e) {
    switch (e.kind()) {
      case PrescriptionError::Kind::kEmpty:
        fail(Kind::kEmptyPrescription, e.what());
      case PrescriptionError::Kind::kNegative:
        fail(Kind::kNegativeDegree, e.what());
      case PrescriptionError::Kind::kWideGap:
        fail(Kind::kGapViolation, e.what());
    }
    throw;
  } catch (const std::invalid_argument& e) {
    fail(Kind::kMalformed, e.what());
  }
}

Instance parse_instance_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Kind::kMalformed, std::string("not valid JSON: ") + e.what());
  }
  return parse_instance(doc);
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Kind::kMalformed, "cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_instance_text(text.str());
}

nlohmann::ordered_json instance_to_json(const Graph& g,
                                        const PrescriptionMap& h) {
  nlohmann::ordered_json doc;
  doc["n"] = g.vertex_count();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({e.u, e.v});
  doc["H"] = nlohmann::ordered_json::object();
  for (Vertex v = 0; v < h.size(); ++v) {
    auto s = h.at(v);
    doc["H"][std::to_string(v)] = std::vector<int>(s.begin(), s.end());
  }
  return doc;
}

}  // namespace hfactor
