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

#include <gtest/gtest.h>

#include "hfactor/corpus.h"
#include "hfactor/instance_io.h"

namespace hfactor {
namespace {

InstanceError::Kind kind_of(std::string_view text) {
  try {
    parse_instance_text(text);
  } catch (const InstanceError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "accepted: " << text;
  return InstanceError::Kind::kMalformed;
}

TEST(ParseInstanceTest, DefaultKey) {
  const Instance in =
      parse_instance_text(R"({"n":3,"edges":[[0,1],[1,2],[0,2]],"H":{"*":[1]}})");
  EXPECT_EQ(in.graph.vertex_count(), 3);
  EXPECT_EQ(in.graph.edge_count(), 3);
  EXPECT_EQ(in.prescription, PrescriptionMap::uniform(3, {1}));
}

TEST(ParseInstanceTest, IntervalShorthandAndOverrides) {
  const Instance in = parse_instance_text(
      R"({"n":3,"edges":[[0,1],[1,2]],"H":{"*":[1],"1":{"interval":[1,2]}}})");
  EXPECT_EQ(in.prescription.sets(), (std::vector<DegreeSet>{{1}, {1, 2}, {1}}));
  const Instance arr = parse_instance_text(R"({"n":2,"edges":[[0,1]],"H":[[0,1],[1]]})");
  EXPECT_EQ(arr.prescription.sets(), (std::vector<DegreeSet>{{0, 1}, {1}}));
}

TEST(ParseInstanceTest, WideGapCitesGap) {
  try {
    parse_instance_text(R"({"n":1,"edges":[],"H":{"0":[0,3]}})");
    FAIL() << "expected rejection";
  } catch (const InstanceError& e) {
    EXPECT_EQ(e.kind(), InstanceError::Kind::kGapViolation);
    EXPECT_NE(std::string(e.what()).find("{1,2}"), std::string::npos) << e.what();
  }
}

TEST(ParseInstanceTest, DistinctDiagnostics) {
  using K = InstanceError::Kind;
  EXPECT_EQ(kind_of("not json"), K::kMalformed);
  EXPECT_EQ(kind_of(R"({"edges":[],"H":{}})"), K::kMalformed);
  EXPECT_EQ(kind_of(R"({"n":2,"edges":[[0,5]],"H":{"*":[1]}})"), K::kVertexRange);
  EXPECT_EQ(kind_of(R"({"n":2,"edges":[[1,1]],"H":{"*":[1]}})"), K::kLoop);
  EXPECT_EQ(kind_of(R"({"n":2,"edges":[[0,1],[1,0]],"H":{"*":[1]}})"),
            K::kDuplicateEdge);
  EXPECT_EQ(kind_of(R"({"n":2,"edges":[],"H":{"0":[1]}})"), K::kMissingPrescription);
  EXPECT_EQ(kind_of(R"({"n":1,"edges":[],"H":{"0":[]}})"), K::kEmptyPrescription);
  EXPECT_EQ(kind_of(R"({"n":1,"edges":[],"H":{"0":[-1,0]}})"), K::kNegativeDegree);

  std::set<int> codes;
  for (int k = 0; k <= static_cast<int>(K::kGapViolation); ++k) {
    codes.insert(InstanceError(static_cast<K>(k), "").exit_code());
  }
  EXPECT_EQ(codes.size(), 8u);
  EXPECT_EQ(*codes.begin(), 10);
}

TEST(ParseInstanceTest, RoundTrip) {
  corpus::Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = corpus::random_connected_graph(1 + rng() % 7, 16, rng);
    const PrescriptionMap h = corpus::random_prescription(g, rng);
    const Instance back = parse_instance_text(instance_to_json(g, h).dump());
    EXPECT_EQ(back.prescription, h);
    ASSERT_EQ(back.graph.edge_count(), g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) EXPECT_EQ(back.graph.edge(e), g.edge(e));
  }
}

}  // namespace
}  // namespace hfactor
