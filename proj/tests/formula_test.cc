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
#include "hfactor/errors.h"
#include "hfactor/formula.h"
#include "hfactor/oracle.h"
#include "test_support.h"

namespace hfactor::formula {
namespace {

using testing::kA;
using testing::kB;
using testing::kC;

std::uint32_t to_mask(const VertexSet& s) {
  std::uint32_t m = 0;
  for (Vertex v : s) m |= 1u << v;
  return m;
}

TEST(TauCountTest, Examples) {
  const Graph k3 = complete_graph(3);
  const PrescriptionMap h3 = testing::ones(3);
  const TauResult whole = tau_count(k3, h3, {}, {});
  EXPECT_EQ(whole.count, 1);
  EXPECT_EQ(whole.components, (std::vector<VertexSet>{{kA, kB, kC}}));
  EXPECT_EQ(tau_count(path_graph(3), h3, {kB}, {kA, kC}).count, 0);
  EXPECT_EQ(tau_count(k3, h3, {}, {kA}).count, 0);
  EXPECT_THROW(tau_count(k3, h3, {kA}, {kA}), std::invalid_argument);
}

TEST(TauCountTest, ComponentCapNamesComponent) {
  const Graph k7 = complete_graph(7);
  Options tight;
  tight.component.edge_cap = 10;
  try {
    tau_count(k7, testing::ones(7), {}, {}, tight);
    FAIL() << "expected cap refusal";
  } catch (const CapExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("{0,1,2,3,4,5,6}"), std::string::npos)
        << e.what();
  }
}

TEST(LovaszRhsTest, Examples) {
  const Graph k3 = complete_graph(3);
  const PrescriptionMap h3 = testing::ones(3);
  EXPECT_EQ(lovasz_rhs(k3, h3, {}, {}), 1);
  EXPECT_EQ(lovasz_rhs(path_graph(3), h3, {kB}, {kA, kC}), 1);
  EXPECT_EQ(lovasz_rhs(k3, h3, {}, {kA}), -1);
  EXPECT_EQ(testing::naive_dual_value(path_graph(3), h3.sets(), to_mask({kB}),
                                      to_mask({kA, kC})),
            1);
  EXPECT_EQ(testing::naive_dual_value(k3, h3.sets(), 0, to_mask({kA})), -1);
}

TEST(LovaszRhsTest, MatchesBruteForce) {
  corpus::Rng rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = corpus::random_connected_graph(1 + rng() % 5, 10, rng);
    const PrescriptionMap h = corpus::random_prescription(g, rng);
    for (int k = 0; k < 10; ++k) {
      VertexSet s;
      VertexSet t;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const int state = rng() % 3;
        if (state == 1) s.push_back(v);
        if (state == 2) t.push_back(v);
      }
      EXPECT_EQ(lovasz_rhs(g, h, s, t),
                testing::naive_dual_value(g, h.sets(), to_mask(s), to_mask(t)));
    }
  }
}

TEST(ForEachDualTest, VisitsEveryPairOnce) {
  corpus::Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = corpus::random_connected_graph(1 + rng() % 5, 10, rng);
    const PrescriptionMap h = corpus::random_prescription(g, rng);
    std::set<std::pair<VertexSet, VertexSet>> seen;
    for_each_dual(g, h, [&](const DualWitness& w) {
      EXPECT_TRUE(disjoint(w.s, w.t));
      EXPECT_TRUE(seen.insert({w.s, w.t}).second);
      const DualWitness direct = evaluate_dual(g, h, w.s, w.t);
      EXPECT_EQ(w.value, direct.value);
      EXPECT_EQ(w.tau, direct.tau);
      EXPECT_EQ(w.deficient_components, direct.deficient_components);
    });
    int expected = 1;
    for (int i = 0; i < g.vertex_count(); ++i) expected *= 3;
    EXPECT_EQ(static_cast<int>(seen.size()), expected);
  }
}

TEST(MaxDualTest, Examples) {
  const DualWitness k3 = max_dual(complete_graph(3), testing::ones(3));
  EXPECT_EQ(k3.value, 1);
  EXPECT_TRUE(k3.s.empty());
  EXPECT_TRUE(k3.t.empty());

  const DualWitness p3 = max_dual(path_graph(3), testing::ones(3));
  EXPECT_EQ(p3.value, testing::naive_max_dual(path_graph(3), testing::ones(3).sets()));
  EXPECT_EQ(p3.value, 1);
  // P3 itself has no perfect matching, so (empty, empty) already reaches 1
  // and wins the tie against ({b},{a,c}).
  EXPECT_TRUE(p3.s.empty());
  EXPECT_TRUE(p3.t.empty());
  EXPECT_EQ(lovasz_rhs(path_graph(3), testing::ones(3), {kB}, {kA, kC}), 1);

  EXPECT_EQ(max_dual(cycle_graph(4), testing::ones(4)).value, 0);
}

TEST(MaxDualTest, TieRulePicksSmallestThenLexFirst) {
  corpus::Rng rng(15);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = corpus::random_connected_graph(1 + rng() % 5, 10, rng);
    const PrescriptionMap h = corpus::random_prescription(g, rng);
    const DualWitness best = max_dual(g, h);
    std::optional<std::tuple<int, std::size_t, VertexSet, VertexSet>> expected;
    for_each_dual(g, h, [&](const DualWitness& w) {
      std::tuple<int, std::size_t, VertexSet, VertexSet> key{
          -w.value, w.s.size() + w.t.size(), w.s, w.t};
      if (!expected || key < *expected) expected = key;
    });
    EXPECT_EQ(-std::get<0>(*expected), best.value);
    EXPECT_EQ(std::get<2>(*expected), best.s);
    EXPECT_EQ(std::get<3>(*expected), best.t);
  }
}

TEST(MaxDualTest, CapIsExplicit) {
  Options tight;
  tight.dual_n_cap = 4;
  EXPECT_THROW(max_dual(path_graph(5), testing::ones(5), tight), CapExceeded);
}

TEST(MaxDualTest, EqualsBruteForceDeficiency) {
  corpus::Rng rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = corpus::random_connected_graph(1 + rng() % 5, 10, rng);
    const PrescriptionMap h = corpus::random_prescription(g, rng);
    EXPECT_EQ(max_dual(g, h).value, testing::naive_max_dual(g, h.sets()));
    EXPECT_EQ(max_dual(g, h).value, testing::naive_total_deficiency(g, h.sets()));
  }
}

// With H = {1} everywhere the max equals n - 2 * (maximum matching size).
TEST(MaxDualTest, MatchingSpecialisation) {
  corpus::Rng rng(27);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = corpus::random_connected_graph(1 + rng() % 7, 12, rng);
    EXPECT_EQ(max_dual(g, testing::ones(g.vertex_count())).value,
              g.vertex_count() - 2 * testing::naive_matching_number(g));
  }
}

TEST(HasFactorCriterionTest, Examples) {
  EXPECT_TRUE(has_factor_criterion(cycle_graph(4), testing::ones(4)));
  EXPECT_FALSE(has_factor_criterion(complete_graph(3), testing::ones(3)));
  EXPECT_TRUE(has_factor_criterion(Graph(1), PrescriptionMap::uniform(1, {0})));
}

TEST(PartitionValueTest, Examples) {
  const Graph p3 = path_graph(3);
  trails::TrailPartition pp;
  pp.a = {kB};
  pp.b = {kA, kC};
  EXPECT_EQ(partition_value(p3, testing::ones(3), pp), 1);

  const Graph k3 = complete_graph(3);
  trails::TrailPartition pk;
  pk.d = {kA, kB, kC};
  pk.d_components = {{kA, kB, kC}};
  EXPECT_EQ(partition_value(k3, testing::ones(3), pk), 1);

  trails::TrailPartition p2;
  p2.c = {kA, kB};
  EXPECT_EQ(partition_value(complete_graph(2), testing::ones(2), p2), 0);
}

}  // namespace
}  // namespace hfactor::formula
