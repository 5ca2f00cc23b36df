// Copyright 2026 The algconn Authors.
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

#include "algconn/metrics.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "algconn/generators.hpp"
#include "algconn/random.hpp"
#include "oracles.hpp"

namespace algconn {
namespace {

using ::testing::ElementsAre;

Graph TwoDisjointEdges() { return ParseEdgeList("n 4\n0 1\n2 3\n"); }

TEST(DistancesTest, Examples) {
  EXPECT_EQ(AllPairsDistances(PathGraph(4)).at(0, 3), 3);
  EXPECT_EQ(AllPairsDistances(TwoDisjointEdges()).at(0, 2), kUnreachable);
  const DistanceMatrix c5 = AllPairsDistances(CycleGraph(5));
  EXPECT_EQ(c5.at(0, 2), 2);
  EXPECT_EQ(c5.at(0, 3), 2);
}

TEST(DistancesTest, MatchesFloydWarshall) {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = rng.NextInt(1, 8);
    const double p = rng.NextDouble();
    const Graph g = ErdosRenyi(n, p, rng.Next());
    const DistanceMatrix d = AllPairsDistances(g, 1 + trial % 3);
    const auto oracle = testing::FloydWarshall(g);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Distance expected =
            oracle[i][j] == testing::kInf ? kUnreachable : Distance(oracle[i][j]);
        ASSERT_EQ(d.at(i, j), expected) << "trial " << trial;
      }
    }
  }
}

TEST(DistancesTest, Invariants) {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = ErdosRenyi(10, 0.25, seed);
    const DistanceMatrix d = AllPairsDistances(g);
    const int n = g.num_nodes();
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(d.at(i, i), 0);
      for (int j = 0; j < n; ++j) {
        EXPECT_EQ(d.at(i, j), d.at(j, i));
        EXPECT_EQ(d.at(i, j) == 1, g.has_edge(i, j));
        for (int k = 0; k < n; ++k) {
          if (d.at(i, k) && d.at(k, j)) {
            ASSERT_TRUE(d.at(i, j).has_value());
            EXPECT_LE(*d.at(i, j), *d.at(i, k) + *d.at(k, j));
          }
        }
      }
    }
  }
}

TEST(EccentricityTest, Examples) {
  const EccentricityProfile p4 = Eccentricities(AllPairsDistances(PathGraph(4)));
  EXPECT_THAT(p4.ecc, ElementsAre(3, 2, 2, 3));
  EXPECT_EQ(p4.diameter, 3);

  const EccentricityProfile k4 =
      Eccentricities(AllPairsDistances(CompleteGraph(4)));
  EXPECT_THAT(k4.ecc, ElementsAre(1, 1, 1, 1));
  EXPECT_EQ(k4.diameter, 1);

  const EccentricityProfile split =
      Eccentricities(AllPairsDistances(TwoDisjointEdges()));
  EXPECT_THAT(split.ecc, ElementsAre(kUnreachable, kUnreachable, kUnreachable,
                                     kUnreachable));
  EXPECT_EQ(split.diameter, kUnreachable);
  EXPECT_FALSE(split.connected());
}

TEST(EccentricityTest, SingleNode) {
  const EccentricityProfile p = Eccentricities(AllPairsDistances(Graph(1)));
  EXPECT_THAT(p.ecc, ElementsAre(0));
  EXPECT_EQ(p.diameter, 0);
}

TEST(CountWithinEccentricityTest, Examples) {
  const EccentricityProfile p4 = Eccentricities(AllPairsDistances(PathGraph(4)));
  EXPECT_EQ(CountWithinEccentricity(p4, 2), 2);
  EXPECT_EQ(CountWithinEccentricity(p4, 3), 4);
  EXPECT_EQ(CountWithinEccentricity(p4, 1), 0);
  const EccentricityProfile split =
      Eccentricities(AllPairsDistances(TwoDisjointEdges()));
  for (int ell = 1; ell <= 5; ++ell) {
    EXPECT_EQ(CountWithinEccentricity(split, ell), 0);
  }
  EXPECT_THROW(CountWithinEccentricity(p4, 0), std::invalid_argument);
}

TEST(CountWithinEccentricityTest, MonotoneAndMatchesOracle) {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = ErdosRenyi(9, 0.35, seed);
    const EccentricityProfile p = Eccentricities(AllPairsDistances(g));
    int previous = 0;
    for (int ell = 1; ell <= 9; ++ell) {
      const int s = CountWithinEccentricity(p, ell);
      EXPECT_EQ(s, testing::BruteSEll(g, ell));
      EXPECT_GE(s, previous);
      previous = s;
    }
    if (p.connected()) {
      EXPECT_EQ(CountWithinEccentricity(p, *p.diameter), g.num_nodes());
    }
  }
}

TEST(PowerGraphTest, Examples) {
  const Graph p4 = PathGraph(4);
  const DistanceMatrix d = AllPairsDistances(p4);
  const Graph sq = PowerGraph(p4, d, 2);
  EXPECT_EQ(sq.num_edges(), 5);
  EXPECT_THAT(sq.edges(), ElementsAre(Edge{0, 1}, Edge{0, 2}, Edge{1, 2},
                                      Edge{1, 3}, Edge{2, 3}));
  EXPECT_EQ(PowerGraph(p4, d, 3), CompleteGraph(4));
  EXPECT_EQ(PowerGraph(p4, d, 1), p4);
  EXPECT_THROW(PowerGraph(p4, d, 0), std::invalid_argument);
  EXPECT_THROW(PowerGraph(PathGraph(3), d, 2), std::invalid_argument);
}

TEST(PowerGraphTest, MatchesBruteForceAndIsMonotone) {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = ErdosRenyi(8, 0.3, seed);
    const DistanceMatrix d = AllPairsDistances(g);
    EXPECT_EQ(PowerGraph(g, d, 1), g);
    int64_t previous = g.num_edges();
    for (int ell = 1; ell <= 8; ++ell) {
      const Graph power = PowerGraph(g, d, ell);
      EXPECT_EQ(power.edges(), testing::BrutePowerEdges(g, ell));
      EXPECT_GE(power.num_edges(), previous);
      previous = power.num_edges();
    }
  }
}

TEST(PowerGraphTest, DominatingNodesOfPowerAreSEll) {
  for (uint64_t seed = 0; seed < 80; ++seed) {
    const Graph g = RandomTree(11, seed);
    const DistanceMatrix d = AllPairsDistances(g);
    const EccentricityProfile p = Eccentricities(d);
    for (int ell = 1; ell <= *p.diameter + 1; ++ell) {
      EXPECT_EQ(CountDominatingNodes(PowerGraph(g, d, ell)),
                CountWithinEccentricity(p, ell));
    }
  }
}

}  // namespace
}  // namespace algconn
