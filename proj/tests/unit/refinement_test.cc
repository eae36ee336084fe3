// Copyright 2026 The IRNI Authors
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

#include "irni/refinement.h"

#include <gtest/gtest.h>

#include <random>

#include "irni/coloring.h"
#include "irni/errors.h"
#include "oracles.h"
#include "test_graphs.h"

namespace irni {
namespace {

using Cells = std::vector<std::vector<Vertex>>;
using ::irni::testing::MakeGraph;
using ::irni::testing::Path;

const Graph& K3() {
  static const Graph g = MakeGraph(3, {{0, 1}, {1, 2}, {0, 2}});
  return g;
}

const Graph& C6() {
  static const Graph g =
      MakeGraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  return g;
}

// Cells listed by color.
Cells ByColor(const Coloring& c) { return c.Cells(); }

TEST(ColoringTest, FromValuesPreservesOrder) {
  const Coloring c = Coloring::FromValues(std::vector<int>{30, 10, 30, 20});
  EXPECT_EQ(c.num_cells(), 3);
  EXPECT_EQ(std::vector<Color>(c.assignment().begin(), c.assignment().end()),
            (std::vector<Color>{2, 0, 2, 1}));
  EXPECT_EQ(c.CellSizes(), (std::vector<int>{1, 1, 2}));
  EXPECT_FALSE(c.IsDiscrete());
  EXPECT_TRUE(Coloring::FromValues(std::vector<int>{3, 1, 2}).IsDiscrete());
}

TEST(ColoringTest, FinerRelation) {
  const Coloring discrete = Coloring::FromValues(std::vector<int>{0, 1, 2});
  const Coloring uniform = Coloring::Uniform(3);
  EXPECT_TRUE(IsFiner(discrete, uniform));
  EXPECT_FALSE(IsFiner(uniform, discrete));
  EXPECT_TRUE(IsFiner(uniform, uniform));
  const Coloring a = Coloring::FromValues(std::vector<int>{0, 0, 1});
  const Coloring b = Coloring::FromValues(std::vector<int>{0, 1, 1});
  EXPECT_FALSE(IsFiner(a, b));
  EXPECT_FALSE(IsFiner(b, a));
}

TEST(ColoringTest, SamePartitionIgnoresNames) {
  const Coloring a = Coloring::FromValues(std::vector<int>{0, 0, 1});
  const Coloring b = Coloring::FromValues(std::vector<int>{1, 1, 0});
  EXPECT_TRUE(SamePartition(a, b));
  EXPECT_FALSE(a == b);
}

TEST(ColorRefineTest, TriangleStaysUniform) {
  EXPECT_EQ(ColorRefine(K3(), Coloring::Uniform(3)).num_cells(), 1);
}

TEST(ColorRefineTest, PathSplitsEndpoints) {
  const Coloring c = ColorRefine(Path(3), Coloring::Uniform(3));
  EXPECT_EQ(c.CanonicalPartition(), (Cells{{0, 2}, {1}}));
}

TEST(ColorRefineTest, ApexGraphRoot) {
  const Coloring c =
      ColorRefine(testing::TriangleSquareApex(), Coloring::Uniform(8));
  EXPECT_EQ(c.CanonicalPartition(), (Cells{{0, 1, 2, 3, 4, 5, 6}, {7}}));
}

TEST(ColorRefineTest, CycleByDistance) {
  const std::vector<Vertex> nu = {0};
  const Coloring c = ColorRefine(C6(), Coloring::Uniform(6), nu);
  EXPECT_EQ(c.CanonicalPartition(), (Cells{{0}, {1, 5}, {2, 4}, {3}}));
}

TEST(ColorRefineTest, EmptyGraph) {
  const Graph g = Graph::Create(0, {});
  EXPECT_EQ(ColorRefine(g, Coloring::Uniform(0)).num_vertices(), 0);
}

TEST(IndividualizeTest, Examples) {
  const Coloring pi = Coloring::FromValues(std::vector<int>{5, 5, 5});
  EXPECT_EQ(Individualize(pi, {}), pi);

  const std::vector<Vertex> two = {1};
  EXPECT_EQ(Individualize(Coloring::Uniform(3), two).CanonicalPartition(),
            (Cells{{0, 2}, {1}}));

  const Coloring p3 = Coloring::FromValues(std::vector<int>{0, 1, 0});
  const std::vector<Vertex> one = {0};
  const Coloring split = Individualize(p3, one);
  EXPECT_EQ(split.CanonicalPartition(), (Cells{{0}, {1}, {2}}));
  // The artificial color lies above the existing colors.
  EXPECT_GT(split[0], split[1]);
}

TEST(IndividualizeTest, RejectsBadSequences) {
  const std::vector<Vertex> dup = {1, 1};
  const std::vector<Vertex> out = {3};
  EXPECT_THROW(Individualize(Coloring::Uniform(3), dup), InvalidInputError);
  EXPECT_THROW(Individualize(Coloring::Uniform(3), out), InvalidInputError);
  EXPECT_THROW(ColorRefine(K3(), Coloring::Uniform(3), dup),
               InvalidInputError);
}

TEST(TrivialRefineTest, OrderedArtificialColors) {
  const Graph g = MakeGraph(4, {{0, 1}});
  const std::vector<Vertex> nu = {2, 0};
  const Coloring c = TrivialRefine(g, Coloring::Uniform(4), nu);
  EXPECT_EQ(ByColor(c), (Cells{{1, 3}, {2}, {0}}));
}

TEST(ObliviousRefineTest, DiscardsPi) {
  const Coloring pi = Coloring::FromValues(std::vector<int>{0, 1, 2});
  EXPECT_EQ(ObliviousRefine(K3(), pi, {}).num_cells(), 1);
  const std::vector<Vertex> all = {2, 0, 1};
  EXPECT_TRUE(ObliviousRefine(K3(), pi, all).IsDiscrete());
}

TEST(ColorThenTrivialRefineTest, PathExamples) {
  EXPECT_EQ(ColorThenTrivialRefine(Path(3), Coloring::Uniform(3), {})
                .CanonicalPartition(),
            (Cells{{0, 2}, {1}}));
  const std::vector<Vertex> nu = {0};
  EXPECT_EQ(ColorThenTrivialRefine(Path(3), Coloring::Uniform(3), nu)
                .CanonicalPartition(),
            (Cells{{0}, {1}, {2}}));
  const Coloring discrete = Coloring::FromValues(std::vector<int>{2, 0, 1});
  EXPECT_TRUE(ColorThenTrivialRefine(Path(3), discrete, nu).IsDiscrete());
}

TEST(RefinementKindTest, NamesRoundTrip) {
  for (auto kind :
       {RefinementKind::kColorRefinement, RefinementKind::kTrivial,
        RefinementKind::kOblivious, RefinementKind::kColorThenTrivial}) {
    EXPECT_EQ(ParseRefinementKind(RefinementName(kind)), kind);
  }
  EXPECT_FALSE(ParseRefinementKind("wl").has_value());
}

TEST(IsEquitableTest, Examples) {
  EXPECT_TRUE(IsEquitable(K3(), Coloring::Uniform(3)));
  EXPECT_FALSE(IsEquitable(Path(3), Coloring::Uniform(3)));
  EXPECT_TRUE(
      IsEquitable(Path(3), Coloring::FromValues(std::vector<int>{0, 1, 2})));
}

TEST(SplitSubdivisionTest, EndpointsNameTheEdge) {
  const Graph s = SubdivideEdgeColors(Graph::Create(
      3, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}}, {}, {}, /*has_edge_colors=*/true));
  const std::vector<Vertex> all = {2, 0, 1};
  for (auto kind : {RefinementKind::kTrivial, RefinementKind::kOblivious,
                    RefinementKind::kColorThenTrivial}) {
    EXPECT_TRUE(Refine(kind, s, testing::Initial(s), all).IsDiscrete());
  }
  // Only original vertices individualized: the subdivision cell stays whole
  // until its endpoints differ.
  const std::vector<Vertex> one = {0};
  const Coloring c = TrivialRefine(s, testing::Initial(s), one);
  EXPECT_NE(c[3], c[4]);  // edge {0,1} touches vertex 0, edge {1,2} does not
  EXPECT_EQ(c[3], c[5]);  // edges {0,1} and {0,2} both touch it
  EXPECT_EQ(SplitSubdivisionVertices(K3(), Coloring::Uniform(3)),
            Coloring::Uniform(3));
}

// Refine() honors the refinement contract: finer than individualized pi,
// and the individualized vertices end in singleton cells.
TEST(RefinePropertyTest, ContractOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::RandomTestGraph(rng, 9);
    const Coloring pi = testing::Initial(g);
    auto perm = testing::RandomPermutation(rng, g.num_vertices());
    perm.resize(std::uniform_int_distribution<int>(0, g.num_vertices())(rng));
    for (auto kind :
         {RefinementKind::kColorRefinement, RefinementKind::kTrivial,
          RefinementKind::kOblivious, RefinementKind::kColorThenTrivial}) {
      const Coloring c = Refine(kind, g, pi, perm);
      const Coloring base = kind == RefinementKind::kOblivious
                                ? Coloring::Uniform(g.num_vertices())
                                : pi;
      EXPECT_TRUE(IsFiner(c, Individualize(base, perm)));
      for (Vertex v : perm) EXPECT_EQ(c.CellSizes()[c[v]], 1);
    }
  }
}

// Coarsest equitable: same partition as the naive refinement fixpoint.
TEST(RefinePropertyTest, MatchesNaiveOracle) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::RandomTestGraph(rng, 12);
    const Coloring c = ColorRefine(g, testing::Initial(g));
    ASSERT_EQ(c.CanonicalPartition(),
              oracle::NaiveStablePartition(g, testing::BaseColors64(g)));
    ASSERT_TRUE(IsEquitable(g, c));
  }
}

// Color names, not only the partition, are isomorphism invariant.
TEST(RefinePropertyTest, ColorNamesCommuteWithRelabeling) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::RandomTestGraph(rng, 10);
    const auto sigma = testing::RandomPermutation(rng, g.num_vertices());
    const Graph h = Relabel(g, sigma);
    std::vector<Vertex> nu;
    std::vector<Vertex> mapped;
    if (g.num_vertices() > 0) {
      nu.push_back(0);
      mapped.push_back(sigma[0]);
    }
    const Coloring cg = ColorRefine(g, testing::Initial(g), nu);
    const Coloring ch = ColorRefine(h, testing::Initial(h), mapped);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      ASSERT_EQ(cg[v], ch[sigma[v]]);
    }
  }
}

// Refining an already equitable coloring changes nothing.
TEST(RefinePropertyTest, Idempotent) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::RandomTestGraph(rng, 10);
    const Coloring c = ColorRefine(g, testing::Initial(g));
    EXPECT_EQ(ColorRefine(g, c), c);
  }
}

}  // namespace
}  // namespace irni
