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

#include "irni/ir_tree.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "fixtures.h"
#include "irni/datasets.h"
#include "irni/errors.h"
#include "oracles.h"
#include "test_graphs.h"

namespace irni {
namespace {

using ::irni::testing::Initial;
using ::irni::testing::MakeGraph;

const TreeConfig kCref{};

TEST(SelectCellTest, DiscreteHasNoCell) {
  const Graph p = testing::Path(3);
  const Coloring discrete = Coloring::FromValues(std::vector<int>{0, 1, 2});
  EXPECT_FALSE(
      SelectCell(SelectorKind::kFirstLargest, p, discrete, {}).has_value());
}

TEST(SelectCellTest, LargestWithSmallestColor) {
  const Graph g = MakeGraph(7, {});
  const Coloring c =
      Coloring::FromValues(std::vector<int>{0, 1, 1, 1, 2, 2, 2});
  EXPECT_EQ(SelectCell(SelectorKind::kFirstLargest, g, c, {}), 1);
}

TEST(SelectCellTest, ApexGraphRootHasSevenChildren) {
  const Graph g = testing::TriangleSquareApex();
  const Coloring root = ColorRefine(g, Coloring::Uniform(8));
  const auto cell = SelectCell(SelectorKind::kFirstLargest, g, root, {});
  ASSERT_TRUE(cell.has_value());
  EXPECT_EQ(BranchVertices(g, root, *cell).size(), 7u);
  EXPECT_EQ(Children(g, Coloring::Uniform(8), {}, kCref).size(), 7u);
}

TEST(SelectCellTest, SubdivisionVerticesAreNotBranched) {
  const Graph s = SubdivideEdgeColors(
      Graph::Create(3, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}}, {}, {}, true));
  const Coloring root = ColorRefine(s, Initial(s));
  const auto cell = SelectCell(SelectorKind::kFirstLargest, s, root, {});
  ASSERT_TRUE(cell.has_value());
  for (Vertex v : BranchVertices(s, root, *cell)) {
    EXPECT_FALSE(s.is_subdivision_vertex(v));
  }
  EXPECT_EQ(MaxDepth(s), 3);
}

TEST(ChildrenTest, LeafHasNone) {
  const Graph p = testing::Path(2);
  const std::vector<Vertex> nu = {0};
  EXPECT_TRUE(Children(p, Coloring::Uniform(2), nu, kCref).empty());
}

TEST(ChildrenTest, CycleRoot) {
  EXPECT_EQ(Children(GenCycle(6), Coloring::Uniform(6), {}, kCref).size(), 6u);
}

TEST(RandomWalkTest, DiscreteStartDepthZero) {
  const Graph p = testing::Path(3);
  const Coloring discrete = Coloring::FromValues(std::vector<int>{0, 1, 2});
  const WalkResult w = RandomWalk(p, discrete, kCref, 0, 1);
  EXPECT_TRUE(w.walk.empty());
  EXPECT_TRUE(w.filled_prefix.empty());
  EXPECT_TRUE(w.reached_leaf);
  EXPECT_EQ(w.leaf_coloring, discrete);
}

TEST(RandomWalkTest, CycleWalksHaveLengthTwo) {
  const Graph c6 = GenCycle(6);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const WalkResult w = RandomWalk(c6, Coloring::Uniform(6), kCref, 6, seed);
    EXPECT_EQ(w.natural_length, 2);
    EXPECT_TRUE(w.leaf_coloring.IsDiscrete());
    EXPECT_EQ(w.filled_prefix.size(), 6u);
  }
}

TEST(RandomWalkTest, TriangleWalksHaveLengthTwo) {
  const Graph k3 = GenComplete(3);
  for (const auto& ww : EnumerateWalks(k3, Coloring::Uniform(3), kCref, 3,
                                       kDefaultNodeBudget)) {
    EXPECT_EQ(ww.result.natural_length, 2);
  }
}

TEST(RandomWalkTest, DepthBoundValidated) {
  const Graph k3 = GenComplete(3);
  EXPECT_THROW(RandomWalk(k3, Coloring::Uniform(3), kCref, 4, 1),
               InvalidInputError);
  EXPECT_THROW(RandomWalk(k3, Coloring::Uniform(3), kCref, -1, 1),
               InvalidInputError);
}

TEST(RandomWalkTest, Deterministic) {
  const Graph g = GenCsl(13, 3);
  const WalkResult a = RandomWalk(g, Coloring::Uniform(13), kCref, 5, 9, 3);
  const WalkResult b = RandomWalk(g, Coloring::Uniform(13), kCref, 5, 9, 3);
  EXPECT_EQ(a, b);
}

TEST(RandomWalkTest, SmallerBoundIsPrefix) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::RandomTestGraph(rng, 9);
    const int max_d = MaxDepth(g);
    const WalkResult full =
        RandomWalk(g, Initial(g), kCref, max_d, trial, 0);
    for (int d = 0; d <= max_d; ++d) {
      const WalkResult w = RandomWalk(g, Initial(g), kCref, d, trial, 0);
      ASSERT_EQ(static_cast<int>(w.filled_prefix.size()), d);
      ASSERT_TRUE(std::equal(w.walk.begin(), w.walk.end(), full.walk.begin()));
    }
  }
}

// Fill-up: distinct vertices; positions past the natural length follow the
// leaf coloring in increasing order; truncated walks are not filled.
TEST(RandomWalkTest, FillUpRule) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::RandomTestGraph(rng, 9);
    const int d = std::uniform_int_distribution<int>(0, MaxDepth(g))(rng);
    const WalkResult w = RandomWalk(g, Initial(g), kCref, d, trial);
    ASSERT_EQ(static_cast<int>(w.filled_prefix.size()), d);
    std::set<Vertex> distinct(w.filled_prefix.begin(), w.filled_prefix.end());
    ASSERT_EQ(static_cast<int>(distinct.size()), d);
    ASSERT_TRUE(std::equal(w.walk.begin(), w.walk.end(),
                           w.filled_prefix.begin()));
    if (!w.reached_leaf) {
      ASSERT_EQ(w.filled_prefix, w.walk);
      continue;
    }
    for (int i = w.natural_length + 1; i < d; ++i) {
      ASSERT_LT(w.leaf_coloring[w.filled_prefix[i - 1]],
                w.leaf_coloring[w.filled_prefix[i]]);
    }
  }
}

TEST(RandomWalkTest, ObliviousFullDepthIsPermutation) {
  const Graph k4 = GenComplete(4);
  const TreeConfig oref{RefinementKind::kOblivious,
                        SelectorKind::kFirstLargest};
  const auto walks =
      EnumerateWalks(k4, Coloring::Uniform(4), oref, 4, kDefaultNodeBudget);
  ASSERT_EQ(walks.size(), 24u);
  std::set<std::vector<Vertex>> perms;
  for (const auto& w : walks) {
    EXPECT_EQ(w.probability, Probability(1, 24));
    perms.insert(w.result.filled_prefix);
  }
  EXPECT_EQ(perms.size(), 24u);
}

TEST(EnumerateLeavesTest, TriangleHasSixEqualLeaves) {
  const auto leaves = EnumerateLeaves(GenComplete(3), Coloring::Uniform(3),
                                      kCref, kDefaultNodeBudget);
  ASSERT_EQ(leaves.size(), 6u);
  for (const Leaf& leaf : leaves) {
    EXPECT_EQ(leaf.certificate, leaves[0].certificate);
    EXPECT_EQ(leaf.probability, Probability(1, 6));
  }
}

TEST(EnumerateLeavesTest, DiscreteStartHasOneLeaf) {
  const Coloring discrete = Coloring::FromValues(std::vector<int>{0, 1, 2});
  const auto leaves =
      EnumerateLeaves(testing::Path(3), discrete, kCref, kDefaultNodeBudget);
  ASSERT_EQ(leaves.size(), 1u);
  EXPECT_TRUE(leaves[0].path.empty());
  EXPECT_EQ(leaves[0].probability, Probability(1));
}

// Six first choices, then two in the largest remaining cell.
TEST(EnumerateLeavesTest, CycleHasTwelveLeaves) {
  const auto leaves = EnumerateLeaves(GenCycle(6), Coloring::Uniform(6),
                                      kCref, kDefaultNodeBudget);
  ASSERT_EQ(static_cast<int>(leaves.size()), fixtures::kCycleSixLeaves);
  for (const Leaf& leaf : leaves) {
    EXPECT_EQ(leaf.path.size(), 2u);
    EXPECT_EQ(leaf.probability, Probability(1, fixtures::kCycleSixLeaves));
    EXPECT_EQ(leaf.certificate, leaves[0].certificate);
  }
}

TEST(EnumerateLeavesTest, BudgetEnforced) {
  const TreeConfig tref{RefinementKind::kTrivial, SelectorKind::kFirstLargest};
  EXPECT_THROW(
      EnumerateLeaves(GenComplete(8), Coloring::Uniform(8), tref, 1000),
      BudgetExceededError);
}

// Relabeling invariance in small: automorphisms of a vertex-transitive
// graph act regularly on the leaves with equal certificates, and the number
// of distinct leaves with the minimum certificate equals |Aut|.
TEST(EnumerateLeavesTest, MinimumCertificateCountEqualsAutomorphisms) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::RandomTestGraph(rng, 7);
    const auto leaves =
        EnumerateLeaves(g, Initial(g), kCref, kDefaultNodeBudget);
    LeafCertificate best = leaves[0].certificate;
    for (const Leaf& l : leaves) best = std::min(best, l.certificate);
    const auto count = std::count_if(
        leaves.begin(), leaves.end(),
        [&](const Leaf& l) { return l.certificate == best; });
    ASSERT_EQ(count, oracle::BruteForceAutomorphismCount(g));
  }
}

TEST(LeafCertificateTest, SingleVertex) {
  const Graph g = Graph::Create(1, {}, {9});
  const auto cert = MakeLeafCertificate(g, Coloring::Uniform(1),
                                        Coloring::Uniform(1));
  // 4 bytes of n, one byte of adjacency bits, one 8-byte color, one marker.
  EXPECT_EQ(cert.bytes().size(), 4u + 1u + 8u + 1u);
}

TEST(LeafCertificateTest, IsomorphicLeavesAgree) {
  const Graph p = testing::Path(3);
  const Graph q = Relabel(p, std::vector<Vertex>{1, 0, 2});
  const Coloring leaf_p = Coloring::FromValues(std::vector<int>{0, 2, 1});
  // Vertex v of p is vertex sigma(v) of q and keeps its leaf color.
  const Coloring leaf_q = Coloring::FromValues(std::vector<int>{2, 0, 1});
  EXPECT_EQ(MakeLeafCertificate(p, Coloring::Uniform(3), leaf_p),
            MakeLeafCertificate(q, Coloring::Uniform(3), leaf_q));
  EXPECT_NE(MakeLeafCertificate(p, Coloring::Uniform(3), leaf_p),
            MakeLeafCertificate(GenComplete(3), Coloring::Uniform(3), leaf_p));
}

TEST(LeafCertificateTest, RequiresDiscreteLeaf) {
  EXPECT_THROW(MakeLeafCertificate(testing::Path(3), Coloring::Uniform(3),
                                   Coloring::Uniform(3)),
               InvalidInputError);
}

TEST(IsomorphicTest, Examples) {
  EXPECT_FALSE(Isomorphic(GenCycle(6), testing::TwoTriangles()));
  EXPECT_FALSE(Isomorphic(GenComplete(3), testing::Path(3)));
  const Graph g = GenCsl(13, 3);
  std::mt19937_64 rng(3);
  EXPECT_TRUE(Isomorphic(g, Relabel(g, testing::RandomPermutation(rng, 13))));
}

TEST(IsomorphicTest, AgreesWithBruteForce) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    const Graph a = testing::RandomGraph(rng, n, 0.5, 2);
    const Graph b = trial % 2 == 0
                        ? Relabel(a, testing::RandomPermutation(rng, n))
                        : testing::RandomGraph(rng, n, 0.5, 2);
    ASSERT_EQ(Isomorphic(a, b), oracle::BruteForceIsomorphic(a, b));
  }
}

TEST(PlanarSelectorTest, PlatonicSolidsDiscreteWithinFour) {
  const TreeConfig planar{RefinementKind::kColorRefinement,
                          SelectorKind::kPlanarMinDegree};
  for (const char* name : {"tetrahedron", "cube", "octahedron",
                           "dodecahedron", "icosahedron"}) {
    const Graph g = GenPlatonic(name);
    const auto walks = EnumerateWalks(g, Initial(g), planar, MaxDepth(g),
                                      kDefaultNodeBudget);
    for (const auto& w : walks) {
      EXPECT_TRUE(w.result.reached_leaf) << name;
      EXPECT_LE(w.result.natural_length, 4) << name;
    }
  }
}

TEST(PlanarSelectorTest, MixedDegreeCellIsAnError) {
  const Graph p = testing::Path(3);
  EXPECT_THROW(
      SelectCell(SelectorKind::kPlanarMinDegree, p, Coloring::Uniform(3), {}),
      std::logic_error);
}

TEST(SelectorKindTest, NamesRoundTrip) {
  for (auto kind : {SelectorKind::kFirstLargest, SelectorKind::kPlanarMinDegree}) {
    EXPECT_EQ(ParseSelectorKind(SelectorName(kind)), kind);
  }
}

}  // namespace
}  // namespace irni
