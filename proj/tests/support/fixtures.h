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

#ifndef IRNI_TESTS_SUPPORT_FIXTURES_H_
#define IRNI_TESTS_SUPPORT_FIXTURES_H_

#include "irni/datasets.h"
#include "irni/graph.h"

// Ground truth computed once with the brute-force oracles and frozen here.
namespace irni::fixtures {

// CSL(13, 2) vs CSL(13, 3) under d-IRNI(CRef): inseparable at d = 0, and
// a single individualization already separates with certainty. Confirmed by
// the naive union refinement oracle (both graphs are vertex transitive).
inline constexpr int kCslSmallestSeparatingDepth = 1;
inline constexpr int kCslSeparationProbability = 1;

// Leaves of the (CRef, FirstLargest) tree of C6: six first choices, then
// two in the largest remaining cell.
inline constexpr int kCycleSixLeaves = 12;

// Two triangles plus a hexagon vs two hexagons: 1-IRNI(CRef) separates iff
// the walk starts in a triangle, which happens with probability 1/2.
inline Graph TrianglesAndHexagon() {
  return DisjointUnion(DisjointUnion(GenCycle(3), GenCycle(3)), GenCycle(6));
}
inline Graph TwoHexagons() { return DisjointUnion(GenCycle(6), GenCycle(6)); }

}  // namespace irni::fixtures

#endif  // IRNI_TESTS_SUPPORT_FIXTURES_H_
