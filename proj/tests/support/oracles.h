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

#ifndef IRNI_TESTS_SUPPORT_ORACLES_H_
#define IRNI_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <vector>

#include "irni/graph.h"

// Brute-force reference implementations. They share no code with the
// library beyond the Graph container and are only fit for small inputs.
namespace irni::oracle {

// A partition as sorted cells of sorted vertices.
using Partition = std::vector<std::vector<Vertex>>;

// Iterates the naive refinement rule
//   c'(v) = (c(v), sorted multiset of c(u) over neighbors u)
// from `initial` until the number of colors stops growing. Returns the
// final color of every vertex, named by rank of its key.
std::vector<int> NaiveStableColors(const Graph& g,
                                   const std::vector<std::int64_t>& initial);

Partition NaiveStablePartition(const Graph& g,
                               const std::vector<std::int64_t>& initial);

Partition ToPartition(const std::vector<int>& colors);

// True iff color refinement distinguishes (a, ca) from (b, cb): runs the
// naive rule on the disjoint union and compares the color counts of the two
// halves.
bool NaiveCrDistinguishes(const Graph& a, const std::vector<std::int64_t>& ca,
                          const Graph& b, const std::vector<std::int64_t>& cb);

// Tries all n! bijections. Base colors and subdivision markers must match.
bool BruteForceIsomorphic(const Graph& a, const Graph& b);

// Number of automorphisms preserving base colors, by trying all n!
// permutations.
std::int64_t BruteForceAutomorphismCount(const Graph& g);

// Adjacency matrix check; independent of the CSR layout.
bool HasEdgeSlow(const Graph& g, Vertex u, Vertex v);

}  // namespace irni::oracle

#endif  // IRNI_TESTS_SUPPORT_ORACLES_H_
