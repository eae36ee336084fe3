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

#ifndef IRNI_DATASETS_H_
#define IRNI_DATASETS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "irni/graph.h"

namespace irni {

// Circulant skip-link graph: the n-cycle plus chords i ~ i + skip (mod n).
// Requires n >= 5, 2 <= skip <= n - 2 and gcd(skip, n) = 1. The classic
// benchmark uses n = 41.
Graph GenCsl(int n, int skip);

// i ~ i + j (mod n) for every jump j. Jumps must lie in 1..n-1; a jump and
// its negation give the same edges.
Graph GenCirculant(int n, const std::vector<int>& jumps);

Graph GenCycle(int n);     // n >= 3
Graph GenComplete(int n);  // n >= 1

// Erdos-Renyi G(n, p). Edge {u, v} is present iff draw (u, v) of
// CounterRng(seed, stream) falls below p.
Graph GenGnp(int n, double p, std::uint64_t seed, std::uint64_t stream = 0);

// Uniform over simple d-regular graphs: configuration (pairing) model,
// resampled until there are no loops or multi-edges.
Graph GenRandomRegular(int n, int degree, std::uint64_t seed,
                       std::uint64_t stream = 0);

// "tetrahedron", "cube", "octahedron", "dodecahedron" or "icosahedron".
Graph GenPlatonic(std::string_view name);

// Exact triangle count by sorted neighbor-list intersection.
std::int64_t CountTriangles(const Graph& g);

// Parameters for batch generation; which fields matter depends on `family`.
struct GraphFamilySpec {
  // csl | cycle | complete | circulant | random_gnp | random_regular |
  // platonic
  std::string family;
  int n = 0;
  int skip = 0;
  std::vector<int> jumps;
  double p = 0.5;
  int degree = 3;
  std::string name;
  std::uint64_t seed = 0;
  // Number of graphs; only random families produce distinct ones.
  int count = 1;
  // Each output is the disjoint union of this many copies.
  int copies = 1;
};

std::vector<Graph> Generate(const GraphFamilySpec& spec);

// "<family>/<params>", e.g. "csl/n41_skip9".
std::string FamilyDirectory(const GraphFamilySpec& spec);

// Writes <out_dir>/<family>/<params>/<index>.graph for every generated graph
// and returns the paths.
std::vector<std::string> WriteFamily(const GraphFamilySpec& spec,
                                     const std::string& out_dir);

}  // namespace irni

#endif  // IRNI_DATASETS_H_
