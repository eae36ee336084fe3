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

#ifndef IRNI_REFINEMENT_H_
#define IRNI_REFINEMENT_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "irni/coloring.h"
#include "irni/graph.h"

namespace irni {

// The refinement functions Ref(G, pi, nu) used to build IR trees.
enum class RefinementKind {
  kColorRefinement,  // CRef: coarsest equitable coloring
  kTrivial,          // TRef: individualize only
  kOblivious,        // ORef: TRef on the uniform coloring
  kColorThenTrivial  // CTRef: TRef(CRef(pi, ()), nu)
};

// An ordered sequence of pairwise distinct vertices.
using IndividualizationSeq = std::vector<Vertex>;

std::string_view RefinementName(RefinementKind kind);  // "cref", ...
std::optional<RefinementKind> ParseRefinementKind(std::string_view name);

// Moves every vertex of `nu` into a fresh singleton color above all colors
// of `pi`, ordered by position in `nu`, and compacts. Throws
// InvalidInputError for out-of-range or repeated vertices.
Coloring Individualize(const Coloring& pi, std::span<const Vertex> nu);

// The coarsest equitable coloring finer than Individualize(pi, nu).
//
// Worklist partition refinement over an ordered partition: cells are
// contiguous ranges, a cell's color is its position, a split keeps fragments
// inside the parent's range ordered by neighbor count, and after the first
// round only all-but-the-largest fragment is re-queued. Every decision
// depends on positions and counts only, so the resulting color names are
// isomorphism invariant, not just the partition. O((n + m) log^2 n).
Coloring ColorRefine(const Graph& g, const Coloring& pi,
                     std::span<const Vertex> nu = {});

// Splits every subdivision vertex off by the colors of its two endpoints: the
// vertex stands for an edge, so the edge's endpoints name it. Identity on
// graphs without subdivision vertices. TRef, ORef and CTRef apply this after
// individualizing, so their leaves are discrete once every original vertex
// is individualized. (CRef does this and more on its own.)
Coloring SplitSubdivisionVertices(const Graph& g, const Coloring& pi);

Coloring TrivialRefine(const Graph& g, const Coloring& pi,
                       std::span<const Vertex> nu);
Coloring ObliviousRefine(const Graph& g, const Coloring& pi,
                         std::span<const Vertex> nu);
Coloring ColorThenTrivialRefine(const Graph& g, const Coloring& pi,
                                std::span<const Vertex> nu);

Coloring Refine(RefinementKind kind, const Graph& g, const Coloring& pi,
                std::span<const Vertex> nu = {});

// Every i-colored vertex has the same number of j-colored neighbors, for all
// colors i and j.
bool IsEquitable(const Graph& g, const Coloring& pi);

}  // namespace irni

#endif  // IRNI_REFINEMENT_H_
