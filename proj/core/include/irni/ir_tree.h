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

#ifndef IRNI_IR_TREE_H_
#define IRNI_IR_TREE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "irni/coloring.h"
#include "irni/graph.h"
#include "irni/probability.h"
#include "irni/refinement.h"

namespace irni {

enum class SelectorKind {
  // Largest non-singleton cell, ties to the smallest color.
  kFirstLargest,
  // First a minimum-degree cell, then cells made only of neighbors of the
  // first individualized vertex, then kFirstLargest. Meant for CRef on
  // 3-connected planar graphs.
  kPlanarMinDegree,
};

std::string_view SelectorName(SelectorKind kind);  // "first-largest", "planar"
std::optional<SelectorKind> ParseSelectorKind(std::string_view name);

// The shape of an IR tree: which refinement runs at each node and which
// cell the node branches on.
struct TreeConfig {
  RefinementKind refinement = RefinementKind::kColorRefinement;
  SelectorKind selector = SelectorKind::kFirstLargest;
};

// Vertices of cell `color` that may be individualized: subdivision vertices
// are never branched on. Ascending.
std::vector<Vertex> BranchVertices(const Graph& g, const Coloring& pi,
                                   Color color);

// The cell to branch on at tree node `nu` whose refined coloring is `pi`, or
// nullopt if `nu` is a leaf. A cell qualifies if it is non-singleton and has
// at least one non-subdivision vertex. `nu` is needed by kPlanarMinDegree to
// find its anchor.
std::optional<Color> SelectCell(SelectorKind kind, const Graph& g,
                                const Coloring& pi,
                                std::span<const Vertex> nu);

// One child sequence per branch vertex of the selected cell; empty at
// leaves. `pi` is the initial coloring of the tree, not the node's coloring.
std::vector<IndividualizationSeq> Children(const Graph& g, const Coloring& pi,
                                           std::span<const Vertex> nu,
                                           const TreeConfig& config);

struct WalkResult {
  // The individualizations performed, at most the depth bound.
  IndividualizationSeq walk;
  // Refine(g, pi, walk).
  Coloring leaf_coloring;
  // `walk` extended to exactly the depth bound when the walk ended in a
  // leaf early: remaining non-subdivision vertices in increasing
  // leaf_coloring order. Equals `walk` when truncated.
  std::vector<Vertex> filled_prefix;
  // walk.size().
  int natural_length = 0;
  bool reached_leaf = false;

  friend bool operator==(const WalkResult&, const WalkResult&) = default;
};

// Number of vertices a walk can individualize (non-subdivision vertices).
int MaxDepth(const Graph& g);

// A uniform random root-to-leaf walk of the IR tree, stopped after
// `depth_bound` individualizations. The i-th choice is drawn from
// CounterRng(seed, stream) at counter i, so a walk with a smaller bound is a
// prefix of one with a larger bound. Throws InvalidInputError if
// depth_bound < 0 or depth_bound > MaxDepth(g).
WalkResult RandomWalk(const Graph& g, const Coloring& pi,
                      const TreeConfig& config, int depth_bound,
                      std::uint64_t seed, std::uint64_t stream = 0);

struct WeightedWalk {
  WalkResult result;
  // Product of 1/|branch set| along the path.
  Probability probability;
};

// Every outcome of RandomWalk() with its exact probability, by depth-first
// traversal. Throws BudgetExceededError once more than `node_budget` tree
// nodes would be visited.
std::vector<WeightedWalk> EnumerateWalks(const Graph& g, const Coloring& pi,
                                         const TreeConfig& config,
                                         int depth_bound,
                                         std::int64_t node_budget);

// Canonical form of (g, initial colors) relabeled by a discrete leaf
// coloring: the vertex with leaf color r becomes vertex r. Holds the vertex
// count, the adjacency matrix bits row-major, the relabeled initial colors,
// and the relabeled subdivision markers. Leaves related by an isomorphism
// get equal certificates.
class LeafCertificate {
 public:
  LeafCertificate() = default;
  explicit LeafCertificate(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }

  friend auto operator<=>(const LeafCertificate&,
                          const LeafCertificate&) = default;

 private:
  std::string bytes_;
};

// Throws InvalidInputError unless `leaf_coloring` is discrete.
LeafCertificate MakeLeafCertificate(const Graph& g,
                                    std::span<const RawColor> initial_colors,
                                    const Coloring& leaf_coloring);
LeafCertificate MakeLeafCertificate(const Graph& g, const Coloring& pi,
                                    const Coloring& leaf_coloring);

struct Leaf {
  IndividualizationSeq path;
  Coloring coloring;
  LeafCertificate certificate;
  Probability probability;
};

// All leaves of the IR tree with certificates (taken against `pi`) and
// exact reach probabilities. Intended for n up to about 10.
std::vector<Leaf> EnumerateLeaves(const Graph& g, const Coloring& pi,
                                  const TreeConfig& config,
                                  std::int64_t node_budget);

inline constexpr std::int64_t kDefaultNodeBudget = 2'000'000;

// Exact isomorphism test for small graphs: compares the smallest leaf
// certificate of each IR tree under (CRef, FirstLargest). Base colors and
// subdivision markers must correspond too.
bool Isomorphic(const Graph& a, const Graph& b,
                std::int64_t node_budget = kDefaultNodeBudget);

}  // namespace irni

#endif  // IRNI_IR_TREE_H_
