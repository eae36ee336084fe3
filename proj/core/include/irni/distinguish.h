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

#ifndef IRNI_DISTINGUISH_H_
#define IRNI_DISTINGUISH_H_

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "irni/augment.h"
#include "irni/graph.h"
#include "irni/ir_tree.h"
#include "irni/probability.h"

namespace irni {

// Training-free stand-in for an MPNN: two augmented graphs count as
// separated iff color refinement tells them apart. Color refinement bounds
// what any message passing network can distinguish.

// Per-vertex initial keys. Vertices with equal key tuples start with equal
// colors; keys are compared across graphs.
using VertexKeys = std::vector<std::vector<std::uint64_t>>;

// Multiset of (signature, cell size) over the cells of the stable coloring,
// sorted. Signatures are iterated naive-refinement keys after n rounds, so
// two colored graphs have equal histograms iff color refinement cannot
// distinguish them (up to 64-bit hash collisions; see SignatureTable).
struct CrHistogram {
  std::vector<std::pair<std::uint64_t, int>> cells;

  friend auto operator<=>(const CrHistogram&, const CrHistogram&) = default;
};

// Collision-free signatures: interns every key, so histograms built against
// one shared table compare exactly. Slower than hashing.
class SignatureTable {
 public:
  std::uint64_t Intern(const std::vector<std::uint64_t>& key);
  std::size_t size() const { return ids_.size(); }

 private:
  std::map<std::vector<std::uint64_t>, std::uint64_t> ids_;
};

// Hashes signatures when `exact` is null, otherwise interns them in it.
CrHistogram ComputeCrHistogram(const Graph& g, const VertexKeys& initial,
                               SignatureTable* exact = nullptr);
// Keys are the graph's base colors.
CrHistogram ComputeCrHistogram(const Graph& g, SignatureTable* exact = nullptr);

// (base color, appended row...) per vertex. Indicator rows only.
VertexKeys AugmentedKeys(const Graph& g, const AugmentationSample& sample);

struct SeparationEstimate {
  double probability = 0.0;
  int trials = 0;
  int separated = 0;
};

// Monte Carlo: over `trials` independent sample pairs (sample 2t+1 for `a`,
// 2t+2 for `b`), the fraction whose augmented histograms differ. Graphs of
// different sizes are separated outright. RNI is rejected with
// UnsupportedMethodError: real-valued features separate every vertex. With
// `verify`, histograms use exact signatures.
SeparationEstimate DistinguishProbability(const Graph& a, const Graph& b,
                                          const AugmentConfig& cfg, int trials,
                                          bool verify = false);

// Exact distribution of the augmented histogram over all random draws:
// IR-tree walk enumeration for IRNI and RP, all per-cell bijections for
// CLIP. Throws BudgetExceededError beyond `node_budget` outcomes.
std::map<CrHistogram, Probability> HistogramDistribution(
    const Graph& g, const AugmentConfig& cfg, std::int64_t node_budget,
    SignatureTable* exact = nullptr);

// Exact probability that independent draws for `a` and `b` give different
// histograms: 1 - sum_h P_a(h) P_b(h).
Probability ExactDistinguish(const Graph& a, const Graph& b,
                             const AugmentConfig& cfg,
                             std::int64_t node_budget = kDefaultNodeBudget,
                             bool verify = false);

// Total variation distance between the two histogram distributions: the
// smallest separation probability over all couplings of the draws. Zero for
// isomorphic inputs, whereas ExactDistinguish() of a graph with itself is
// 1 - sum_h P(h)^2 whenever the histogram is not deterministic.
Probability HistogramTotalVariation(
    const Graph& a, const Graph& b, const AugmentConfig& cfg,
    std::int64_t node_budget = kDefaultNodeBudget, bool verify = false);

// Exact probability that at least one of `e` independent sample pairs is
// separated, by enumerating every e-tuple of histogram pairs.
Probability ExactEnsembleDistinguish(
    const Graph& a, const Graph& b, const AugmentConfig& cfg, int e,
    std::int64_t node_budget = kDefaultNodeBudget);

}  // namespace irni

#endif  // IRNI_DISTINGUISH_H_
