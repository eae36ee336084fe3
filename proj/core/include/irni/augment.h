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

#ifndef IRNI_AUGMENT_H_
#define IRNI_AUGMENT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "irni/coloring.h"
#include "irni/graph.h"
#include "irni/ir_tree.h"

namespace irni {

inline constexpr std::uint64_t kDefaultSeed = 42;

enum class AugmentMethod {
  kNone,  // no appended features
  kIrni,  // d indicator columns from a random IR walk
  kRni,   // d random values per vertex
  kClip,  // one-hot of a random index within the vertex's refined cell
  kRp,    // one-hot of the vertex's image under a random permutation
};

std::string_view MethodName(AugmentMethod method);  // "none", "irni", ...
std::optional<AugmentMethod> ParseMethod(std::string_view name);

// Distribution of RNI values.
struct RniDistribution {
  enum class Kind {
    kUniform,          // uniform on [a, b)
    kNormal,           // mean a, standard deviation b
    kDiscreteUniform,  // integers in [a, b]
    kConstant,         // always a
  };
  Kind kind = Kind::kUniform;
  double a = 0.0;
  double b = 1.0;
};

std::optional<RniDistribution::Kind> ParseRniKind(std::string_view name);

struct AugmentConfig {
  AugmentMethod method = AugmentMethod::kIrni;
  // Appended dimensions for IRNI and RNI.
  int d = 1;
  // IR tree used by IRNI. CLIP always uses CTRef and RP always ORef.
  TreeConfig tree;
  RniDistribution rni;
  // CLIP one-hot width; 0 means the largest refined cell of the graph.
  int clip_width = 0;
  std::uint64_t seed = kDefaultSeed;
};

// Appended per-vertex features of one random draw, kept apart from the
// vertex's own features.
struct AugmentationSample {
  AugmentMethod method = AugmentMethod::kNone;
  std::uint64_t seed = 0;
  std::uint64_t sample_index = 0;
  // IRNI: the filled prefix. RP: the random permutation as a sequence.
  // CLIP: vertices ordered by (refined cell, assigned index). RNI: empty.
  std::vector<Vertex> walk;
  int num_vertices = 0;
  int width = 0;
  std::vector<double> features;  // row-major, num_vertices x width

  std::span<const double> Row(Vertex v) const {
    return std::span<const double>(features).subspan(
        static_cast<std::size_t>(v) * width, width);
  }
  double at(Vertex v, int column) const {
    return features[static_cast<std::size_t>(v) * width + column];
  }

  friend bool operator==(const AugmentationSample&,
                         const AugmentationSample&) = default;
};

// Indicator block of a vertex sequence: column j is 1 exactly at prefix[j].
AugmentationSample IndicatorSample(int num_vertices,
                                   std::span<const Vertex> prefix);

// d-IRNI: runs RandomWalk(g, pi, cfg.tree, cfg.d, cfg.seed, sample_index).
// Requires 1 <= cfg.d <= MaxDepth(g).
AugmentationSample IrniFeatures(const Graph& g, const Coloring& pi,
                                const AugmentConfig& cfg,
                                std::uint64_t sample_index = 1);

// n * d independent draws; the graph is consulted for its size only.
AugmentationSample RniFeatures(const Graph& g, const AugmentConfig& cfg,
                               std::uint64_t sample_index = 1);

// A full-depth walk under ORef: a uniform random permutation of the
// non-subdivision vertices as a permutation matrix.
AugmentationSample RpFeatures(const Graph& g, std::uint64_t seed,
                              std::uint64_t sample_index = 1);

// Color refinement, then a uniform random bijection of every cell C onto
// {0, ..., |C|-1}, one-hot encoded. `width` 0 means the largest cell size;
// otherwise it must be at least that.
AugmentationSample ClipFeatures(const Graph& g, const Coloring& pi,
                                std::uint64_t seed,
                                std::uint64_t sample_index = 1,
                                int width = 0);

// Dispatches on cfg.method.
AugmentationSample Augment(const Graph& g, const Coloring& pi,
                           const AugmentConfig& cfg,
                           std::uint64_t sample_index = 1);

// Ensembling over randomness: samples 1..e, where sample i is
// Augment(g, pi, cfg, i). Requires e >= 1.
std::vector<AugmentationSample> EorSamples(const Graph& g, const Coloring& pi,
                                           const AugmentConfig& cfg, int e);

}  // namespace irni

#endif  // IRNI_AUGMENT_H_
