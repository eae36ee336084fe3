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

#include "irni/augment.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "irni/errors.h"
#include "irni/refinement.h"
#include "irni/rng.h"

namespace irni {

std::string_view MethodName(AugmentMethod method) {
  switch (method) {
    case AugmentMethod::kNone:
      return "none";
    case AugmentMethod::kIrni:
      return "irni";
    case AugmentMethod::kRni:
      return "rni";
    case AugmentMethod::kClip:
      return "clip";
    case AugmentMethod::kRp:
      return "rp";
  }
  return "";
}

std::optional<AugmentMethod> ParseMethod(std::string_view name) {
  for (AugmentMethod m : {AugmentMethod::kNone, AugmentMethod::kIrni,
                          AugmentMethod::kRni, AugmentMethod::kClip,
                          AugmentMethod::kRp}) {
    if (MethodName(m) == name) return m;
  }
  return std::nullopt;
}

std::optional<RniDistribution::Kind> ParseRniKind(std::string_view name) {
  using Kind = RniDistribution::Kind;
  if (name == "uniform") return Kind::kUniform;
  if (name == "normal") return Kind::kNormal;
  if (name == "discrete") return Kind::kDiscreteUniform;
  if (name == "constant") return Kind::kConstant;
  return std::nullopt;
}

AugmentationSample IndicatorSample(int num_vertices,
                                   std::span<const Vertex> prefix) {
  AugmentationSample sample;
  sample.num_vertices = num_vertices;
  sample.width = static_cast<int>(prefix.size());
  sample.walk.assign(prefix.begin(), prefix.end());
  sample.features.assign(static_cast<std::size_t>(num_vertices) * prefix.size(),
                         0.0);
  for (std::size_t j = 0; j < prefix.size(); ++j) {
    sample.features[static_cast<std::size_t>(prefix[j]) * prefix.size() + j] =
        1.0;
  }
  return sample;
}

AugmentationSample IrniFeatures(const Graph& g, const Coloring& pi,
                                const AugmentConfig& cfg,
                                std::uint64_t sample_index) {
  if (cfg.d < 1) {
    throw InvalidInputError("IRNI needs d >= 1, got " + std::to_string(cfg.d));
  }
  if (cfg.d > MaxDepth(g)) {
    throw InvalidInputError("IRNI needs d <= " + std::to_string(MaxDepth(g)) +
                            ", got " + std::to_string(cfg.d));
  }
  const WalkResult walk =
      RandomWalk(g, pi, cfg.tree, cfg.d, cfg.seed, sample_index);
  AugmentationSample sample = IndicatorSample(g.num_vertices(), walk.filled_prefix);
  sample.method = AugmentMethod::kIrni;
  sample.seed = cfg.seed;
  sample.sample_index = sample_index;
  return sample;
}

AugmentationSample RniFeatures(const Graph& g, const AugmentConfig& cfg,
                               std::uint64_t sample_index) {
  if (cfg.d < 1) {
    throw InvalidInputError("RNI needs d >= 1, got " + std::to_string(cfg.d));
  }
  using Kind = RniDistribution::Kind;
  const RniDistribution& dist = cfg.rni;
  if ((dist.kind == Kind::kUniform || dist.kind == Kind::kDiscreteUniform) &&
      !(dist.a <= dist.b)) {
    throw InvalidInputError("RNI distribution needs a <= b");
  }
  if (dist.kind == Kind::kNormal && !(dist.b >= 0.0)) {
    throw InvalidInputError("RNI normal distribution needs stddev >= 0");
  }
  const CounterRng rng(cfg.seed, sample_index);
  AugmentationSample sample;
  sample.method = AugmentMethod::kRni;
  sample.seed = cfg.seed;
  sample.sample_index = sample_index;
  sample.num_vertices = g.num_vertices();
  sample.width = cfg.d;
  const std::size_t total = static_cast<std::size_t>(g.num_vertices()) * cfg.d;
  sample.features.resize(total);
  for (std::size_t i = 0; i < total; ++i) {
    double x = dist.a;
    switch (dist.kind) {
      case Kind::kUniform:
        x = dist.a + (dist.b - dist.a) * rng.UniformUnit(i);
        break;
      case Kind::kNormal: {
        // Box-Muller; 1 - u keeps the logarithm finite.
        const double radius = std::sqrt(-2.0 * std::log(1.0 - rng.UniformUnit(i, 0)));
        const double angle = 2.0 * std::numbers::pi * rng.UniformUnit(i, 1);
        x = dist.a + dist.b * radius * std::cos(angle);
        break;
      }
      case Kind::kDiscreteUniform: {
        const double lo = std::ceil(dist.a);
        const double hi = std::floor(dist.b);
        if (lo > hi) throw InvalidInputError("RNI discrete range is empty");
        x = lo + static_cast<double>(
                     rng.UniformInt(static_cast<std::uint64_t>(hi - lo) + 1, i));
        break;
      }
      case Kind::kConstant:
        break;
    }
    sample.features[i] = x;
  }
  return sample;
}

AugmentationSample RpFeatures(const Graph& g, std::uint64_t seed,
                              std::uint64_t sample_index) {
  const TreeConfig oblivious{RefinementKind::kOblivious,
                             SelectorKind::kFirstLargest};
  const WalkResult walk =
      RandomWalk(g, Coloring::Uniform(g.num_vertices()), oblivious,
                 MaxDepth(g), seed, sample_index);
  AugmentationSample sample = IndicatorSample(g.num_vertices(), walk.filled_prefix);
  sample.method = AugmentMethod::kRp;
  sample.seed = seed;
  sample.sample_index = sample_index;
  return sample;
}

AugmentationSample ClipFeatures(const Graph& g, const Coloring& pi,
                                std::uint64_t seed, std::uint64_t sample_index,
                                int width) {
  const Coloring refined = ColorRefine(g, pi);
  auto cells = refined.Cells();
  int largest = 0;
  for (const auto& cell : cells) {
    largest = std::max(largest, static_cast<int>(cell.size()));
  }
  if (width == 0) width = largest;
  if (width < largest) {
    throw InvalidInputError("CLIP width " + std::to_string(width) +
                            " is smaller than the largest cell (" +
                            std::to_string(largest) + ")");
  }
  const CounterRng rng(seed, sample_index);
  const int n = g.num_vertices();
  std::vector<int> index(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < cells.size(); ++c) {
    auto& cell = cells[c];
    // Fisher-Yates; draw (c, i) decides position i of cell c.
    for (std::size_t i = cell.size(); i-- > 1;) {
      const std::uint64_t counter = (static_cast<std::uint64_t>(c) << 32) | i;
      std::swap(cell[i], cell[rng.UniformInt(i + 1, counter)]);
    }
    for (std::size_t i = 0; i < cell.size(); ++i) {
      index[cell[i]] = static_cast<int>(i);
      order.push_back(cell[i]);
    }
  }
  AugmentationSample sample;
  sample.method = AugmentMethod::kClip;
  sample.seed = seed;
  sample.sample_index = sample_index;
  sample.walk = std::move(order);
  sample.num_vertices = n;
  sample.width = width;
  sample.features.assign(static_cast<std::size_t>(n) * width, 0.0);
  for (Vertex v = 0; v < n; ++v) {
    sample.features[static_cast<std::size_t>(v) * width + index[v]] = 1.0;
  }
  return sample;
}

AugmentationSample Augment(const Graph& g, const Coloring& pi,
                           const AugmentConfig& cfg,
                           std::uint64_t sample_index) {
  switch (cfg.method) {
    case AugmentMethod::kNone: {
      AugmentationSample sample;
      sample.seed = cfg.seed;
      sample.sample_index = sample_index;
      sample.num_vertices = g.num_vertices();
      return sample;
    }
    case AugmentMethod::kIrni:
      return IrniFeatures(g, pi, cfg, sample_index);
    case AugmentMethod::kRni:
      return RniFeatures(g, cfg, sample_index);
    case AugmentMethod::kClip:
      return ClipFeatures(g, pi, cfg.seed, sample_index, cfg.clip_width);
    case AugmentMethod::kRp:
      return RpFeatures(g, cfg.seed, sample_index);
  }
  throw InvalidInputError("unknown augmentation method");
}

std::vector<AugmentationSample> EorSamples(const Graph& g, const Coloring& pi,
                                           const AugmentConfig& cfg, int e) {
  if (e < 1) {
    throw InvalidInputError("ensemble size must be >= 1, got " +
                            std::to_string(e));
  }
  std::vector<AugmentationSample> samples;
  samples.reserve(static_cast<std::size_t>(e));
  for (int i = 1; i <= e; ++i) {
    samples.push_back(Augment(g, pi, cfg, static_cast<std::uint64_t>(i)));
  }
  return samples;
}

}  // namespace irni
