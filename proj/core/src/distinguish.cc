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

#include "irni/distinguish.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "irni/errors.h"
#include "irni/refinement.h"
#include "irni/rng.h"

namespace irni {
namespace {

constexpr std::uint64_t kInitialTag = 0x6972'6e69'2d68'6973ULL;

std::uint64_t HashKey(std::span<const std::uint64_t> key) {
  std::uint64_t h = Mix64(key.size());
  for (std::uint64_t x : key) h = HashCombine(h, x);
  return h;
}

std::uint64_t Signature(const std::vector<std::uint64_t>& key,
                        SignatureTable* exact) {
  return exact != nullptr ? exact->Intern(key) : HashKey(key);
}

// IRNI with d = 0 appends nothing.
AugmentConfig Normalized(const AugmentConfig& cfg) {
  AugmentConfig out = cfg;
  if (out.method == AugmentMethod::kIrni && out.d == 0) {
    out.method = AugmentMethod::kNone;
  }
  if (out.method == AugmentMethod::kRni) {
    throw UnsupportedMethodError(
        "RNI has no histogram surrogate: real-valued features separate every "
        "vertex");
  }
  return out;
}

void AddToDistribution(std::map<CrHistogram, Probability>& dist,
                       CrHistogram histogram, const Probability& p) {
  auto [it, inserted] = dist.try_emplace(std::move(histogram), p);
  if (!inserted) it->second += p;
}

// All bijections of every cell onto 0..|C|-1, one cell after another.
class ClipEnumerator {
 public:
  ClipEnumerator(const Graph& g, std::vector<std::vector<Vertex>> cells,
                 int width, SignatureTable* exact,
                 std::map<CrHistogram, Probability>& out)
      : g_(g), cells_(std::move(cells)), width_(width), exact_(exact), out_(out) {
    for (auto& cell : cells_) std::sort(cell.begin(), cell.end());
    index_.assign(static_cast<std::size_t>(g.num_vertices()), 0);
  }

  void Run(const Probability& each) {
    each_ = each;
    Visit(0);
  }

 private:
  void Visit(std::size_t c) {
    if (c == cells_.size()) {
      AugmentationSample sample;
      sample.num_vertices = g_.num_vertices();
      sample.width = width_;
      sample.features.assign(static_cast<std::size_t>(g_.num_vertices()) * width_,
                             0.0);
      for (Vertex v = 0; v < g_.num_vertices(); ++v) {
        sample.features[static_cast<std::size_t>(v) * width_ + index_[v]] = 1.0;
      }
      AddToDistribution(out_,
                        ComputeCrHistogram(g_, AugmentedKeys(g_, sample), exact_),
                        each_);
      return;
    }
    std::vector<Vertex> cell = cells_[c];
    do {
      for (std::size_t i = 0; i < cell.size(); ++i) {
        index_[cell[i]] = static_cast<int>(i);
      }
      Visit(c + 1);
    } while (std::next_permutation(cell.begin(), cell.end()));
  }

  const Graph& g_;
  std::vector<std::vector<Vertex>> cells_;
  int width_;
  SignatureTable* exact_;
  std::map<CrHistogram, Probability>& out_;
  std::vector<int> index_;
  Probability each_;
};

}  // namespace

std::uint64_t SignatureTable::Intern(const std::vector<std::uint64_t>& key) {
  return ids_.try_emplace(key, ids_.size()).first->second;
}

CrHistogram ComputeCrHistogram(const Graph& g, const VertexKeys& initial,
                               SignatureTable* exact) {
  const int n = g.num_vertices();
  if (static_cast<int>(initial.size()) != n) {
    throw InvalidInputError("expected one initial key per vertex");
  }
  CrHistogram histogram;
  if (n == 0) return histogram;

  std::vector<int> rank(static_cast<std::size_t>(n));
  {
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](Vertex x, Vertex y) { return initial[x] < initial[y]; });
    int r = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && initial[order[i]] != initial[order[i - 1]]) ++r;
      rank[order[i]] = r;
    }
  }
  const Coloring stable = ColorRefine(g, Coloring::FromValues(rank));

  // Equitable, so every vertex of a cell sees the same neighbor counts and
  // the iteration can run on the quotient graph.
  const int k = stable.num_cells();
  std::vector<Vertex> rep(static_cast<std::size_t>(k), -1);
  std::vector<int> size(static_cast<std::size_t>(k), 0);
  for (Vertex v = 0; v < n; ++v) {
    if (rep[stable[v]] < 0) rep[stable[v]] = v;
    ++size[stable[v]];
  }
  std::vector<std::vector<std::pair<Color, int>>> quotient(
      static_cast<std::size_t>(k));
  std::vector<std::uint64_t> signature(static_cast<std::size_t>(k));
  for (Color c = 0; c < k; ++c) {
    std::map<Color, int> counts;
    for (Vertex w : g.Neighbors(rep[c])) ++counts[stable[w]];
    quotient[c].assign(counts.begin(), counts.end());
    std::vector<std::uint64_t> key = {kInitialTag};
    key.insert(key.end(), initial[rep[c]].begin(), initial[rep[c]].end());
    signature[c] = Signature(key, exact);
  }

  std::vector<std::uint64_t> next(static_cast<std::size_t>(k));
  std::vector<std::pair<std::uint64_t, std::uint64_t>> seen;
  std::vector<std::uint64_t> key;
  for (int round = 1; round <= n; ++round) {
    for (Color c = 0; c < k; ++c) {
      seen.clear();
      for (auto [neighbor, count] : quotient[c]) {
        seen.emplace_back(signature[neighbor], count);
      }
      std::sort(seen.begin(), seen.end());
      key.assign({static_cast<std::uint64_t>(round), signature[c]});
      for (std::size_t i = 0; i < seen.size(); ++i) {
        if (i > 0 && seen[i].first == seen[i - 1].first) {
          key.back() += seen[i].second;
        } else {
          key.push_back(seen[i].first);
          key.push_back(seen[i].second);
        }
      }
      next[c] = Signature(key, exact);
    }
    signature.swap(next);
  }

  for (Color c = 0; c < k; ++c) histogram.cells.emplace_back(signature[c], size[c]);
  std::sort(histogram.cells.begin(), histogram.cells.end());
  return histogram;
}

CrHistogram ComputeCrHistogram(const Graph& g, SignatureTable* exact) {
  VertexKeys keys;
  keys.reserve(static_cast<std::size_t>(g.num_vertices()));
  for (RawColor c : g.base_colors()) keys.push_back({c});
  return ComputeCrHistogram(g, keys, exact);
}

VertexKeys AugmentedKeys(const Graph& g, const AugmentationSample& sample) {
  if (sample.num_vertices != g.num_vertices()) {
    throw InvalidInputError("sample does not match the graph");
  }
  VertexKeys keys(static_cast<std::size_t>(g.num_vertices()));
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto& key = keys[v];
    key.reserve(static_cast<std::size_t>(sample.width) + 1);
    key.push_back(g.base_colors()[v]);
    for (int j = 0; j < sample.width; ++j) {
      key.push_back(std::bit_cast<std::uint64_t>(sample.at(v, j)));
    }
  }
  return keys;
}

SeparationEstimate DistinguishProbability(const Graph& a, const Graph& b,
                                          const AugmentConfig& cfg, int trials,
                                          bool verify) {
  const AugmentConfig config = Normalized(cfg);
  if (trials < 1) throw InvalidInputError("need at least one trial");
  if (a.num_vertices() != b.num_vertices()) {
    return {1.0, trials, trials};
  }
  const Coloring pi_a = Coloring::FromValues(a.base_colors());
  const Coloring pi_b = Coloring::FromValues(b.base_colors());
  SeparationEstimate estimate;
  estimate.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const auto index = static_cast<std::uint64_t>(t);
    const AugmentationSample sa = Augment(a, pi_a, config, 2 * index + 1);
    const AugmentationSample sb = Augment(b, pi_b, config, 2 * index + 2);
    SignatureTable table;
    SignatureTable* exact = verify ? &table : nullptr;
    if (ComputeCrHistogram(a, AugmentedKeys(a, sa), exact) !=
        ComputeCrHistogram(b, AugmentedKeys(b, sb), exact)) {
      ++estimate.separated;
    }
  }
  estimate.probability =
      static_cast<double>(estimate.separated) / static_cast<double>(trials);
  return estimate;
}

std::map<CrHistogram, Probability> HistogramDistribution(
    const Graph& g, const AugmentConfig& cfg, std::int64_t node_budget,
    SignatureTable* exact) {
  const AugmentConfig config = Normalized(cfg);
  const int n = g.num_vertices();
  const Coloring pi = Coloring::FromValues(g.base_colors());
  std::map<CrHistogram, Probability> dist;

  auto add_walks = [&](const Coloring& start, const TreeConfig& tree, int d) {
    for (const auto& [walk, p] : EnumerateWalks(g, start, tree, d, node_budget)) {
      const AugmentationSample sample = IndicatorSample(n, walk.filled_prefix);
      AddToDistribution(dist, ComputeCrHistogram(g, AugmentedKeys(g, sample), exact),
                        p);
    }
  };

  switch (config.method) {
    case AugmentMethod::kNone:
    case AugmentMethod::kRni:
      AddToDistribution(dist, ComputeCrHistogram(g, exact), Probability(1));
      break;
    case AugmentMethod::kIrni:
      if (config.d > MaxDepth(g)) {
        throw InvalidInputError("IRNI needs d <= " + std::to_string(MaxDepth(g)));
      }
      add_walks(pi, config.tree, config.d);
      break;
    case AugmentMethod::kRp:
      add_walks(Coloring::Uniform(n),
                {RefinementKind::kOblivious, SelectorKind::kFirstLargest},
                MaxDepth(g));
      break;
    case AugmentMethod::kClip: {
      auto cells = ColorRefine(g, pi).Cells();
      double outcomes = 1.0;
      int largest = 0;
      for (const auto& cell : cells) {
        outcomes *= std::tgamma(static_cast<double>(cell.size()) + 1.0);
        largest = std::max(largest, static_cast<int>(cell.size()));
      }
      if (outcomes > static_cast<double>(node_budget)) {
        throw BudgetExceededError("CLIP enumeration needs " +
                                  std::to_string(outcomes) +
                                  " outcomes, budget is " +
                                  std::to_string(node_budget));
      }
      const int width = config.clip_width == 0 ? largest : config.clip_width;
      if (width < largest) throw InvalidInputError("CLIP width too small");
      Probability each(1);
      for (const auto& cell : cells) {
        for (std::size_t i = 2; i <= cell.size(); ++i) each /= static_cast<int>(i);
      }
      ClipEnumerator(g, std::move(cells), width, exact, dist).Run(each);
      break;
    }
  }
  return dist;
}

Probability ExactDistinguish(const Graph& a, const Graph& b,
                             const AugmentConfig& cfg, std::int64_t node_budget,
                             bool verify) {
  Normalized(cfg);
  if (a.num_vertices() != b.num_vertices()) return Probability(1);
  SignatureTable table;
  SignatureTable* exact = verify ? &table : nullptr;
  const auto da = HistogramDistribution(a, cfg, node_budget, exact);
  const auto db = HistogramDistribution(b, cfg, node_budget, exact);
  Probability same(0);
  for (const auto& [histogram, p] : da) {
    if (auto it = db.find(histogram); it != db.end()) same += p * it->second;
  }
  return 1 - same;
}

Probability HistogramTotalVariation(const Graph& a, const Graph& b,
                                    const AugmentConfig& cfg,
                                    std::int64_t node_budget, bool verify) {
  Normalized(cfg);
  if (a.num_vertices() != b.num_vertices()) return Probability(1);
  SignatureTable table;
  SignatureTable* exact = verify ? &table : nullptr;
  const auto da = HistogramDistribution(a, cfg, node_budget, exact);
  const auto db = HistogramDistribution(b, cfg, node_budget, exact);
  // TV = 1 - sum_h min(P_a(h), P_b(h)).
  Probability overlap(0);
  for (const auto& [histogram, p] : da) {
    if (auto it = db.find(histogram); it != db.end()) {
      overlap += p < it->second ? p : it->second;
    }
  }
  return 1 - overlap;
}

Probability ExactEnsembleDistinguish(const Graph& a, const Graph& b,
                                     const AugmentConfig& cfg, int e,
                                     std::int64_t node_budget) {
  if (e < 1) throw InvalidInputError("ensemble size must be >= 1");
  Normalized(cfg);
  if (a.num_vertices() != b.num_vertices()) return Probability(1);
  const auto da = HistogramDistribution(a, cfg, node_budget);
  const auto db = HistogramDistribution(b, cfg, node_budget);
  const std::vector<std::pair<CrHistogram, Probability>> va(da.begin(), da.end());
  const std::vector<std::pair<CrHistogram, Probability>> vb(db.begin(), db.end());
  const double tuples = std::pow(static_cast<double>(va.size() * vb.size()), e);
  if (tuples > static_cast<double>(node_budget)) {
    throw BudgetExceededError("ensemble enumeration needs " +
                              std::to_string(tuples) + " tuples");
  }
  Probability separated(0);
  // Walks every e-tuple of sample pairs; a tuple counts once some pair differs.
  auto visit = [&](auto&& self, int depth, const Probability& p,
                   bool differs) -> void {
    if (depth == e) {
      if (differs) separated += p;
      return;
    }
    for (const auto& [ha, pa] : va) {
      for (const auto& [hb, pb] : vb) {
        self(self, depth + 1, p * pa * pb, differs || ha != hb);
      }
    }
  };
  visit(visit, 0, Probability(1), false);
  return separated;
}

}  // namespace irni
