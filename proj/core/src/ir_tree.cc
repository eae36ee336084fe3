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

#include <algorithm>
#include <stdexcept>

#include "irni/errors.h"
#include "irni/rng.h"

namespace irni {
namespace {

struct CellInfo {
  std::vector<std::vector<Vertex>> members;  // by color
  std::vector<int> branchable;               // unmarked members per color
};

CellInfo DescribeCells(const Graph& g, const Coloring& pi) {
  CellInfo info;
  info.members = pi.Cells();
  info.branchable.assign(info.members.size(), 0);
  for (std::size_t c = 0; c < info.members.size(); ++c) {
    for (Vertex v : info.members[c]) {
      if (!g.subdivision_marker()[v]) ++info.branchable[c];
    }
  }
  return info;
}

bool Qualifies(const CellInfo& info, std::size_t c) {
  return info.members[c].size() > 1 && info.branchable[c] > 0;
}

std::optional<Color> FirstLargest(const CellInfo& info) {
  std::optional<Color> best;
  std::size_t best_size = 0;
  for (std::size_t c = 0; c < info.members.size(); ++c) {
    if (Qualifies(info, c) && info.members[c].size() > best_size) {
      best = static_cast<Color>(c);
      best_size = info.members[c].size();
    }
  }
  return best;
}

std::optional<Color> PlanarMinDegree(const Graph& g, const CellInfo& info,
                                     std::span<const Vertex> nu) {
  if (nu.empty()) {
    std::optional<Color> best;
    int best_degree = 0;
    for (std::size_t c = 0; c < info.members.size(); ++c) {
      if (!Qualifies(info, c)) continue;
      const auto& cell = info.members[c];
      const int degree = g.Degree(cell.front());
      for (Vertex v : cell) {
        if (g.Degree(v) != degree) {
          throw std::logic_error(
              "planar selector: cell " + std::to_string(c + 1) +
              " mixes vertex degrees; use it with color refinement");
        }
      }
      if (!best || degree < best_degree) {
        best = static_cast<Color>(c);
        best_degree = degree;
      }
    }
    return best;
  }
  const Vertex anchor = nu.front();
  for (std::size_t c = 0; c < info.members.size(); ++c) {
    if (!Qualifies(info, c)) continue;
    const auto& cell = info.members[c];
    if (std::all_of(cell.begin(), cell.end(),
                    [&](Vertex v) { return g.HasEdge(anchor, v); })) {
      return static_cast<Color>(c);
    }
  }
  return FirstLargest(info);
}

// Fill-up and bookkeeping shared by sampling and enumeration.
WalkResult FinishWalk(const Graph& g, IndividualizationSeq walk,
                      Coloring coloring, bool reached_leaf, int depth_bound) {
  WalkResult result;
  result.natural_length = static_cast<int>(walk.size());
  result.reached_leaf = reached_leaf;
  result.filled_prefix = walk;
  const auto missing = static_cast<std::size_t>(depth_bound) - walk.size();
  if (reached_leaf && missing > 0) {
    std::vector<std::uint8_t> used(static_cast<std::size_t>(g.num_vertices()), 0);
    for (Vertex v : walk) used[v] = 1;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (!used[v] && !g.subdivision_marker()[v]) rest.push_back(v);
    }
    std::sort(rest.begin(), rest.end(), [&](Vertex a, Vertex b) {
      return coloring[a] < coloring[b];
    });
    // Leaves leave no two non-subdivision vertices in a common cell.
    for (std::size_t i = 1; i < std::min(rest.size(), missing + 1); ++i) {
      if (coloring[rest[i - 1]] == coloring[rest[i]]) {
        throw std::logic_error("fill-up found two vertices of one leaf cell");
      }
    }
    result.filled_prefix.insert(result.filled_prefix.end(), rest.begin(),
                                rest.begin() + static_cast<long>(missing));
  }
  result.walk = std::move(walk);
  result.leaf_coloring = std::move(coloring);
  return result;
}

void CheckDepthBound(const Graph& g, int depth_bound) {
  if (depth_bound < 0 || depth_bound > MaxDepth(g)) {
    throw InvalidInputError("depth bound " + std::to_string(depth_bound) +
                            " outside 0.." + std::to_string(MaxDepth(g)));
  }
}

class WalkEnumerator {
 public:
  WalkEnumerator(const Graph& g, const Coloring& pi, const TreeConfig& config,
                 int depth_bound, std::int64_t node_budget)
      : g_(g),
        pi_(pi),
        config_(config),
        depth_bound_(depth_bound),
        node_budget_(node_budget) {}

  std::vector<WeightedWalk> Run() {
    IndividualizationSeq nu;
    Visit(nu, Probability(1));
    return std::move(out_);
  }

 private:
  void Visit(IndividualizationSeq& nu, const Probability& probability) {
    if (++nodes_ > node_budget_) {
      throw BudgetExceededError("IR tree enumeration exceeded " +
                                std::to_string(node_budget_) + " nodes");
    }
    Coloring coloring = Refine(config_.refinement, g_, pi_, nu);
    const auto cell = SelectCell(config_.selector, g_, coloring, nu);
    if (!cell || static_cast<int>(nu.size()) == depth_bound_) {
      out_.push_back({FinishWalk(g_, nu, std::move(coloring), !cell.has_value(),
                                 depth_bound_),
                      probability});
      return;
    }
    const auto branch = BranchVertices(g_, coloring, *cell);
    const Probability child_probability =
        probability / static_cast<int>(branch.size());
    for (Vertex v : branch) {
      nu.push_back(v);
      Visit(nu, child_probability);
      nu.pop_back();
    }
  }

  const Graph& g_;
  const Coloring& pi_;
  TreeConfig config_;
  int depth_bound_;
  std::int64_t node_budget_;
  std::int64_t nodes_ = 0;
  std::vector<WeightedWalk> out_;
};

void AppendLittleEndian(std::string& out, std::uint64_t value, int bytes) {
  for (int i = 0; i < bytes; ++i) {
    out.push_back(static_cast<char>((value >> (8 * i)) & 0xff));
  }
}

}  // namespace

std::string_view SelectorName(SelectorKind kind) {
  switch (kind) {
    case SelectorKind::kFirstLargest:
      return "first-largest";
    case SelectorKind::kPlanarMinDegree:
      return "planar";
  }
  return "";
}

std::optional<SelectorKind> ParseSelectorKind(std::string_view name) {
  for (SelectorKind kind :
       {SelectorKind::kFirstLargest, SelectorKind::kPlanarMinDegree}) {
    if (SelectorName(kind) == name) return kind;
  }
  return std::nullopt;
}

std::vector<Vertex> BranchVertices(const Graph& g, const Coloring& pi,
                                   Color color) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < pi.num_vertices(); ++v) {
    if (pi[v] == color && !g.subdivision_marker()[v]) out.push_back(v);
  }
  return out;
}

std::optional<Color> SelectCell(SelectorKind kind, const Graph& g,
                                const Coloring& pi,
                                std::span<const Vertex> nu) {
  if (pi.IsDiscrete()) return std::nullopt;
  const CellInfo info = DescribeCells(g, pi);
  switch (kind) {
    case SelectorKind::kFirstLargest:
      return FirstLargest(info);
    case SelectorKind::kPlanarMinDegree:
      return PlanarMinDegree(g, info, nu);
  }
  return std::nullopt;
}

std::vector<IndividualizationSeq> Children(const Graph& g, const Coloring& pi,
                                           std::span<const Vertex> nu,
                                           const TreeConfig& config) {
  const Coloring node = Refine(config.refinement, g, pi, nu);
  const auto cell = SelectCell(config.selector, g, node, nu);
  std::vector<IndividualizationSeq> children;
  if (!cell) return children;
  for (Vertex v : BranchVertices(g, node, *cell)) {
    IndividualizationSeq child(nu.begin(), nu.end());
    child.push_back(v);
    children.push_back(std::move(child));
  }
  return children;
}

int MaxDepth(const Graph& g) {
  const auto markers = g.subdivision_marker();
  return g.num_vertices() -
         static_cast<int>(std::count(markers.begin(), markers.end(), 1));
}

WalkResult RandomWalk(const Graph& g, const Coloring& pi,
                      const TreeConfig& config, int depth_bound,
                      std::uint64_t seed, std::uint64_t stream) {
  CheckDepthBound(g, depth_bound);
  const CounterRng rng(seed, stream);
  IndividualizationSeq nu;
  Coloring coloring = Refine(config.refinement, g, pi, nu);
  for (;;) {
    const auto cell = SelectCell(config.selector, g, coloring, nu);
    if (!cell) {
      return FinishWalk(g, std::move(nu), std::move(coloring), true,
                        depth_bound);
    }
    if (static_cast<int>(nu.size()) == depth_bound) {
      return FinishWalk(g, std::move(nu), std::move(coloring), false,
                        depth_bound);
    }
    const auto branch = BranchVertices(g, coloring, *cell);
    nu.push_back(branch[rng.UniformInt(branch.size(), nu.size())]);
    coloring = Refine(config.refinement, g, pi, nu);
  }
}

std::vector<WeightedWalk> EnumerateWalks(const Graph& g, const Coloring& pi,
                                         const TreeConfig& config,
                                         int depth_bound,
                                         std::int64_t node_budget) {
  CheckDepthBound(g, depth_bound);
  return WalkEnumerator(g, pi, config, depth_bound, node_budget).Run();
}

LeafCertificate MakeLeafCertificate(const Graph& g,
                                    std::span<const RawColor> initial_colors,
                                    const Coloring& leaf_coloring) {
  const int n = g.num_vertices();
  if (leaf_coloring.num_vertices() != n ||
      static_cast<int>(initial_colors.size()) != n) {
    throw InvalidInputError("certificate inputs disagree on vertex count");
  }
  if (!leaf_coloring.IsDiscrete()) {
    throw InvalidInputError("leaf certificate needs a discrete leaf coloring");
  }
  std::vector<Vertex> at_rank(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) at_rank[leaf_coloring[v]] = v;

  std::string bytes;
  AppendLittleEndian(bytes, static_cast<std::uint64_t>(n), 4);
  std::uint8_t acc = 0;
  int bits = 0;
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      acc = static_cast<std::uint8_t>(acc << 1);
      if (g.HasEdge(at_rank[r], at_rank[s])) acc |= 1;
      if (++bits == 8) {
        bytes.push_back(static_cast<char>(acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) bytes.push_back(static_cast<char>(acc << (8 - bits)));
  for (int r = 0; r < n; ++r) {
    AppendLittleEndian(bytes, initial_colors[at_rank[r]], 8);
  }
  for (int r = 0; r < n; ++r) {
    bytes.push_back(static_cast<char>(g.subdivision_marker()[at_rank[r]]));
  }
  return LeafCertificate(std::move(bytes));
}

LeafCertificate MakeLeafCertificate(const Graph& g, const Coloring& pi,
                                    const Coloring& leaf_coloring) {
  std::vector<RawColor> colors(pi.assignment().begin(), pi.assignment().end());
  return MakeLeafCertificate(g, colors, leaf_coloring);
}

std::vector<Leaf> EnumerateLeaves(const Graph& g, const Coloring& pi,
                                  const TreeConfig& config,
                                  std::int64_t node_budget) {
  std::vector<Leaf> leaves;
  for (auto& [walk, probability] :
       EnumerateWalks(g, pi, config, MaxDepth(g), node_budget)) {
    Leaf leaf;
    leaf.certificate = MakeLeafCertificate(g, pi, walk.leaf_coloring);
    leaf.path = std::move(walk.walk);
    leaf.coloring = std::move(walk.leaf_coloring);
    leaf.probability = std::move(probability);
    leaves.push_back(std::move(leaf));
  }
  return leaves;
}

bool Isomorphic(const Graph& a, const Graph& b, std::int64_t node_budget) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) {
    return false;
  }
  auto sorted = [](auto span) {
    std::vector<std::remove_cvref_t<decltype(span[0])>> out(span.begin(),
                                                            span.end());
    std::sort(out.begin(), out.end());
    return out;
  };
  // With equal sorted raw colors the compactions agree value for value, so
  // certificates over compacted colors are comparable.
  if (sorted(a.base_colors()) != sorted(b.base_colors())) return false;
  if (sorted(a.subdivision_marker()) != sorted(b.subdivision_marker())) {
    return false;
  }
  const TreeConfig config;
  auto smallest = [&](const Graph& g) {
    const Coloring pi = Coloring::FromValues(g.base_colors());
    const auto leaves = EnumerateLeaves(g, pi, config, node_budget);
    return std::min_element(leaves.begin(), leaves.end(),
                            [](const Leaf& x, const Leaf& y) {
                              return x.certificate < y.certificate;
                            })
        ->certificate;
  };
  return smallest(a) == smallest(b);
}

}  // namespace irni
