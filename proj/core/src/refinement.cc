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

#include "irni/refinement.h"

#include <algorithm>
#include <array>
#include <string>

#include "irni/errors.h"

namespace irni {
namespace {

void CheckSameSize(const Graph& g, const Coloring& pi) {
  if (pi.num_vertices() != g.num_vertices()) {
    throw InvalidInputError("coloring has " +
                            std::to_string(pi.num_vertices()) +
                            " vertices, graph has " +
                            std::to_string(g.num_vertices()));
  }
}

// Scratch state for one ColorRefine() call.
class OrderedPartitionRefiner {
 public:
  OrderedPartitionRefiner(const Graph& g, const Coloring& start)
      : offsets_(g.adjacency_offsets()),
        targets_(g.adjacency_targets()),
        n_(g.num_vertices()),
        perm_(n_),
        pos_(n_),
        cell_of_(n_),
        cell_size_(n_, 0),
        in_queue_(n_, 0),
        count_(n_, 0) {
    // Counting sort by start color; cell of color c begins at the number of
    // vertices with a smaller color.
    std::vector<int> first(static_cast<std::size_t>(start.num_cells()) + 1, 0);
    for (Vertex v = 0; v < n_; ++v) ++first[start[v] + 1];
    for (int c = 0; c < start.num_cells(); ++c) first[c + 1] += first[c];
    std::vector<int> fill(first.begin(), first.end() - 1);
    for (Vertex v = 0; v < n_; ++v) {
      const int p = fill[start[v]]++;
      perm_[p] = v;
      pos_[v] = p;
      cell_of_[v] = first[start[v]];
    }
    for (int c = 0; c < start.num_cells(); ++c) {
      cell_size_[first[c]] = first[c + 1] - first[c];
      Enqueue(first[c]);
    }
    num_cells_ = start.num_cells();
  }

  Coloring Run() {
    while (head_ < queue_.size() && num_cells_ < n_) {
      const int splitter = queue_[head_++];
      in_queue_[splitter] = 0;
      RefineBy(splitter);
    }
    std::vector<Color> colors(n_);
    Color color = -1;
    for (int p = 0; p < n_; ++p) {
      if (cell_of_[perm_[p]] == p) ++color;
      colors[perm_[p]] = color;
    }
    return Coloring::FromValues(colors);
  }

 private:
  void Enqueue(int cell) {
    if (in_queue_[cell]) return;
    in_queue_[cell] = 1;
    queue_.push_back(cell);
  }

  void RefineBy(int splitter) {
    const int end = splitter + cell_size_[splitter];
    for (int p = splitter; p < end; ++p) {
      const Vertex v = perm_[p];
      for (int a = offsets_[v]; a < offsets_[v + 1]; ++a) {
        const Vertex w = targets_[a];
        if (count_[w]++ == 0) touched_.push_back(w);
      }
    }
    std::sort(touched_.begin(), touched_.end(), [&](Vertex a, Vertex b) {
      if (cell_of_[a] != cell_of_[b]) return cell_of_[a] < cell_of_[b];
      return count_[a] < count_[b];
    });
    for (std::size_t i = 0; i < touched_.size();) {
      std::size_t j = i;
      while (j < touched_.size() && cell_of_[touched_[j]] == cell_of_[touched_[i]]) {
        ++j;
      }
      SplitCell(cell_of_[touched_[i]], i, j);
      i = j;
    }
    for (Vertex w : touched_) count_[w] = 0;
    touched_.clear();
  }

  // touched_[lo, hi) are the touched vertices of `cell`, sorted by count.
  void SplitCell(int cell, std::size_t lo, std::size_t hi) {
    const int size = cell_size_[cell];
    const int num_touched = static_cast<int>(hi - lo);
    const int num_untouched = size - num_touched;
    if (size == 1) return;
    if (num_untouched == 0 &&
        count_[touched_[lo]] == count_[touched_[hi - 1]]) {
      return;
    }

    // Move touched vertices to the back of the cell, in count order.
    const int back = cell + num_untouched;
    for (int k = 0; k < num_touched; ++k) {
      const Vertex w = touched_[lo + k];
      const int target = back + k;
      const Vertex displaced = perm_[target];
      const int from = pos_[w];
      perm_[from] = displaced;
      pos_[displaced] = from;
      perm_[target] = w;
      pos_[w] = target;
    }

    // Fragment starts, ascending. The first fragment keeps the cell's start.
    fragments_.clear();
    if (num_untouched > 0) fragments_.push_back(cell);
    for (int k = 0; k < num_touched; ++k) {
      if (k == 0 || count_[touched_[lo + k]] != count_[touched_[lo + k - 1]]) {
        fragments_.push_back(back + k);
      }
    }
    const bool was_queued = in_queue_[cell] != 0;
    const int cell_end = cell + size;
    int largest = fragments_.front();
    int largest_size = 0;
    for (std::size_t f = 0; f < fragments_.size(); ++f) {
      const int start = fragments_[f];
      const int stop = f + 1 < fragments_.size() ? fragments_[f + 1] : cell_end;
      cell_size_[start] = stop - start;
      if (start != cell) {
        for (int p = start; p < stop; ++p) cell_of_[perm_[p]] = start;
      }
      if (stop - start > largest_size) {
        largest = start;
        largest_size = stop - start;
      }
    }
    num_cells_ += static_cast<int>(fragments_.size()) - 1;
    for (int start : fragments_) {
      if (was_queued || start != largest) Enqueue(start);
    }
  }

  std::span<const int> offsets_;
  std::span<const Vertex> targets_;
  int n_;
  std::vector<Vertex> perm_;
  std::vector<int> pos_;
  std::vector<int> cell_of_;    // start position of the vertex's cell
  std::vector<int> cell_size_;  // indexed by start position
  std::vector<std::uint8_t> in_queue_;
  std::vector<int> count_;
  std::vector<int> queue_;
  std::size_t head_ = 0;
  std::vector<Vertex> touched_;
  std::vector<int> fragments_;
  int num_cells_ = 0;
};

}  // namespace

std::string_view RefinementName(RefinementKind kind) {
  switch (kind) {
    case RefinementKind::kColorRefinement:
      return "cref";
    case RefinementKind::kTrivial:
      return "tref";
    case RefinementKind::kOblivious:
      return "oref";
    case RefinementKind::kColorThenTrivial:
      return "ctref";
  }
  return "";
}

std::optional<RefinementKind> ParseRefinementKind(std::string_view name) {
  for (RefinementKind kind :
       {RefinementKind::kColorRefinement, RefinementKind::kTrivial,
        RefinementKind::kOblivious, RefinementKind::kColorThenTrivial}) {
    if (RefinementName(kind) == name) return kind;
  }
  return std::nullopt;
}

Coloring Individualize(const Coloring& pi, std::span<const Vertex> nu) {
  const int n = pi.num_vertices();
  std::vector<Color> colors(pi.assignment().begin(), pi.assignment().end());
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < nu.size(); ++i) {
    const Vertex v = nu[i];
    if (v < 0 || v >= n) {
      throw InvalidInputError("individualized vertex " + std::to_string(v + 1) +
                              " out of range 1.." + std::to_string(n));
    }
    if (seen[v]) {
      throw InvalidInputError("vertex " + std::to_string(v + 1) +
                              " individualized twice");
    }
    seen[v] = 1;
    colors[v] = pi.num_cells() + static_cast<Color>(i);
  }
  if (nu.empty()) return pi;
  return Coloring::FromValues(colors);
}

Coloring ColorRefine(const Graph& g, const Coloring& pi,
                     std::span<const Vertex> nu) {
  CheckSameSize(g, pi);
  const Coloring start = Individualize(pi, nu);
  if (start.IsDiscrete()) return start;
  return OrderedPartitionRefiner(g, start).Run();
}

Coloring SplitSubdivisionVertices(const Graph& g, const Coloring& pi) {
  CheckSameSize(g, pi);
  if (!g.has_subdivision_vertices()) return pi;
  // Key (color, low endpoint color, high endpoint color); unmarked vertices
  // use (color, -1, -1), so existing colors keep their relative order.
  std::vector<std::array<std::int64_t, 3>> keys(
      static_cast<std::size_t>(g.num_vertices()));
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    keys[v] = {pi[v], -1, -1};
    if (g.is_subdivision_vertex(v)) {
      const auto ends = g.Neighbors(v);
      const Color a = pi[ends[0]];
      const Color b = pi[ends[1]];
      keys[v][1] = std::min(a, b);
      keys[v][2] = std::max(a, b);
    }
  }
  auto distinct = keys;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<Color> colors(keys.size());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    colors[v] = static_cast<Color>(
        std::lower_bound(distinct.begin(), distinct.end(), keys[v]) -
        distinct.begin());
  }
  return Coloring::FromValues(colors);
}

Coloring TrivialRefine(const Graph& g, const Coloring& pi,
                       std::span<const Vertex> nu) {
  CheckSameSize(g, pi);
  return SplitSubdivisionVertices(g, Individualize(pi, nu));
}

Coloring ObliviousRefine(const Graph& g, const Coloring& pi,
                         std::span<const Vertex> nu) {
  CheckSameSize(g, pi);
  return SplitSubdivisionVertices(
      g, Individualize(Coloring::Uniform(g.num_vertices()), nu));
}

Coloring ColorThenTrivialRefine(const Graph& g, const Coloring& pi,
                                std::span<const Vertex> nu) {
  return SplitSubdivisionVertices(g, Individualize(ColorRefine(g, pi), nu));
}

Coloring Refine(RefinementKind kind, const Graph& g, const Coloring& pi,
                std::span<const Vertex> nu) {
  switch (kind) {
    case RefinementKind::kColorRefinement:
      return ColorRefine(g, pi, nu);
    case RefinementKind::kTrivial:
      return TrivialRefine(g, pi, nu);
    case RefinementKind::kOblivious:
      return ObliviousRefine(g, pi, nu);
    case RefinementKind::kColorThenTrivial:
      return ColorThenTrivialRefine(g, pi, nu);
  }
  throw InvalidInputError("unknown refinement kind");
}

bool IsEquitable(const Graph& g, const Coloring& pi) {
  CheckSameSize(g, pi);
  const int n = g.num_vertices();
  // Sorted neighbor colors are the per-color neighbor counts in disguise.
  std::vector<std::vector<Color>> profile_of_cell(
      static_cast<std::size_t>(pi.num_cells()));
  std::vector<std::uint8_t> have_profile(static_cast<std::size_t>(pi.num_cells()), 0);
  std::vector<Color> profile;
  for (Vertex v = 0; v < n; ++v) {
    profile.clear();
    for (Vertex w : g.Neighbors(v)) profile.push_back(pi[w]);
    std::sort(profile.begin(), profile.end());
    const Color c = pi[v];
    if (!have_profile[c]) {
      have_profile[c] = 1;
      profile_of_cell[c] = profile;
    } else if (profile_of_cell[c] != profile) {
      return false;
    }
  }
  return true;
}

}  // namespace irni
