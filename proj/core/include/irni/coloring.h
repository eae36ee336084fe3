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

#ifndef IRNI_COLORING_H_
#define IRNI_COLORING_H_

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <span>
#include <vector>

#include "irni/graph.h"

namespace irni {

// Compacted color index in [0, num_cells()).
using Color = std::int32_t;

// A surjective vertex coloring V -> {0, ..., k-1}. Every color names a
// nonempty cell. Colors carry order: refinement keeps cells ordered, and the
// compaction in FromValues() preserves the order of the input values.
class Coloring {
 public:
  Coloring() = default;

  static Coloring Uniform(int num_vertices);

  // Compacts arbitrary values to 0..k-1, preserving their order: equal
  // values get equal colors and smaller values get smaller colors.
  template <std::integral T>
  static Coloring FromValues(std::span<const T> values) {
    std::vector<T> distinct(values.begin(), values.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    Coloring c;
    c.assignment_.reserve(values.size());
    for (const T& value : values) {
      c.assignment_.push_back(static_cast<Color>(
          std::lower_bound(distinct.begin(), distinct.end(), value) -
          distinct.begin()));
    }
    c.num_cells_ = static_cast<int>(distinct.size());
    return c;
  }
  template <std::integral T>
  static Coloring FromValues(const std::vector<T>& values) {
    return FromValues(std::span<const T>(values));
  }

  int num_vertices() const { return static_cast<int>(assignment_.size()); }
  int num_cells() const { return num_cells_; }
  bool IsDiscrete() const { return num_cells_ == num_vertices(); }

  Color operator[](Vertex v) const { return assignment_[v]; }
  std::span<const Color> assignment() const { return assignment_; }

  // Cells indexed by color; each cell lists its vertices ascending.
  std::vector<std::vector<Vertex>> Cells() const;
  std::vector<int> CellSizes() const;

  // The cell structure with color names forgotten: cells sorted by their
  // smallest vertex. Two colorings induce the same partition iff their
  // CanonicalPartition()s compare equal.
  std::vector<std::vector<Vertex>> CanonicalPartition() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> assignment_;
  int num_cells_ = 0;
};

// True iff `finer` is finer than `coarser`: equal colors in `finer` imply
// equal colors in `coarser`. Reflexive.
bool IsFiner(const Coloring& finer, const Coloring& coarser);

bool SamePartition(const Coloring& a, const Coloring& b);

}  // namespace irni

#endif  // IRNI_COLORING_H_
