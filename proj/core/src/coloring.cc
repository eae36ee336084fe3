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

#include "irni/coloring.h"

#include "irni/errors.h"

namespace irni {

Coloring Coloring::Uniform(int num_vertices) {
  Coloring c;
  c.assignment_.assign(static_cast<std::size_t>(num_vertices), 0);
  c.num_cells_ = num_vertices > 0 ? 1 : 0;
  return c;
}

std::vector<std::vector<Vertex>> Coloring::Cells() const {
  std::vector<std::vector<Vertex>> cells(static_cast<std::size_t>(num_cells_));
  for (Vertex v = 0; v < num_vertices(); ++v) cells[assignment_[v]].push_back(v);
  return cells;
}

std::vector<int> Coloring::CellSizes() const {
  std::vector<int> sizes(static_cast<std::size_t>(num_cells_), 0);
  for (Color c : assignment_) ++sizes[c];
  return sizes;
}

std::vector<std::vector<Vertex>> Coloring::CanonicalPartition() const {
  auto cells = Cells();
  std::sort(cells.begin(), cells.end());
  return cells;
}

bool IsFiner(const Coloring& finer, const Coloring& coarser) {
  if (finer.num_vertices() != coarser.num_vertices()) {
    throw InvalidInputError("colorings have different vertex counts");
  }
  std::vector<Color> image(static_cast<std::size_t>(finer.num_cells()), -1);
  for (Vertex v = 0; v < finer.num_vertices(); ++v) {
    Color& mapped = image[finer[v]];
    if (mapped == -1) {
      mapped = coarser[v];
    } else if (mapped != coarser[v]) {
      return false;
    }
  }
  return true;
}

bool SamePartition(const Coloring& a, const Coloring& b) {
  return a.num_cells() == b.num_cells() && IsFiner(a, b);
}

}  // namespace irni
