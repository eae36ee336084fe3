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

#include "irni/graph.h"

#include <algorithm>
#include <string>
#include <utility>

#include "irni/errors.h"

namespace irni {

Graph Graph::Create(int num_vertices, std::vector<Edge> edges,
                    std::vector<RawColor> base_colors,
                    std::vector<std::uint8_t> subdivision_marker,
                    bool has_edge_colors) {
  if (num_vertices < 0) throw InvalidInputError("negative vertex count");
  const auto n = static_cast<std::size_t>(num_vertices);
  if (base_colors.empty()) base_colors.assign(n, 0);
  if (subdivision_marker.empty()) subdivision_marker.assign(n, 0);
  if (base_colors.size() != n) {
    throw InvalidInputError("expected " + std::to_string(n) +
                            " base colors, got " +
                            std::to_string(base_colors.size()));
  }
  if (subdivision_marker.size() != n) {
    throw InvalidInputError("subdivision marker size mismatch");
  }

  Graph g;
  g.num_vertices_ = num_vertices;
  g.has_edge_colors_ = has_edge_colors;
  std::vector<int> degree(n, 0);
  for (Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= num_vertices || e.v >= num_vertices) {
      throw InvalidInputError("edge {" + std::to_string(e.u + 1) + ", " +
                              std::to_string(e.v + 1) +
                              "} references a vertex outside 1.." +
                              std::to_string(num_vertices));
    }
    if (e.u == e.v) {
      throw InvalidInputError("self-loop at vertex " + std::to_string(e.u + 1));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!has_edge_colors) e.color = 0;
    ++degree[e.u];
    ++degree[e.v];
  }

  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(static_cast<std::size_t>(g.offsets_[n]));
  std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.targets_[fill[e.u]++] = e.v;
    g.targets_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.targets_.begin() + g.offsets_[v];
    auto last = g.targets_.begin() + g.offsets_[v + 1];
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw InvalidInputError("duplicate edge at vertex " +
                              std::to_string(v + 1));
    }
  }

  for (std::size_t v = 0; v < n; ++v) {
    if (subdivision_marker[v] == 0) continue;
    subdivision_marker[v] = 1;
    ++g.num_marked_;
    if (degree[v] != 2) {
      throw InvalidInputError("subdivision vertex " + std::to_string(v + 1) +
                              " has degree " + std::to_string(degree[v]) +
                              ", expected 2");
    }
  }
  g.edges_ = std::move(edges);
  g.base_colors_ = std::move(base_colors);
  g.subdivision_marker_ = std::move(subdivision_marker);
  return g;
}

void Graph::CheckVertex(Vertex v) const {
  if (v < 0 || v >= num_vertices_) {
    throw InvalidInputError("vertex " + std::to_string(v + 1) +
                            " out of range 1.." +
                            std::to_string(num_vertices_));
  }
}

std::span<const Vertex> Graph::Neighbors(Vertex v) const {
  CheckVertex(v);
  return std::span<const Vertex>(targets_).subspan(
      offsets_[v], offsets_[v + 1] - offsets_[v]);
}

int Graph::Degree(Vertex v) const {
  CheckVertex(v);
  return offsets_[v + 1] - offsets_[v];
}

bool Graph::HasEdge(Vertex u, Vertex v) const {
  const auto nbrs = Neighbors(u);
  CheckVertex(v);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

RawColor Graph::base_color(Vertex v) const {
  CheckVertex(v);
  return base_colors_[v];
}

bool Graph::is_subdivision_vertex(Vertex v) const {
  CheckVertex(v);
  return subdivision_marker_[v] != 0;
}

Graph SubdivideEdgeColors(const Graph& g) {
  if (!g.has_edge_colors()) {
    throw InvalidInputError("subdivision requires an edge-colored graph");
  }
  if (g.has_subdivision_vertices()) {
    throw InvalidInputError("graph already contains subdivision vertices");
  }
  const int n = g.num_vertices();
  RawColor max_color = 0;
  for (RawColor c : g.base_colors()) max_color = std::max(max_color, c);

  std::vector<RawColor> colors(g.base_colors().begin(), g.base_colors().end());
  std::vector<std::uint8_t> markers(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edges;
  edges.reserve(2 * static_cast<std::size_t>(g.num_edges()));
  Vertex next = n;
  for (const Edge& e : g.edges()) {
    colors.push_back(max_color + e.color + 1);
    markers.push_back(1);
    edges.push_back({e.u, next, 0});
    edges.push_back({next, e.v, 0});
    ++next;
  }
  return Graph::Create(next, std::move(edges), std::move(colors),
                       std::move(markers), /*has_edge_colors=*/false);
}

Graph Relabel(const Graph& g, std::span<const Vertex> permutation) {
  const int n = g.num_vertices();
  if (static_cast<int>(permutation.size()) != n) {
    throw InvalidInputError("permutation size mismatch");
  }
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
  for (Vertex image : permutation) {
    if (image < 0 || image >= n || seen[image]) {
      throw InvalidInputError("not a permutation of the vertex set");
    }
    seen[image] = 1;
  }
  std::vector<RawColor> colors(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> markers(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    colors[permutation[v]] = g.base_colors()[v];
    markers[permutation[v]] = g.subdivision_marker()[v];
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    edges.push_back({permutation[e.u], permutation[e.v], e.color});
  }
  return Graph::Create(n, std::move(edges), std::move(colors),
                       std::move(markers), g.has_edge_colors());
}

Graph DisjointUnion(const Graph& a, const Graph& b) {
  const int shift = a.num_vertices();
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  for (const Edge& e : b.edges()) {
    edges.push_back({e.u + shift, e.v + shift, e.color});
  }
  std::vector<RawColor> colors(a.base_colors().begin(), a.base_colors().end());
  colors.insert(colors.end(), b.base_colors().begin(), b.base_colors().end());
  std::vector<std::uint8_t> markers(a.subdivision_marker().begin(),
                                    a.subdivision_marker().end());
  markers.insert(markers.end(), b.subdivision_marker().begin(),
                 b.subdivision_marker().end());
  return Graph::Create(shift + b.num_vertices(), std::move(edges),
                       std::move(colors), std::move(markers),
                       a.has_edge_colors() || b.has_edge_colors());
}

}  // namespace irni
