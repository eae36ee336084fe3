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

#ifndef IRNI_GRAPH_H_
#define IRNI_GRAPH_H_

#include <cstdint>
#include <span>
#include <vector>

namespace irni {

// Vertices are dense 0-based indices. The text format and the CLI present
// them 1-based.
using Vertex = std::int32_t;

// Colors as they come from the outside world (file, encoder). Refinement
// works on compacted Coloring values instead.
using RawColor = std::uint64_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  RawColor color = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// An undirected, simple, vertex-colored graph with optional edge colors.
//
// Immutable after construction. Adjacency is stored in CSR form with each
// neighbor list sorted ascending. Vertices flagged as subdivision vertices
// stand for an edge of some original graph (see SubdivideEdgeColors()) and
// must have degree exactly 2.
class Graph {
 public:
  // The empty graph.
  Graph() = default;

  // Validates the input and throws InvalidInputError on self-loops,
  // duplicate edges, out-of-range endpoints, size mismatches or marked
  // vertices whose degree is not 2. Empty `base_colors` means all zero,
  // empty `subdivision_marker` means no marked vertices. Edges are stored
  // with u < v, in the given order.
  static Graph Create(int num_vertices, std::vector<Edge> edges,
                      std::vector<RawColor> base_colors = {},
                      std::vector<std::uint8_t> subdivision_marker = {},
                      bool has_edge_colors = false);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  // Checked accessors; throw InvalidInputError for vertices outside
  // [0, num_vertices()).
  std::span<const Vertex> Neighbors(Vertex v) const;
  int Degree(Vertex v) const;
  bool HasEdge(Vertex u, Vertex v) const;
  RawColor base_color(Vertex v) const;
  bool is_subdivision_vertex(Vertex v) const;

  std::span<const RawColor> base_colors() const { return base_colors_; }
  std::span<const std::uint8_t> subdivision_marker() const {
    return subdivision_marker_;
  }
  std::span<const Edge> edges() const { return edges_; }
  bool has_edge_colors() const { return has_edge_colors_; }
  bool has_subdivision_vertices() const { return num_marked_ > 0; }

  // Raw CSR arrays for hot loops. The neighbors of v are
  // adjacency_targets()[adjacency_offsets()[v] .. adjacency_offsets()[v+1]).
  std::span<const int> adjacency_offsets() const { return offsets_; }
  std::span<const Vertex> adjacency_targets() const { return targets_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_ &&
           a.base_colors_ == b.base_colors_ &&
           a.subdivision_marker_ == b.subdivision_marker_ &&
           a.has_edge_colors_ == b.has_edge_colors_;
  }

 private:
  void CheckVertex(Vertex v) const;

  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<RawColor> base_colors_;
  std::vector<std::uint8_t> subdivision_marker_;
  bool has_edge_colors_ = false;
  int num_marked_ = 0;
  std::vector<int> offsets_ = {0};
  std::vector<Vertex> targets_;
};

// Replaces every edge {u, v} by a path u - s - v through a new marked vertex
// s. The new vertex is colored (max vertex color) + (edge color) + 1, so edge
// derived colors never collide with vertex colors. New vertices are numbered
// n, n+1, ... in edge order. Requires edge colors and no marked vertices.
Graph SubdivideEdgeColors(const Graph& g);

// Returns the graph with vertex v renamed to permutation[v]. Colors and
// markers travel with their vertex.
Graph Relabel(const Graph& g, std::span<const Vertex> permutation);

// Vertices of `b` are shifted by a.num_vertices().
Graph DisjointUnion(const Graph& a, const Graph& b);

}  // namespace irni

#endif  // IRNI_GRAPH_H_
