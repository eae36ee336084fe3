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

#include "irni/graph_io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "irni/errors.h"

namespace irni {
namespace {

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t ParseNumber(std::string_view token, int line, const char* what) {
  std::uint64_t value = 0;
  const auto [end, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" +
                               std::string(token) + "'");
  }
  return value;
}

Vertex ParseVertex(std::string_view token, int line, int n) {
  const std::uint64_t id = ParseNumber(token, line, "a vertex id");
  if (id < 1 || id > static_cast<std::uint64_t>(n)) {
    throw ParseError(line, "vertex " + std::string(token) +
                               " outside 1.." + std::to_string(n));
  }
  return static_cast<Vertex>(id - 1);
}

bool ParseFlag(std::string_view token, int line, const char* what) {
  const std::uint64_t value = ParseNumber(token, line, what);
  if (value > 1) throw ParseError(line, std::string(what) + " must be 0 or 1");
  return value == 1;
}

}  // namespace

Graph ParseGraph(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int n = 0;
  std::uint64_t m = 0;
  bool edge_colors = false;
  std::vector<RawColor> colors;
  std::vector<std::uint8_t> markers;
  std::vector<std::uint8_t> vertex_seen;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = Tokens(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    const std::string_view kind = tokens[0];
    if (!have_header) {
      if (kind != "p" || tokens.size() != 4) {
        throw ParseError(line_no,
                         "expected header 'p <n> <m> <has_edge_colors>'");
      }
      const std::uint64_t count = ParseNumber(tokens[1], line_no, "a vertex count");
      if (count > 100'000'000) throw ParseError(line_no, "vertex count too large");
      n = static_cast<int>(count);
      m = ParseNumber(tokens[2], line_no, "an edge count");
      edge_colors = ParseFlag(tokens[3], line_no, "has_edge_colors");
      colors.assign(static_cast<std::size_t>(n), 0);
      markers.assign(static_cast<std::size_t>(n), 0);
      vertex_seen.assign(static_cast<std::size_t>(n), 0);
      have_header = true;
    } else if (kind == "v") {
      if (tokens.size() != 4) {
        throw ParseError(line_no, "expected 'v <id> <color> <marker>'");
      }
      const Vertex v = ParseVertex(tokens[1], line_no, n);
      if (vertex_seen[v]) {
        throw ParseError(line_no, "vertex " + std::to_string(v + 1) +
                                      " listed twice");
      }
      vertex_seen[v] = 1;
      colors[v] = ParseNumber(tokens[2], line_no, "a color");
      markers[v] = ParseFlag(tokens[3], line_no, "marker") ? 1 : 0;
    } else if (kind == "e") {
      const std::size_t expected = edge_colors ? 4 : 3;
      if (tokens.size() != expected) {
        throw ParseError(line_no, edge_colors
                                      ? "expected 'e <u> <v> <edge_color>'"
                                      : "expected 'e <u> <v>'");
      }
      Edge e;
      e.u = ParseVertex(tokens[1], line_no, n);
      e.v = ParseVertex(tokens[2], line_no, n);
      if (e.u == e.v) throw ParseError(line_no, "self-loop");
      if (edge_colors) e.color = ParseNumber(tokens[3], line_no, "an edge color");
      edges.push_back(e);
    } else if (kind == "p") {
      throw ParseError(line_no, "second header line");
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(kind) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no + 1, "missing header line");
  for (Vertex v = 0; v < n; ++v) {
    if (!vertex_seen[v]) {
      throw ParseError(line_no, "no 'v' line for vertex " + std::to_string(v + 1));
    }
  }
  if (edges.size() != m) {
    throw ParseError(line_no, "header announces " + std::to_string(m) +
                                  " edges, found " +
                                  std::to_string(edges.size()));
  }
  try {
    return Graph::Create(n, std::move(edges), std::move(colors),
                         std::move(markers), edge_colors);
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidInputError& e) {
    throw ParseError(line_no, e.what());
  }
}

Graph ParseGraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseGraph(in);
}

std::string FormatGraph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << ' '
      << (g.has_edge_colors() ? 1 : 0) << '\n';
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "v " << v + 1 << ' ' << g.base_colors()[v] << ' '
        << static_cast<int>(g.subdivision_marker()[v]) << '\n';
  }
  for (const Edge& e : g.edges()) {
    out << "e " << e.u + 1 << ' ' << e.v + 1;
    if (g.has_edge_colors()) out << ' ' << e.color;
    out << '\n';
  }
  return out.str();
}

Graph ReadGraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open " + path);
  try {
    return ParseGraph(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " +
                                   std::string(e.what()).substr(
                                       std::string(e.what()).find(": ") + 2));
  }
}

void WriteGraph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInputError("cannot write " + path);
  out << FormatGraph(g);
  if (!out) throw InvalidInputError("write failed: " + path);
}

}  // namespace irni
