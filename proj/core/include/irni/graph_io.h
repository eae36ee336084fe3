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

#ifndef IRNI_GRAPH_IO_H_
#define IRNI_GRAPH_IO_H_

#include <iosfwd>
#include <string>
#include <string_view>

#include "irni/graph.h"

namespace irni {

// Plain text graph format, one graph per file, 1-based vertex ids:
//
//   p <n> <m> <has_edge_colors:0|1>
//   v <id> <color> <marker:0|1>      one line per vertex
//   e <u> <v> [<edge_color>]         one line per undirected edge
//
// Blank lines and lines starting with '#' are ignored. Errors are reported
// as ParseError with the offending line number.
Graph ParseGraph(std::istream& in);
Graph ParseGraph(std::string_view text);
std::string FormatGraph(const Graph& g);

Graph ReadGraph(const std::string& path);
void WriteGraph(const Graph& g, const std::string& path);

}  // namespace irni

#endif  // IRNI_GRAPH_IO_H_
