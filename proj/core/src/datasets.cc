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

#include "irni/datasets.h"

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "irni/errors.h"
#include "irni/graph_io.h"
#include "irni/rng.h"

namespace irni {
namespace {

Graph FromEdgePairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v, 0});
  return Graph::Create(n, std::move(edges));
}

Graph Dodecahedron() {
  // Generalized Petersen graph GP(10, 2).
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 10; ++i) {
    e.emplace_back(i, (i + 1) % 10);
    e.emplace_back(i, 10 + i);
    e.emplace_back(10 + i, 10 + (i + 2) % 10);
  }
  return FromEdgePairs(20, e);
}

Graph Icosahedron() {
  // Apex 0, upper ring 1..5, lower ring 6..10, bottom 11.
  std::vector<std::pair<int, int>> e;
  for (int k = 0; k < 5; ++k) {
    const int up = 1 + k;
    const int low = 6 + k;
    e.emplace_back(0, up);
    e.emplace_back(up, 1 + (k + 1) % 5);
    e.emplace_back(low, 6 + (k + 1) % 5);
    e.emplace_back(up, low);
    e.emplace_back(up, 6 + (k + 1) % 5);
    e.emplace_back(low, 11);
  }
  return FromEdgePairs(12, e);
}

Graph Cube() {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < 8; ++v) {
    for (int bit = 1; bit < 8; bit <<= 1) {
      if ((v & bit) == 0) e.emplace_back(v, v | bit);
    }
  }
  return FromEdgePairs(8, e);
}

Graph Octahedron() {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) {
      if (v != (u ^ 1)) e.emplace_back(u, v);
    }
  }
  return FromEdgePairs(6, e);
}

Graph Copies(const Graph& g, int copies) {
  Graph out = g;
  for (int i = 1; i < copies; ++i) out = DisjointUnion(out, g);
  return out;
}

std::string FormatDouble(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

}  // namespace

Graph GenCsl(int n, int skip) {
  if (n < 5) throw InvalidInputError("CSL needs n >= 5");
  if (skip < 2 || skip > n - 2) {
    throw InvalidInputError("CSL skip must lie in 2..n-2");
  }
  if (std::gcd(skip, n) != 1) {
    throw InvalidInputError("CSL skip " + std::to_string(skip) +
                            " is not coprime to " + std::to_string(n));
  }
  return GenCirculant(n, {1, skip});
}

Graph GenCirculant(int n, const std::vector<int>& jumps) {
  if (n < 1) throw InvalidInputError("circulant needs n >= 1");
  // Emit in jump order, skipping edges a previous jump already produced.
  std::vector<std::pair<int, int>> ordered;
  std::set<std::pair<int, int>> emitted;
  for (int j : jumps) {
    if (j < 1 || j >= n) {
      throw InvalidInputError("circulant jump " + std::to_string(j) +
                              " outside 1.." + std::to_string(n - 1));
    }
    for (int i = 0; i < n; ++i) {
      const int k = (i + j) % n;
      const std::pair<int, int> key(std::min(i, k), std::max(i, k));
      if (emitted.insert(key).second) ordered.emplace_back(i, k);
    }
  }
  return FromEdgePairs(n, ordered);
}

Graph GenCycle(int n) {
  if (n < 3) throw InvalidInputError("cycle needs n >= 3");
  return GenCirculant(n, {1});
}

Graph GenComplete(int n) {
  if (n < 1) throw InvalidInputError("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return FromEdgePairs(n, e);
}

Graph GenGnp(int n, double p, std::uint64_t seed, std::uint64_t stream) {
  if (n < 0) throw InvalidInputError("G(n, p) needs n >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInputError("p must lie in [0, 1]");
  const CounterRng rng(seed, stream);
  std::vector<std::pair<int, int>> e;
  std::uint64_t counter = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.UniformUnit(counter++) < p) e.emplace_back(u, v);
    }
  }
  return FromEdgePairs(n, e);
}

Graph GenRandomRegular(int n, int degree, std::uint64_t seed,
                       std::uint64_t stream) {
  if (n < 1 || degree < 0 || degree >= n) {
    throw InvalidInputError("random regular graph needs 0 <= degree < n");
  }
  if ((static_cast<std::int64_t>(n) * degree) % 2 != 0) {
    throw InvalidInputError("n * degree must be even");
  }
  const CounterRng rng(seed, stream);
  const int points = n * degree;
  std::vector<int> stubs(static_cast<std::size_t>(points));
  constexpr int kMaxAttempts = 100'000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    for (int i = 0; i < points; ++i) stubs[i] = i / degree;
    const std::uint64_t base = static_cast<std::uint64_t>(attempt) << 32;
    for (int i = points - 1; i > 0; --i) {
      std::swap(stubs[i], stubs[rng.UniformInt(i + 1, base | i)]);
    }
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> e;
    bool simple = true;
    for (int i = 0; i < points && simple; i += 2) {
      const int u = std::min(stubs[i], stubs[i + 1]);
      const int v = std::max(stubs[i], stubs[i + 1]);
      simple = u != v && seen.emplace(u, v).second;
      e.emplace_back(u, v);
    }
    if (simple) return FromEdgePairs(n, e);
  }
  throw InvalidInputError("pairing model found no simple graph; degree too "
                          "large for n?");
}

Graph GenPlatonic(std::string_view name) {
  if (name == "tetrahedron") return GenComplete(4);
  if (name == "cube") return Cube();
  if (name == "octahedron") return Octahedron();
  if (name == "dodecahedron") return Dodecahedron();
  if (name == "icosahedron") return Icosahedron();
  throw InvalidInputError("unknown platonic solid '" + std::string(name) + "'");
}

std::int64_t CountTriangles(const Graph& g) {
  std::int64_t triangles = 0;
  for (const Edge& e : g.edges()) {
    const auto a = g.Neighbors(e.u);
    const auto b = g.Neighbors(e.v);
    // Count common neighbors above e.v so each triangle is seen once.
    auto i = std::upper_bound(a.begin(), a.end(), e.v);
    auto j = std::upper_bound(b.begin(), b.end(), e.v);
    while (i != a.end() && j != b.end()) {
      if (*i < *j) {
        ++i;
      } else if (*j < *i) {
        ++j;
      } else {
        ++triangles;
        ++i;
        ++j;
      }
    }
  }
  return triangles;
}

std::vector<Graph> Generate(const GraphFamilySpec& spec) {
  if (spec.count < 1) throw InvalidInputError("count must be >= 1");
  if (spec.copies < 1) throw InvalidInputError("copies must be >= 1");
  std::vector<Graph> out;
  for (int i = 0; i < spec.count; ++i) {
    const auto stream = static_cast<std::uint64_t>(i);
    Graph g;
    if (spec.family == "csl") {
      g = GenCsl(spec.n, spec.skip);
    } else if (spec.family == "cycle") {
      g = GenCycle(spec.n);
    } else if (spec.family == "complete") {
      g = GenComplete(spec.n);
    } else if (spec.family == "circulant") {
      g = GenCirculant(spec.n, spec.jumps);
    } else if (spec.family == "random_gnp") {
      g = GenGnp(spec.n, spec.p, spec.seed, stream);
    } else if (spec.family == "random_regular") {
      g = GenRandomRegular(spec.n, spec.degree, spec.seed, stream);
    } else if (spec.family == "platonic") {
      g = GenPlatonic(spec.name);
    } else {
      throw InvalidInputError("unknown graph family '" + spec.family + "'");
    }
    out.push_back(Copies(g, spec.copies));
  }
  return out;
}

std::string FamilyDirectory(const GraphFamilySpec& spec) {
  std::string params;
  if (spec.family == "platonic") {
    params = spec.name;
  } else {
    params = "n" + std::to_string(spec.n);
  }
  if (spec.family == "csl") params += "_skip" + std::to_string(spec.skip);
  if (spec.family == "circulant") {
    params += "_jumps";
    for (std::size_t i = 0; i < spec.jumps.size(); ++i) {
      params += (i == 0 ? "" : "-") + std::to_string(spec.jumps[i]);
    }
  }
  if (spec.family == "random_gnp") {
    params += "_p" + FormatDouble(spec.p) + "_seed" + std::to_string(spec.seed);
  }
  if (spec.family == "random_regular") {
    params += "_d" + std::to_string(spec.degree) + "_seed" +
              std::to_string(spec.seed);
  }
  if (spec.copies > 1) params += "_x" + std::to_string(spec.copies);
  return spec.family + "/" + params;
}

std::vector<std::string> WriteFamily(const GraphFamilySpec& spec,
                                     const std::string& out_dir) {
  const auto graphs = Generate(spec);
  const std::filesystem::path dir =
      std::filesystem::path(out_dir) / FamilyDirectory(spec);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw InvalidInputError("cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::string> paths;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const std::string path = (dir / (std::to_string(i) + ".graph")).string();
    WriteGraph(graphs[i], path);
    paths.push_back(path);
  }
  return paths;
}

}  // namespace irni
