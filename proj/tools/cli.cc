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

#include "cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "irni/augment.h"
#include "irni/datasets.h"
#include "irni/distinguish.h"
#include "irni/errors.h"
#include "irni/graph_io.h"
#include "irni/ir_tree.h"
#include "irni/refinement.h"

namespace irni::cli {
namespace {

using nlohmann::json;

// Usage problems found after CLI11 has accepted the flags.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t DefaultSeed() {
  const char* env = std::getenv(kSeedEnvVar);
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  std::uint64_t seed = 0;
  const std::string_view text(env);
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw UsageError(std::string(kSeedEnvVar) + " is not an unsigned integer: '" +
                     std::string(text) + "'");
  }
  return seed;
}

// Graphs with edge colors are subdivided so every refinement sees them.
Graph LoadGraph(const std::string& path) {
  Graph g = ReadGraph(path);
  return g.has_edge_colors() ? SubdivideEdgeColors(g) : g;
}

Coloring InitialColoring(const Graph& g) {
  return Coloring::FromValues(g.base_colors());
}

json OneBased(std::span<const Vertex> vertices) {
  json out = json::array();
  for (Vertex v : vertices) out.push_back(v + 1);
  return out;
}

json OneBasedColors(const Coloring& c) {
  json out = json::array();
  for (Color color : c.assignment()) out.push_back(color + 1);
  return out;
}

json SampleJson(const AugmentationSample& s) {
  const bool indicator = s.method != AugmentMethod::kRni;
  json rows = json::array();
  for (Vertex v = 0; v < s.num_vertices; ++v) {
    json row = json::array();
    for (double x : s.Row(v)) {
      if (indicator) {
        row.push_back(static_cast<int>(x));
      } else {
        row.push_back(x);
      }
    }
    rows.push_back(std::move(row));
  }
  return {{"walk", OneBased(s.walk)}, {"features", std::move(rows)}};
}

void WriteOutput(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw InvalidInputError("cannot write " + path);
}

// Flags shared by walk, augment and distinguish.
struct TreeFlags {
  std::string refinement = "cref";
  std::string selector = "first-largest";

  void Register(CLI::App* app) {
    app->add_option("--refinement", refinement, "cref|tref|oref|ctref")
        ->capture_default_str()
        ->check(CLI::IsMember({"cref", "tref", "oref", "ctref"}));
    app->add_option("--selector", selector, "first-largest|planar")
        ->capture_default_str()
        ->check(CLI::IsMember({"first-largest", "planar"}));
  }

  TreeConfig Config() const {
    return {*ParseRefinementKind(refinement), *ParseSelectorKind(selector)};
  }
};

struct MethodFlags {
  std::string method = "irni";
  int d = 1;
  TreeFlags tree;
  std::string rni_dist = "uniform";
  double rni_a = 0.0;
  double rni_b = 1.0;
  int clip_width = 0;

  void Register(CLI::App* app) {
    app->add_option("--method", method, "none|irni|rni|clip|rp")
        ->capture_default_str()
        ->check(CLI::IsMember({"none", "irni", "rni", "clip", "rp"}));
    app->add_option("--d", d, "Appended dimensions (irni, rni)")
        ->capture_default_str();
    tree.Register(app);
    app->add_option("--rni-dist", rni_dist, "uniform|normal|discrete|constant")
        ->capture_default_str()
        ->check(CLI::IsMember({"uniform", "normal", "discrete", "constant"}));
    app->add_option("--rni-a", rni_a, "Lower bound, mean or constant")
        ->capture_default_str();
    app->add_option("--rni-b", rni_b, "Upper bound or standard deviation")
        ->capture_default_str();
    app->add_option("--clip-width", clip_width,
                    "CLIP one-hot width; 0 = largest refined cell")
        ->capture_default_str();
  }

  AugmentConfig Config(std::uint64_t seed) const {
    AugmentConfig cfg;
    cfg.method = *ParseMethod(method);
    cfg.d = d;
    cfg.tree = tree.Config();
    cfg.rni = {*ParseRniKind(rni_dist), rni_a, rni_b};
    cfg.clip_width = clip_width;
    cfg.seed = seed;
    return cfg;
  }
};

std::vector<Vertex> ParseVertexList(const std::string& text, int n) {
  std::vector<Vertex> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    int id = 0;
    const auto [end, ec] =
        std::from_chars(item.data(), item.data() + item.size(), id);
    if (ec != std::errc() || end != item.data() + item.size()) {
      throw UsageError("--individualize expects comma-separated vertex ids, "
                       "got '" + item + "'");
    }
    if (id < 1 || id > n) {
      throw InvalidInputError("vertex " + item + " outside 1.." +
                              std::to_string(n));
    }
    out.push_back(id - 1);
  }
  return out;
}

std::string FormatProbability(double p) { return json(p).dump() + "\n"; }

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Individualization-refinement tools and random node feature "
               "augmentation",
               "irni"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::int64_t budget = kDefaultNodeBudget;
  try {
    seed = DefaultSeed();
  } catch (const UsageError& e) {
    err << "irni: " << e.what() << "\n";
    return kExitUsage;
  }

  // refine
  auto* refine = app.add_subcommand("refine", "Print a refined coloring");
  std::string refine_in, individualize;
  std::string refine_kind = "cref";
  refine->add_option("--in", refine_in, "Graph file")->required();
  refine->add_option("--individualize", individualize,
                     "Comma-separated vertex ids, e.g. 1,4");
  refine->add_option("--refinement", refine_kind, "cref|tref|oref|ctref")
      ->capture_default_str()
      ->check(CLI::IsMember({"cref", "tref", "oref", "ctref"}));

  // walk
  auto* walk = app.add_subcommand("walk", "Sample a random IR walk as JSON");
  std::string walk_in;
  int walk_d = 0;
  TreeFlags walk_tree;
  walk->add_option("--in", walk_in, "Graph file")->required();
  walk->add_option("--d", walk_d, "Depth bound")->required();
  walk->add_option("--seed", seed, "Random seed")->capture_default_str();
  walk_tree.Register(walk);

  // augment
  auto* augment =
      app.add_subcommand("augment", "Write random feature samples as JSON");
  std::string augment_in, augment_out;
  int samples = 1;
  MethodFlags augment_flags;
  augment->add_option("--in", augment_in, "Graph file")->required();
  augment->add_option("--out", augment_out, "Output file; stdout if omitted");
  augment->add_option("--samples", samples, "Number of ensemble samples")
      ->capture_default_str();
  augment->add_option("--seed", seed, "Random seed")->capture_default_str();
  augment_flags.Register(augment);

  // distinguish
  auto* distinguish = app.add_subcommand(
      "distinguish", "Probability that augmented color refinement separates");
  std::string dist_a, dist_b;
  bool exact = false;
  bool verify = false;
  int trials = 1000;
  MethodFlags dist_flags;
  distinguish->add_option("--a", dist_a, "First graph file")->required();
  distinguish->add_option("--b", dist_b, "Second graph file")->required();
  distinguish->add_flag("--exact", exact, "Enumerate all random draws");
  distinguish->add_flag("--verify", verify,
                        "Collision-free signatures instead of hashes");
  distinguish->add_option("--trials", trials, "Monte Carlo trials")
      ->capture_default_str();
  distinguish->add_option("--seed", seed, "Random seed")->capture_default_str();
  distinguish->add_option("--budget", budget, "Enumeration node budget")
      ->capture_default_str();
  dist_flags.Register(distinguish);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate synthetic graph files");
  GraphFamilySpec spec;
  std::string gen_out;
  spec.n = 41;
  gen->add_option("--family", spec.family,
                  "csl|cycle|complete|circulant|random_gnp|random_regular|"
                  "platonic")
      ->required()
      ->check(CLI::IsMember({"csl", "cycle", "complete", "circulant",
                             "random_gnp", "random_regular", "platonic"}));
  gen->add_option("--n", spec.n, "Vertex count")->capture_default_str();
  gen->add_option("--skip", spec.skip, "CSL skip length");
  gen->add_option("--jumps", spec.jumps, "Circulant jumps")->delimiter(',');
  gen->add_option("--p", spec.p, "Edge probability")->capture_default_str();
  gen->add_option("--degree", spec.degree, "Regular degree")
      ->capture_default_str();
  gen->add_option("--name", spec.name, "Platonic solid name");
  gen->add_option("--count", spec.count, "Number of graphs")
      ->capture_default_str();
  gen->add_option("--copies", spec.copies,
                  "Write the disjoint union of this many copies")
      ->capture_default_str();
  gen->add_option("--seed", seed, "Random seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output directory")->required();

  // iso
  auto* iso = app.add_subcommand("iso", "Exact isomorphism test (small n)");
  std::string iso_a, iso_b;
  iso->add_option("--a", iso_a, "First graph file")->required();
  iso->add_option("--b", iso_b, "Second graph file")->required();
  iso->add_option("--budget", budget, "Enumeration node budget")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (refine->parsed()) {
      const Graph g = LoadGraph(refine_in);
      const auto nu = ParseVertexList(individualize, g.num_vertices());
      const Coloring c = Refine(*ParseRefinementKind(refine_kind), g,
                                InitialColoring(g), nu);
      std::string text;
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        text += std::to_string(v + 1) + " " + std::to_string(c[v] + 1) + "\n";
      }
      out << text;
    } else if (walk->parsed()) {
      const Graph g = LoadGraph(walk_in);
      const WalkResult w = RandomWalk(g, InitialColoring(g), walk_tree.Config(),
                                      walk_d, seed, /*stream=*/1);
      const json doc = {{"nu", OneBased(w.walk)},
                        {"leaf_coloring", OneBasedColors(w.leaf_coloring)},
                        {"filled_prefix", OneBased(w.filled_prefix)},
                        {"natural_length", w.natural_length},
                        {"reached_leaf", w.reached_leaf}};
      out << doc.dump() << "\n";
    } else if (augment->parsed()) {
      const Graph g = LoadGraph(augment_in);
      const AugmentConfig cfg = augment_flags.Config(seed);
      if (samples < 1) throw InvalidInputError("--samples must be >= 1");
      json doc = {{"n", g.num_vertices()},
                  {"method", MethodName(cfg.method)},
                  {"d", cfg.d},
                  {"seed", seed},
                  {"samples", json::array()}};
      for (const auto& s : EorSamples(g, InitialColoring(g), cfg, samples)) {
        doc["samples"].push_back(SampleJson(s));
      }
      WriteOutput(augment_out, doc.dump() + "\n", out);
    } else if (distinguish->parsed()) {
      const Graph a = LoadGraph(dist_a);
      const Graph b = LoadGraph(dist_b);
      const AugmentConfig cfg = dist_flags.Config(seed);
      if (exact) {
        out << FormatProbability(
            ToDouble(ExactDistinguish(a, b, cfg, budget, verify)));
      } else {
        if (trials < 1) throw InvalidInputError("--trials must be >= 1");
        out << FormatProbability(
            DistinguishProbability(a, b, cfg, trials, verify).probability);
      }
    } else if (gen->parsed()) {
      spec.seed = seed;
      for (const auto& path : WriteFamily(spec, gen_out)) out << path << "\n";
    } else if (iso->parsed()) {
      const bool same = Isomorphic(LoadGraph(iso_a), LoadGraph(iso_b), budget);
      out << (same ? "isomorphic" : "non-isomorphic") << "\n";
    }
  } catch (const UsageError& e) {
    err << "irni: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceededError& e) {
    err << "irni: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "irni: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}

}  // namespace irni::cli
