// Copyright 2026 The Taxonomy Induction Authors.
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

#include "taxo/metrics.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <span>
#include <unordered_map>

#include "taxo/error.h"
#include "taxo/random.h"
#include "taxo/tsv.h"

namespace taxo {

void GoldEdgeSet::Validate() const {
  for (const auto &[edge, label] : judgments) {
    if (!sampled_nodes.contains(edge.first)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "judged edge from unsampled node " + edge.first);
    }
  }
}

EdgeMetrics ComputeEdgeMetrics(const Taxonomy &taxonomy,
                               const GoldEdgeSet &gold) {
  if (gold.sampled_nodes.empty()) {
    throw Error(ErrorCode::kEmptyGold, "no sampled nodes");
  }
  EdgeMetrics m;
  size_t recalled = 0;
  double precision_sum = 0.0;
  for (const std::string &node : gold.sampled_nodes) {
    auto parents = taxonomy.Parents(node);
    if (parents.empty()) continue;
    ++m.answered_nodes;
    size_t correct = 0;
    for (const std::string &parent : parents) {
      auto it = gold.judgments.find({node, parent});
      if (it == gold.judgments.end()) {
        ++m.unjudged_hypernyms;
      } else if (it->second == Label::kIsA) {
        ++correct;
      }
    }
    if (correct > 0) ++recalled;
    precision_sum += static_cast<double>(correct) / parents.size();
  }
  const double n = static_cast<double>(gold.sampled_nodes.size());
  m.coverage = m.answered_nodes / n;
  m.recall = recalled / n;
  m.precision_defined = m.answered_nodes > 0;
  m.macro_precision =
      m.precision_defined ? precision_sum / m.answered_nodes : 0.0;
  return m;
}

PathMetrics ComputePathMetrics(const std::vector<AnnotatedPath> &paths) {
  if (paths.empty()) throw Error(ErrorCode::kEmptyPathSet, "no paths");
  double length = 0.0;
  double cpp = 0.0;
  double ratio = 0.0;
  for (const AnnotatedPath &p : paths) {
    if (p.nodes.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "path without nodes");
    }
    if (p.first_wrong_index &&
        (*p.first_wrong_index < 1 || *p.first_wrong_index >= p.nodes.size())) {
      throw Error(ErrorCode::kInvalidArgument,
                  "first_wrong_index out of range for path starting at " +
                      p.nodes.front());
    }
    const double len = static_cast<double>(p.nodes.size());
    const double prefix = static_cast<double>(p.CorrectPrefix());
    length += len;
    cpp += prefix;
    ratio += prefix / len;
  }
  const double n = static_cast<double>(paths.size());
  return {length / n, cpp / n, ratio / n};
}

double BranchingFactor(const Taxonomy &taxonomy) {
  if (taxonomy.empty()) throw Error(ErrorCode::kEmptyTaxonomy, "no edges");
  return static_cast<double>(taxonomy.size()) /
         taxonomy.CoveredNodes().size();
}

size_t MaxDepthSampled(const Taxonomy &taxonomy, size_t sample_size,
                       uint64_t seed) {
  std::vector<std::string> nodes = taxonomy.CoveredNodes();
  SplitMix64 rng(seed);
  Shuffle(std::span<std::string>(nodes), rng);
  nodes.resize(std::min(nodes.size(), sample_size));
  size_t deepest = 0;
  for (const std::string &start : nodes) {
    std::unordered_map<std::string, size_t> distance{{start, 0}};
    std::deque<std::string> queue{start};
    while (!queue.empty()) {
      std::string current = std::move(queue.front());
      queue.pop_front();
      const size_t d = distance[current];
      deepest = std::max(deepest, d);
      for (const std::string &parent : taxonomy.Parents(current)) {
        if (distance.emplace(parent, d + 1).second) queue.push_back(parent);
      }
    }
  }
  return deepest;
}

std::set<std::string> SampleEvalNodes(const WcnGraph &graph, size_t n_entities,
                                      size_t n_categories, uint64_t seed) {
  std::set<std::string> sample;
  for (NodeKind kind : {NodeKind::kEntity, NodeKind::kCategory}) {
    const size_t wanted =
        kind == NodeKind::kEntity ? n_entities : n_categories;
    std::vector<std::string> pool;
    for (const Node &n : graph.nodes()) {
      if (n.kind == kind) pool.push_back(n.id);
    }
    if (pool.size() < wanted) {
      throw Error(ErrorCode::kInsufficientNodes,
                  "asked for " + std::to_string(wanted) + " " +
                      std::string(NodeKindName(kind)) + " nodes, graph has " +
                      std::to_string(pool.size()));
    }
    SplitMix64 rng(seed, static_cast<uint64_t>(kind));
    Shuffle(std::span<std::string>(pool), rng);
    sample.insert(pool.begin(), pool.begin() + wanted);
  }
  return sample;
}

GoldEdgeSet LoadGold(const std::filesystem::path &edges_file,
                     const std::filesystem::path &nodes_file) {
  GoldEdgeSet gold;
  {
    auto in = OpenForRead(nodes_file);
    ForEachRow(in, [&](size_t line, const std::vector<std::string_view> &f) {
      if (f.size() != 1) {
        throw Error(ErrorCode::kMalformedRow,
                    nodes_file.filename().string() + ":" +
                        std::to_string(line));
      }
      gold.sampled_nodes.emplace(f[0]);
    });
  }
  for (LabeledEdge &e : LoadLabeledEdges(edges_file)) {
    gold.judgments[{std::move(e.child), std::move(e.parent)}] = e.label;
  }
  gold.Validate();
  return gold;
}

std::vector<AnnotatedPath> LoadAnnotatedPaths(
    const std::filesystem::path &file) {
  std::vector<AnnotatedPath> paths;
  auto in = OpenForRead(file);
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto json = nlohmann::json::parse(line);
      AnnotatedPath p;
      p.nodes = json.at("nodes").get<std::vector<std::string>>();
      const auto &wrong = json.at("first_wrong_index");
      if (!wrong.is_null()) p.first_wrong_index = wrong.get<size_t>();
      paths.push_back(std::move(p));
    } catch (const nlohmann::json::exception &e) {
      throw Error(ErrorCode::kMalformedRow, file.filename().string() + ":" +
                                                std::to_string(line_number) +
                                                " " + e.what());
    }
  }
  return paths;
}

double RoundTo(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

nlohmann::json EdgeMetricsJson(const EdgeMetrics &metrics) {
  return {{"P", RoundTo(metrics.macro_precision, 4)},
          {"R", RoundTo(metrics.recall, 4)},
          {"C", RoundTo(metrics.coverage, 4)},
          {"precision_defined", metrics.precision_defined},
          {"unjudged_hypernyms", metrics.unjudged_hypernyms}};
}

nlohmann::json PathMetricsJson(const PathMetrics &metrics) {
  return {{"AL", RoundTo(metrics.avg_length, 4)},
          {"ACPP", RoundTo(metrics.avg_cpp, 4)},
          {"ARCPP", RoundTo(metrics.avg_ratio_cpp, 4)}};
}

}  // namespace taxo
