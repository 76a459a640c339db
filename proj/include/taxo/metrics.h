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

// Taxonomy evaluation against human judgments.
//
// Edge level, over a sample of nodes:
//   coverage  = share of nodes with at least one returned hypernym
//   recall    = share of nodes with at least one correct returned hypernym
//   precision = mean, over nodes with an answer, of correct / returned
//
// Path level, over annotated generalization paths: a path's correct prefix
// (CPP) runs up to, not including, the first node reached by a wrong hop.
// Lengths are counted in nodes.

#ifndef TAXO_METRICS_H_
#define TAXO_METRICS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "taxo/graph.h"
#include "taxo/labeling.h"

namespace taxo {

struct GoldEdgeSet {
  std::set<std::string> sampled_nodes;
  std::map<std::pair<std::string, std::string>, Label> judgments;

  // Throws InvalidArgument if a judged child was not sampled.
  void Validate() const;
};

struct EdgeMetrics {
  double macro_precision = 0.0;
  double recall = 0.0;
  double coverage = 0.0;
  bool precision_defined = false;  // false when no sampled node is answered
  size_t answered_nodes = 0;
  size_t unjudged_hypernyms = 0;  // returned but absent from the gold set
};

// Throws EmptyGold when no node was sampled.
EdgeMetrics ComputeEdgeMetrics(const Taxonomy &taxonomy,
                               const GoldEdgeSet &gold);

struct AnnotatedPath {
  std::vector<std::string> nodes;
  std::optional<size_t> first_wrong_index;  // 0-based, in [1, |nodes|)

  size_t CorrectPrefix() const {
    return first_wrong_index.value_or(nodes.size());
  }
};

struct PathMetrics {
  double avg_length = 0.0;     // AL
  double avg_cpp = 0.0;        // ACPP
  double avg_ratio_cpp = 0.0;  // ARCPP
};

// Throws EmptyPathSet, and InvalidArgument on malformed annotations.
PathMetrics ComputePathMetrics(const std::vector<AnnotatedPath> &paths);

// Mean number of hypernyms over covered nodes. Throws EmptyTaxonomy.
double BranchingFactor(const Taxonomy &taxonomy);

// Largest upward hop distance from a node to any of its ancestors, maximized
// over up to `sample_size` covered nodes picked with `seed`.
size_t MaxDepthSampled(const Taxonomy &taxonomy, size_t sample_size,
                       uint64_t seed);

// Uniform sample without replacement of each node kind. Throws
// InsufficientNodes when a kind has fewer nodes than requested.
std::set<std::string> SampleEvalNodes(const WcnGraph &graph, size_t n_entities,
                                      size_t n_categories, uint64_t seed);

// gold_edges.tsv (child, parent, isa|notisa) plus one sampled id per line.
GoldEdgeSet LoadGold(const std::filesystem::path &edges_file,
                     const std::filesystem::path &nodes_file);

// One {"nodes": [...], "first_wrong_index": int|null} object per line.
std::vector<AnnotatedPath> LoadAnnotatedPaths(const std::filesystem::path &file);

// Rounded to 4 decimals.
nlohmann::json EdgeMetricsJson(const EdgeMetrics &metrics);
nlohmann::json PathMetricsJson(const PathMetrics &metrics);

double RoundTo(double value, int decimals);

}  // namespace taxo

#endif  // TAXO_METRICS_H_
