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

// Induction extends a projected taxonomy. Network edges are weighted with
// is-a probabilities and every uncovered node is connected to the projected
// node set through its k most probable simple paths, where the probability
// of a path is the product of its edge probabilities.

#ifndef TAXO_INDUCTION_H_
#define TAXO_INDUCTION_H_

#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "taxo/classifier.h"
#include "taxo/graph.h"

namespace taxo {

struct InductionConfig {
  int k = 1;               // paths per uncovered node
  double epsilon = 1e-6;   // probability floor (and 1 - ceiling)
  bool uniform = false;    // every edge weighs 1
  int threads = 0;         // 0: one per hardware core

  void Validate() const;
};

// Network edges annotated with probabilities. Refers to the graph it was
// built from, which must outlive it.
class WeightedGraph {
 public:
  // `probability(child, parent)` is called once per edge and must return a
  // value in (0, 1]. Throws InvalidArgument otherwise.
  WeightedGraph(const WcnGraph &graph,
                const std::function<double(NodeIndex, NodeIndex)> &probability);

  const WcnGraph &graph() const { return *graph_; }

  // Aligned with graph().parents(child).
  std::span<const double> probabilities(NodeIndex child) const {
    return probability_[child];
  }
  std::span<const double> costs(NodeIndex child) const { return cost_[child]; }

  // Throws UnknownNode when the edge does not exist.
  double probability(NodeIndex child, NodeIndex parent) const;
  double cost(NodeIndex child, NodeIndex parent) const;

 private:
  size_t Slot(NodeIndex child, NodeIndex parent) const;

  const WcnGraph *graph_;
  std::vector<std::vector<double>> probability_;
  std::vector<std::vector<double>> cost_;  // -ln probability
};

// Scores entity->category edges with `entity_model` and category->category
// edges with `category_model`, clamped to [epsilon, 1 - epsilon]. With
// config.uniform every edge weighs 1 and the models are not consulted.
WeightedGraph WeighEdges(const WcnGraph &graph, const EdgeScorer &entity_model,
                         const EdgeScorer &category_model,
                         const InductionConfig &config);

struct ScoredPath {
  std::vector<std::string> nodes;  // start .. target
  double probability = 1.0;
  int hops = 0;

  bool operator==(const ScoredPath &) const = default;
};

// The k best simple child->parent paths from `start` to any node in
// `targets`. Targets are absorbing: a path ends at the first target it meets.
// Paths are ranked by probability (descending), then hop count, then the
// node-id sequence. Returns fewer than k paths when fewer exist. Throws
// InvalidArgument when start is a target or targets is empty.
std::vector<ScoredPath> TopKPaths(const WeightedGraph &weighted,
                                  std::string_view start,
                                  const std::set<std::string> &targets, int k);

struct InductionReport {
  double entity_coverage = 0.0;
  double category_coverage = 0.0;
  std::vector<std::string> uncovered;  // no path to the target set
  size_t edges_added = 0;
  int k = 1;
  bool uniform = false;
};

struct InductionResult {
  Taxonomy taxonomy;
  InductionReport report;
  // Paths found for each node that was uncovered in the projection.
  std::map<std::string, std::vector<ScoredPath>> paths;
};

// The target set is every node of `projected`, frozen before the search; a
// start node that is itself a target searches for the other targets. Throws
// EmptyProjectedTaxonomy and ProjectedEdgeNotInGraph.
InductionResult Induce(const Taxonomy &projected, const WeightedGraph &weighted,
                       const InductionConfig &config);

// Every network edge, as an induced edge of score 1.
Taxonomy WcnBaseline(const WcnGraph &graph);

}  // namespace taxo

#endif  // TAXO_INDUCTION_H_
