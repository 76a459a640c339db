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

#include "taxo/induction.h"

#include <algorithm>
#include <atomic>
#include <thread>

#include "taxo/error.h"
#include "taxo/projection.h"

namespace taxo {

void InductionConfig::Validate() const {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be in (0, 1)");
  }
  if (threads < 0) {
    throw Error(ErrorCode::kInvalidArgument, "threads must be >= 0");
  }
}

WeightedGraph WeighEdges(const WcnGraph &graph, const EdgeScorer &entity_model,
                         const EdgeScorer &category_model,
                         const InductionConfig &config) {
  config.Validate();
  if (config.uniform) {
    return WeightedGraph(graph, [](NodeIndex, NodeIndex) { return 1.0; });
  }
  const double low = config.epsilon;
  const double high = 1.0 - config.epsilon;
  return WeightedGraph(graph, [&](NodeIndex child, NodeIndex parent) {
    const EdgeScorer &model =
        graph.edge_kind(child, parent) == EdgeKind::kEntityToCategory
            ? entity_model
            : category_model;
    const double p =
        model.Probability(graph.node(child).title, graph.node(parent).title);
    return std::clamp(p, low, high);
  });
}

InductionResult Induce(const Taxonomy &projected, const WeightedGraph &weighted,
                       const InductionConfig &config) {
  config.Validate();
  const WcnGraph &graph = weighted.graph();
  if (projected.empty()) {
    throw Error(ErrorCode::kEmptyProjectedTaxonomy,
                "induction needs a non-empty projected taxonomy");
  }
  for (const TaxoEdge &e : projected.Edges()) {
    if (!graph.HasEdge(e.child, e.parent)) {
      throw Error(ErrorCode::kProjectedEdgeNotInGraph,
                  e.child + " -> " + e.parent);
    }
  }

  const std::vector<std::string> node_ids = projected.NodeIds();
  const std::set<std::string> targets(node_ids.begin(), node_ids.end());
  std::vector<std::string> starts;
  for (const Node &n : graph.nodes()) {
    if (!projected.Covered(n.id)) starts.push_back(n.id);
  }

  // Each start node owns one result slot, so the merge below sees the same
  // data no matter how the work was scheduled.
  std::vector<std::vector<ScoredPath>> found(starts.size());
  auto search = [&](size_t i) {
    const std::string &start = starts[i];
    if (targets.contains(start)) {
      std::set<std::string> others = targets;
      others.erase(start);
      if (!others.empty()) {
        found[i] = TopKPaths(weighted, start, others, config.k);
      }
    } else {
      found[i] = TopKPaths(weighted, start, targets, config.k);
    }
  };
  size_t workers = config.threads > 0
                       ? static_cast<size_t>(config.threads)
                       : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<size_t>(1, starts.size()));
  if (workers <= 1) {
    for (size_t i = 0; i < starts.size(); ++i) search(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (size_t i = next++; i < starts.size(); i = next++) search(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto &t : pool) t.join();
    for (auto &e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  InductionResult result;
  result.taxonomy = projected;
  InductionReport &report = result.report;
  report.k = config.k;
  report.uniform = config.uniform;
  for (size_t i = 0; i < starts.size(); ++i) {
    if (found[i].empty()) {
      report.uncovered.push_back(starts[i]);
      continue;
    }
    for (const ScoredPath &path : found[i]) {
      for (size_t j = 0; j + 1 < path.nodes.size(); ++j) {
        if (result.taxonomy.Add({path.nodes[j], path.nodes[j + 1],
                                 path.probability, Provenance::kInduced})) {
          ++report.edges_added;
        }
      }
    }
    result.paths.emplace(starts[i], std::move(found[i]));
  }
  report.entity_coverage =
      KindCoverage(graph, result.taxonomy, NodeKind::kEntity);
  report.category_coverage =
      KindCoverage(graph, result.taxonomy, NodeKind::kCategory);
  return result;
}

Taxonomy WcnBaseline(const WcnGraph &graph) {
  Taxonomy taxonomy;
  for (auto [c, p] : graph.Edges()) {
    taxonomy.Add({graph.id(c), graph.id(p), 1.0, Provenance::kInduced});
  }
  return taxonomy;
}

}  // namespace taxo
