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

#include "taxo/projection.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_set>

#include "taxo/error.h"

namespace taxo {

void ProjectionConfig::Validate() const {
  if (k1 < 1) throw Error(ErrorCode::kInvalidArgument, "k1 must be >= 1");
  if (k2 < 1) throw Error(ErrorCode::kInvalidArgument, "k2 must be >= 1");
}

std::set<std::string> CollectAncestors(const Taxonomy &taxonomy,
                                       std::string_view node, int k1) {
  std::set<std::string> ancestors;
  std::unordered_set<std::string> visited{std::string(node)};
  std::vector<std::string> frontier{std::string(node)};
  for (int depth = 0; depth < k1 && !frontier.empty(); ++depth) {
    std::vector<std::string> next;
    for (const std::string &n : frontier) {
      for (const std::string &parent : taxonomy.Parents(n)) {
        if (!visited.insert(parent).second) continue;
        ancestors.insert(parent);
        next.push_back(parent);
      }
    }
    frontier = std::move(next);
  }
  return ancestors;
}

std::set<std::string> MapEquivalents(const std::set<std::string> &ancestors,
                                     const InterlangMap &links) {
  std::set<std::string> out;
  for (const std::string &a : ancestors) {
    if (auto target = links.ToTarget(a)) out.emplace(*target);
  }
  return out;
}

std::optional<std::vector<std::string>> BoundedShortestPath(
    const WcnGraph &graph, std::string_view start,
    const std::set<std::string> &targets, int k2) {
  const NodeIndex source = graph.Index(start);
  std::vector<char> is_target(graph.num_nodes(), 0);
  bool any = false;
  for (const std::string &t : targets) {
    if (auto index = graph.Find(t)) {
      is_target[*index] = 1;
      any = true;
    }
  }
  if (!any) return std::nullopt;

  constexpr NodeIndex kNone = std::numeric_limits<NodeIndex>::max();
  std::vector<NodeIndex> previous(graph.num_nodes(), kNone);
  std::vector<int> depth(graph.num_nodes(), -1);
  std::deque<NodeIndex> queue{source};
  depth[source] = 0;
  while (!queue.empty()) {
    NodeIndex current = queue.front();
    queue.pop_front();
    if (is_target[current]) {
      std::vector<std::string> path;
      for (NodeIndex n = current; n != kNone; n = previous[n]) {
        path.push_back(graph.id(n));
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    if (depth[current] == k2) continue;
    for (NodeIndex parent : graph.parents(current)) {
      if (depth[parent] >= 0) continue;
      depth[parent] = depth[current] + 1;
      previous[parent] = current;
      queue.push_back(parent);
    }
  }
  return std::nullopt;
}

double KindCoverage(const WcnGraph &graph, const Taxonomy &taxonomy,
                    NodeKind kind) {
  size_t total = 0;
  size_t covered = 0;
  for (const Node &n : graph.nodes()) {
    if (n.kind != kind) continue;
    ++total;
    if (taxonomy.Covered(n.id)) ++covered;
  }
  return total == 0 ? 0.0 : static_cast<double>(covered) / total;
}

ProjectionResult Project(const Taxonomy &source_taxonomy,
                         const WcnGraph &target_graph,
                         const InterlangMap &links,
                         const ProjectionConfig &config) {
  config.Validate();
  ProjectionResult result;
  Taxonomy &projected = result.taxonomy;
  ProjectionReport &report = result.report;

  // Node handles are already in ascending id order.
  for (const Node &node : target_graph.nodes()) {
    if (projected.Covered(node.id)) continue;
    auto equivalent = links.ToSource(node.id);
    if (!equivalent) {
      ++report.skipped_no_equivalent;
      continue;
    }
    auto ancestors = CollectAncestors(source_taxonomy, *equivalent, config.k1);
    auto targets = MapEquivalents(ancestors, links);
    auto path = BoundedShortestPath(target_graph, node.id, targets, config.k2);
    if (!path || path->size() < 2) {
      ++report.skipped_no_path;
      continue;
    }
    for (size_t i = 0; i + 1 < path->size(); ++i) {
      if (projected.Add({(*path)[i], (*path)[i + 1], 1.0,
                         Provenance::kProjected})) {
        ++report.edges_added;
      }
    }
  }
  report.entity_coverage =
      KindCoverage(target_graph, projected, NodeKind::kEntity);
  report.category_coverage =
      KindCoverage(target_graph, projected, NodeKind::kCategory);
  return result;
}

}  // namespace taxo
