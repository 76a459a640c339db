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

// Transfers is-a edges from a source-language taxonomy onto the target
// category network. For every target node with a source equivalent, the
// source ancestors are mapped back through the interlanguage links and the
// shortest bounded network path to one of them becomes part of the output.

#ifndef TAXO_PROJECTION_H_
#define TAXO_PROJECTION_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "taxo/graph.h"

namespace taxo {

struct ProjectionConfig {
  int k1 = 14;  // max ancestor height in the source taxonomy
  int k2 = 3;   // max path length, in edges, in the target network

  void Validate() const;
};

struct ProjectionReport {
  double entity_coverage = 0.0;
  double category_coverage = 0.0;
  size_t skipped_no_equivalent = 0;
  size_t skipped_no_path = 0;
  size_t edges_added = 0;
};

struct ProjectionResult {
  Taxonomy taxonomy;
  ProjectionReport report;
};

// Nodes reachable from `node` in 1..k1 child->parent hops, excluding `node`.
std::set<std::string> CollectAncestors(const Taxonomy &taxonomy,
                                       std::string_view node, int k1);

// Target-language equivalents of `ancestors`; unlinked ids are dropped.
std::set<std::string> MapEquivalents(const std::set<std::string> &ancestors,
                                     const InterlangMap &links);

// Hop-shortest child->parent path from `start` to any of `targets` with at
// most `k2` edges, as the node sequence start..target. Parents are explored in
// stored edge order and the first target dequeued wins. Returns [start] when
// start is itself a target. Throws UnknownNode when start is not in the graph.
std::optional<std::vector<std::string>> BoundedShortestPath(
    const WcnGraph &graph, std::string_view start,
    const std::set<std::string> &targets, int k2);

ProjectionResult Project(const Taxonomy &source_taxonomy,
                         const WcnGraph &target_graph,
                         const InterlangMap &links,
                         const ProjectionConfig &config);

// Fraction of graph nodes of `kind` that are covered by `taxonomy`; 0 when the
// graph has no node of that kind.
double KindCoverage(const WcnGraph &graph, const Taxonomy &taxonomy,
                    NodeKind kind);

}  // namespace taxo

#endif  // TAXO_PROJECTION_H_
