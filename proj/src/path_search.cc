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

// Max-product path search. Probabilities become additive costs -ln p, so the
// most probable path is a shortest path. Single best paths come from a
// best-first search towards a virtual sink behind all targets; k-best lists
// come from Yen's deviation scheme on top of it.

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <unordered_set>

#include "taxo/error.h"
#include "taxo/induction.h"

namespace taxo {

namespace {

// Costs that differ by less than this relative amount are treated as equal,
// so that products that are equal in exact arithmetic tie regardless of the
// order in which their logarithms were summed.
constexpr double kCostTolerance = 1e-12;

bool CostLess(double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return a < b - kCostTolerance * scale;
}

struct Candidate {
  double cost = 0.0;
  std::vector<NodeIndex> nodes;

  size_t hops() const { return nodes.size() - 1; }
};

// Total order on paths: cost, then hops, then node sequence. Node handles
// follow id order, so comparing handles compares ids.
bool Better(const Candidate &a, const Candidate &b) {
  if (CostLess(a.cost, b.cost)) return true;
  if (CostLess(b.cost, a.cost)) return false;
  if (a.nodes.size() != b.nodes.size()) return a.nodes.size() < b.nodes.size();
  return a.nodes < b.nodes;
}

struct WorseFirst {
  bool operator()(const Candidate &a, const Candidate &b) const {
    return Better(b, a);
  }
};

uint64_t EdgeKey(NodeIndex child, NodeIndex parent) {
  return (static_cast<uint64_t>(child) << 32) | parent;
}

// Best path from `source` to the first target reached, avoiding blocked nodes
// and edges. Returns an empty candidate when no target is reachable.
Candidate BestPath(const WeightedGraph &weighted, NodeIndex source,
                   const std::vector<char> &is_target,
                   const std::vector<char> &blocked_node,
                   const std::unordered_set<uint64_t> &blocked_edge) {
  const WcnGraph &graph = weighted.graph();
  std::vector<char> settled(graph.num_nodes(), 0);
  std::priority_queue<Candidate, std::vector<Candidate>, WorseFirst> heap;
  heap.push({0.0, {source}});
  while (!heap.empty()) {
    Candidate current = heap.top();
    heap.pop();
    const NodeIndex node = current.nodes.back();
    if (settled[node]) continue;
    settled[node] = 1;
    if (is_target[node]) return current;
    auto parents = graph.parents(node);
    auto costs = weighted.costs(node);
    for (size_t i = 0; i < parents.size(); ++i) {
      const NodeIndex parent = parents[i];
      if (settled[parent] || blocked_node[parent]) continue;
      if (!blocked_edge.empty() &&
          blocked_edge.contains(EdgeKey(node, parent))) {
        continue;
      }
      Candidate next{current.cost + costs[i], current.nodes};
      next.nodes.push_back(parent);
      heap.push(std::move(next));
    }
  }
  return {};
}

// Cost summed from the start of the path, so every path is scored the same
// way no matter how it was assembled.
double PathCost(const WeightedGraph &weighted,
                const std::vector<NodeIndex> &nodes) {
  double cost = 0.0;
  for (size_t i = 0; i + 1 < nodes.size(); ++i) {
    cost += weighted.cost(nodes[i], nodes[i + 1]);
  }
  return cost;
}

}  // namespace

WeightedGraph::WeightedGraph(
    const WcnGraph &graph,
    const std::function<double(NodeIndex, NodeIndex)> &probability)
    : graph_(&graph) {
  probability_.resize(graph.num_nodes());
  cost_.resize(graph.num_nodes());
  for (NodeIndex c = 0; c < graph.num_nodes(); ++c) {
    for (NodeIndex p : graph.parents(c)) {
      const double value = probability(c, p);
      if (!(value > 0.0 && value <= 1.0)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "edge probability outside (0, 1] on " + graph.id(c) +
                        " -> " + graph.id(p));
      }
      probability_[c].push_back(value);
      cost_[c].push_back(-std::log(value));
    }
  }
}

size_t WeightedGraph::Slot(NodeIndex child, NodeIndex parent) const {
  auto parents = graph_->parents(child);
  auto it = std::find(parents.begin(), parents.end(), parent);
  if (it == parents.end()) {
    throw Error(ErrorCode::kUnknownNode,
                "no edge " + graph_->id(child) + " -> " + graph_->id(parent));
  }
  return static_cast<size_t>(it - parents.begin());
}

double WeightedGraph::probability(NodeIndex child, NodeIndex parent) const {
  return probability_[child][Slot(child, parent)];
}

double WeightedGraph::cost(NodeIndex child, NodeIndex parent) const {
  return cost_[child][Slot(child, parent)];
}

std::vector<ScoredPath> TopKPaths(const WeightedGraph &weighted,
                                  std::string_view start,
                                  const std::set<std::string> &targets,
                                  int k) {
  const WcnGraph &graph = weighted.graph();
  const NodeIndex source = graph.Index(start);
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (targets.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty target set");
  }
  if (targets.contains(std::string(start))) {
    throw Error(ErrorCode::kInvalidArgument, "start node is a target");
  }
  std::vector<char> is_target(graph.num_nodes(), 0);
  for (const std::string &t : targets) {
    if (auto index = graph.Find(t)) is_target[*index] = 1;
  }

  std::vector<Candidate> accepted;
  std::vector<char> no_nodes(graph.num_nodes(), 0);
  Candidate best = BestPath(weighted, source, is_target, no_nodes, {});
  if (!best.nodes.empty()) accepted.push_back(std::move(best));

  std::vector<Candidate> pending;
  std::set<std::vector<NodeIndex>> seen;
  if (!accepted.empty()) seen.insert(accepted.front().nodes);
  while (!accepted.empty() && accepted.size() < static_cast<size_t>(k)) {
    const std::vector<NodeIndex> last = accepted.back().nodes;
    std::vector<char> blocked_node(graph.num_nodes(), 0);
    for (size_t i = 0; i + 1 < last.size(); ++i) {
      // Root is last[0..i]; deviate at last[i].
      std::unordered_set<uint64_t> blocked_edge;
      for (const Candidate &path : accepted) {
        if (path.nodes.size() > i + 1 &&
            std::equal(last.begin(), last.begin() + i + 1,
                       path.nodes.begin())) {
          blocked_edge.insert(EdgeKey(path.nodes[i], path.nodes[i + 1]));
        }
      }
      Candidate spur =
          BestPath(weighted, last[i], is_target, blocked_node, blocked_edge);
      blocked_node[last[i]] = 1;
      if (spur.nodes.empty()) continue;
      Candidate total;
      total.nodes.assign(last.begin(), last.begin() + i);
      total.nodes.insert(total.nodes.end(), spur.nodes.begin(),
                         spur.nodes.end());
      if (!seen.insert(total.nodes).second) continue;
      total.cost = PathCost(weighted, total.nodes);
      pending.push_back(std::move(total));
    }
    if (pending.empty()) break;
    auto next = std::min_element(pending.begin(), pending.end(), Better);
    accepted.push_back(std::move(*next));
    pending.erase(next);
  }

  std::vector<ScoredPath> out;
  out.reserve(accepted.size());
  for (const Candidate &c : accepted) {
    ScoredPath path;
    path.hops = static_cast<int>(c.hops());
    for (size_t i = 0; i < c.nodes.size(); ++i) {
      path.nodes.push_back(graph.id(c.nodes[i]));
      if (i + 1 < c.nodes.size()) {
        path.probability *= weighted.probability(c.nodes[i], c.nodes[i + 1]);
      }
    }
    out.push_back(std::move(path));
  }
  return out;
}

}  // namespace taxo
