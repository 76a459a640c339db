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

#include "taxo/graph.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <ostream>

#include "taxo/error.h"
#include "taxo/logging.h"
#include "taxo/tsv.h"

namespace taxo {

namespace {

bool IsBlank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

std::string Describe(std::string_view child, std::string_view parent) {
  std::string s(child);
  s += " -> ";
  s += parent;
  return s;
}

std::string AtLine(const std::filesystem::path &file, size_t line) {
  return file.filename().string() + ":" + std::to_string(line);
}

}  // namespace

std::string_view NodeKindName(NodeKind kind) {
  return kind == NodeKind::kEntity ? "entity" : "category";
}

std::string_view EdgeKindName(EdgeKind kind) {
  return kind == EdgeKind::kEntityToCategory ? "entity->category"
                                             : "category->category";
}

std::string_view ProvenanceName(Provenance provenance) {
  return provenance == Provenance::kProjected ? "projected" : "induced";
}

WcnGraph WcnGraph::Build(std::vector<Node> nodes,
                         std::span<const EdgeRef> edges, size_t *duplicates) {
  WcnGraph g;
  std::sort(nodes.begin(), nodes.end(),
            [](const Node &a, const Node &b) { return a.id < b.id; });
  for (size_t i = 0; i < nodes.size(); ++i) {
    const Node &n = nodes[i];
    if (n.id.empty()) {
      throw Error(ErrorCode::kMalformedRow, "empty node id");
    }
    if (IsBlank(n.title)) {
      throw Error(ErrorCode::kMalformedRow, "empty title for node " + n.id);
    }
    if (i > 0 && nodes[i - 1].id == n.id) {
      throw Error(ErrorCode::kDuplicateNodeId, n.id);
    }
  }
  g.nodes_ = std::move(nodes);
  g.index_.reserve(g.nodes_.size());
  for (size_t i = 0; i < g.nodes_.size(); ++i) {
    g.index_.emplace(g.nodes_[i].id, static_cast<NodeIndex>(i));
  }
  g.parents_.resize(g.nodes_.size());

  size_t dropped = 0;
  for (const EdgeRef &e : edges) {
    auto child = g.Find(e.child);
    auto parent = g.Find(e.parent);
    if (!child || !parent) {
      throw Error(ErrorCode::kUnknownNodeInEdge, Describe(e.child, e.parent));
    }
    if (*child == *parent) throw Error(ErrorCode::kSelfLoop, e.child);
    g.edge_kind(*child, *parent);  // throws on forbidden kinds
    if (!g.edge_set_.insert(EdgeKey(*child, *parent)).second) {
      ++dropped;
      continue;
    }
    g.parents_[*child].push_back(*parent);
    ++g.num_edges_;
  }
  if (dropped > 0) Log().warn("collapsed {} duplicate edges", dropped);
  if (duplicates != nullptr) *duplicates = dropped;
  return g;
}

std::optional<NodeIndex> WcnGraph::Find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeIndex WcnGraph::Index(std::string_view id) const {
  auto found = Find(id);
  if (!found) throw Error(ErrorCode::kUnknownNode, std::string(id));
  return *found;
}

bool WcnGraph::HasEdge(std::string_view child, std::string_view parent) const {
  auto c = Find(child);
  auto p = Find(parent);
  return c && p && HasEdge(*c, *p);
}

EdgeKind WcnGraph::edge_kind(NodeIndex child, NodeIndex parent) const {
  if (kind(parent) != NodeKind::kCategory) {
    throw Error(ErrorCode::kForbiddenEdgeKind, Describe(id(child), id(parent)));
  }
  return kind(child) == NodeKind::kEntity ? EdgeKind::kEntityToCategory
                                          : EdgeKind::kCategoryToCategory;
}

std::vector<std::pair<NodeIndex, NodeIndex>> WcnGraph::Edges() const {
  std::vector<std::pair<NodeIndex, NodeIndex>> out;
  out.reserve(num_edges_);
  for (NodeIndex c = 0; c < parents_.size(); ++c) {
    for (NodeIndex p : parents_[c]) out.emplace_back(c, p);
  }
  return out;
}

EdgeKind EdgeKindOf(const WcnGraph &graph, std::string_view child,
                    std::string_view parent) {
  return graph.edge_kind(graph.Index(child), graph.Index(parent));
}

bool Taxonomy::Add(const TaxoEdge &edge) {
  if (!(edge.score >= 0.0 && edge.score <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "score out of [0,1] on " + Describe(edge.child, edge.parent));
  }
  auto [it, inserted] = edges_.try_emplace({edge.child, edge.parent},
                                           Entry{edge.score, edge.provenance});
  if (!inserted) {
    it->second.score = std::max(it->second.score, edge.score);
    return false;
  }
  parents_[edge.child].push_back(edge.parent);
  return true;
}

bool Taxonomy::Contains(std::string_view child, std::string_view parent) const {
  return edges_.contains(std::pair<std::string, std::string>(child, parent));
}

bool Taxonomy::Covered(std::string_view node) const {
  return parents_.contains(std::string(node));
}

std::span<const std::string> Taxonomy::Parents(std::string_view node) const {
  auto it = parents_.find(std::string(node));
  if (it == parents_.end()) return {};
  return it->second;
}

std::vector<std::string> Taxonomy::NodeIds() const {
  std::vector<std::string> ids;
  ids.reserve(edges_.size() * 2);
  for (const auto &[key, entry] : edges_) {
    ids.push_back(key.first);
    ids.push_back(key.second);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::vector<std::string> Taxonomy::CoveredNodes() const {
  std::vector<std::string> ids;
  ids.reserve(parents_.size());
  for (const auto &[child, parents] : parents_) ids.push_back(child);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<TaxoEdge> Taxonomy::Edges() const {
  std::vector<TaxoEdge> out;
  out.reserve(edges_.size());
  for (const auto &[key, entry] : edges_) {
    out.push_back({key.first, key.second, entry.score, entry.provenance});
  }
  return out;
}

std::optional<TaxoEdge> Taxonomy::Find(std::string_view child,
                                       std::string_view parent) const {
  auto it = edges_.find(std::pair<std::string, std::string>(child, parent));
  if (it == edges_.end()) return std::nullopt;
  return TaxoEdge{it->first.first, it->first.second, it->second.score,
                  it->second.provenance};
}

void InterlangMap::Add(std::string target_id, std::string source_id) {
  if (target_id.empty() || source_id.empty()) {
    throw Error(ErrorCode::kMalformedRow, "empty id in interlanguage link");
  }
  if (to_source_.contains(target_id)) {
    throw Error(ErrorCode::kNonBijectiveLink, target_id);
  }
  if (to_target_.contains(source_id)) {
    throw Error(ErrorCode::kNonBijectiveLink, source_id);
  }
  to_source_.emplace(target_id, source_id);
  to_target_.emplace(std::move(source_id), std::move(target_id));
}

std::optional<std::string_view> InterlangMap::ToSource(
    std::string_view target_id) const {
  auto it = to_source_.find(std::string(target_id));
  if (it == to_source_.end()) return std::nullopt;
  return std::string_view(it->second);
}

std::optional<std::string_view> InterlangMap::ToTarget(
    std::string_view source_id) const {
  auto it = to_target_.find(std::string(source_id));
  if (it == to_target_.end()) return std::nullopt;
  return std::string_view(it->second);
}

WcnGraph LoadWcn(const std::filesystem::path &nodes_file,
                 const std::filesystem::path &edges_file) {
  std::vector<Node> nodes;
  {
    auto in = OpenForRead(nodes_file);
    ForEachRow(in, [&](size_t line, const std::vector<std::string_view> &f) {
      if (f.size() != 3 || f[0].empty()) {
        throw Error(ErrorCode::kMalformedRow, AtLine(nodes_file, line));
      }
      Node n;
      n.id = f[0];
      if (f[1] == "entity") {
        n.kind = NodeKind::kEntity;
      } else if (f[1] == "category") {
        n.kind = NodeKind::kCategory;
      } else {
        throw Error(ErrorCode::kMalformedRow,
                    AtLine(nodes_file, line) + " unknown kind");
      }
      n.title = f[2];
      if (IsBlank(n.title)) {
        throw Error(ErrorCode::kMalformedRow,
                    AtLine(nodes_file, line) + " empty title");
      }
      nodes.push_back(std::move(n));
    });
  }
  std::vector<EdgeRef> edges;
  {
    auto in = OpenForRead(edges_file);
    ForEachRow(in, [&](size_t line, const std::vector<std::string_view> &f) {
      if (f.size() != 2 || f[0].empty() || f[1].empty()) {
        throw Error(ErrorCode::kMalformedRow, AtLine(edges_file, line));
      }
      edges.push_back({std::string(f[0]), std::string(f[1])});
    });
  }
  return WcnGraph::Build(std::move(nodes), edges);
}

void SaveWcn(const WcnGraph &graph, const std::filesystem::path &nodes_file,
             const std::filesystem::path &edges_file) {
  auto nodes = OpenForWrite(nodes_file);
  for (const Node &n : graph.nodes()) {
    nodes << n.id << '\t' << NodeKindName(n.kind) << '\t' << n.title << '\n';
  }
  auto edges = OpenForWrite(edges_file);
  for (auto [c, p] : graph.Edges()) {
    edges << graph.id(c) << '\t' << graph.id(p) << '\n';
  }
}

InterlangMap LoadInterlang(const std::filesystem::path &file) {
  InterlangMap map;
  auto in = OpenForRead(file);
  ForEachRow(in, [&](size_t line, const std::vector<std::string_view> &f) {
    if (f.size() != 2 || f[0].empty() || f[1].empty()) {
      throw Error(ErrorCode::kMalformedRow, AtLine(file, line));
    }
    map.Add(std::string(f[0]), std::string(f[1]));
  });
  return map;
}

Taxonomy ReadTaxonomy(std::istream &in) {
  Taxonomy taxonomy;
  ForEachRow(in, [&](size_t line, const std::vector<std::string_view> &f) {
    const std::string where = "line " + std::to_string(line);
    if (f.size() < 2 || f.size() > 4 || f[0].empty() || f[1].empty()) {
      throw Error(ErrorCode::kMalformedRow, where);
    }
    TaxoEdge edge{std::string(f[0]), std::string(f[1]), 1.0,
                  Provenance::kProjected};
    if (f.size() >= 3) {
      std::string text(f[2]);
      char *end = nullptr;
      edge.score = std::strtod(text.c_str(), &end);
      if (text.empty() || *end != '\0' || !(edge.score >= 0.0) ||
          edge.score > 1.0) {
        throw Error(ErrorCode::kMalformedRow, where + " bad score");
      }
    }
    if (f.size() == 4) {
      if (f[3] == "projected") {
        edge.provenance = Provenance::kProjected;
      } else if (f[3] == "induced") {
        edge.provenance = Provenance::kInduced;
      } else {
        throw Error(ErrorCode::kMalformedRow, where + " bad provenance");
      }
    }
    taxonomy.Add(edge);
  });
  return taxonomy;
}

Taxonomy LoadTaxonomy(const std::filesystem::path &file) {
  auto in = OpenForRead(file);
  try {
    return ReadTaxonomy(in);
  } catch (const Error &e) {
    throw Error(e.code(), file.filename().string() + " " + e.what());
  }
}

void WriteTaxonomy(const Taxonomy &taxonomy, std::ostream &out) {
  char score[32];
  for (const TaxoEdge &e : taxonomy.Edges()) {
    std::snprintf(score, sizeof(score), "%.6f", e.score);
    out << e.child << '\t' << e.parent << '\t' << score << '\t'
        << ProvenanceName(e.provenance) << '\n';
  }
}

void SaveTaxonomy(const Taxonomy &taxonomy, const std::filesystem::path &file) {
  auto out = OpenForWrite(file);
  WriteTaxonomy(taxonomy, out);
}

}  // namespace taxo
