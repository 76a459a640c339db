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

// Core data model: the category network of one language, taxonomies of is-a
// edges, and interlanguage links, together with their flat-file formats.

#ifndef TAXO_GRAPH_H_
#define TAXO_GRAPH_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace taxo {

enum class NodeKind { kEntity, kCategory };
enum class EdgeKind { kEntityToCategory, kCategoryToCategory };

std::string_view NodeKindName(NodeKind kind);
std::string_view EdgeKindName(EdgeKind kind);

// Dense node handle. Handles follow ascending lexicographic id order, so
// comparing two handles compares the underlying ids.
using NodeIndex = uint32_t;

struct Node {
  std::string id;
  NodeKind kind = NodeKind::kCategory;
  std::string title;
};

struct EdgeRef {
  std::string child;
  std::string parent;
};

// Category network with child->parent ("grouped into") edges. Immutable once
// built. Entity->Entity and Category->Entity edges are rejected; parallel
// edges are collapsed; cycles among categories are allowed.
class WcnGraph {
 public:
  WcnGraph() = default;

  // Validates and indexes the input. `duplicates`, when given, receives the
  // number of repeated edges that were dropped.
  static WcnGraph Build(std::vector<Node> nodes, std::span<const EdgeRef> edges,
                        size_t *duplicates = nullptr);

  size_t num_nodes() const { return nodes_.size(); }
  size_t num_edges() const { return num_edges_; }

  const Node &node(NodeIndex index) const { return nodes_[index]; }
  const std::string &id(NodeIndex index) const { return nodes_[index].id; }
  NodeKind kind(NodeIndex index) const { return nodes_[index].kind; }
  const std::vector<Node> &nodes() const { return nodes_; }

  std::optional<NodeIndex> Find(std::string_view id) const;

  // Like Find() but throws UnknownNode.
  NodeIndex Index(std::string_view id) const;

  // Parents in input order, after dedup.
  std::span<const NodeIndex> parents(NodeIndex child) const {
    return parents_[child];
  }

  bool HasEdge(NodeIndex child, NodeIndex parent) const {
    return edge_set_.contains(EdgeKey(child, parent));
  }
  bool HasEdge(std::string_view child, std::string_view parent) const;

  // Kind of the edge between two existing nodes. Throws ForbiddenEdgeKind
  // when the pair can not be a network edge.
  EdgeKind edge_kind(NodeIndex child, NodeIndex parent) const;

  // All edges as (child, parent) handles, grouped by child in handle order.
  std::vector<std::pair<NodeIndex, NodeIndex>> Edges() const;

 private:
  static uint64_t EdgeKey(NodeIndex child, NodeIndex parent) {
    return (static_cast<uint64_t>(child) << 32) | parent;
  }

  std::vector<Node> nodes_;
  std::unordered_map<std::string, NodeIndex> index_;
  std::vector<std::vector<NodeIndex>> parents_;
  std::unordered_set<uint64_t> edge_set_;
  size_t num_edges_ = 0;
};

// Kind of the edge between two nodes given by id. Throws UnknownNode or
// ForbiddenEdgeKind.
EdgeKind EdgeKindOf(const WcnGraph &graph, std::string_view child,
                    std::string_view parent);

enum class Provenance { kProjected, kInduced };

std::string_view ProvenanceName(Provenance provenance);

struct TaxoEdge {
  std::string child;
  std::string parent;
  double score = 1.0;
  Provenance provenance = Provenance::kProjected;

  bool operator==(const TaxoEdge &) const = default;
};

// Set of is-a edges keyed by (child, parent). Node ids are free strings so the
// same type holds source- and target-language taxonomies.
class Taxonomy {
 public:
  // Inserts an edge. When the pair already exists the stored score becomes the
  // maximum of both and the original provenance is kept. Returns true when the
  // pair was new. Throws InvalidArgument for scores outside [0, 1].
  bool Add(const TaxoEdge &edge);

  bool Contains(std::string_view child, std::string_view parent) const;

  // True when `node` is the child of at least one edge.
  bool Covered(std::string_view node) const;

  // Hypernyms of `node` in insertion order; empty when uncovered.
  std::span<const std::string> Parents(std::string_view node) const;

  // Every node that occurs as child or parent.
  std::vector<std::string> NodeIds() const;

  // Children in ascending id order.
  std::vector<std::string> CoveredNodes() const;

  // Edges in ascending (child, parent) order.
  std::vector<TaxoEdge> Edges() const;

  std::optional<TaxoEdge> Find(std::string_view child,
                               std::string_view parent) const;

  size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  bool operator==(const Taxonomy &other) const {
    return edges_ == other.edges_;
  }

 private:
  struct Entry {
    double score;
    Provenance provenance;
    bool operator==(const Entry &) const = default;
  };

  std::map<std::pair<std::string, std::string>, Entry, std::less<>> edges_;
  std::unordered_map<std::string, std::vector<std::string>> parents_;
};

// One-to-one partial mapping between target- and source-language node ids.
class InterlangMap {
 public:
  // Adds a link; throws NonBijectiveLink if either side is already linked and
  // MalformedRow when either id is empty.
  void Add(std::string target_id, std::string source_id);

  std::optional<std::string_view> ToSource(std::string_view target_id) const;
  std::optional<std::string_view> ToTarget(std::string_view source_id) const;

  size_t size() const { return to_source_.size(); }

 private:
  std::unordered_map<std::string, std::string> to_source_;
  std::unordered_map<std::string, std::string> to_target_;
};

// Flat-file I/O. All formats are UTF-8, tab separated, one record per line,
// without header. Malformed input raises an Error naming the line number.
WcnGraph LoadWcn(const std::filesystem::path &nodes_file,
                 const std::filesystem::path &edges_file);
void SaveWcn(const WcnGraph &graph, const std::filesystem::path &nodes_file,
             const std::filesystem::path &edges_file);

InterlangMap LoadInterlang(const std::filesystem::path &file);

// Reads child, parent and optional score and provenance columns (defaults 1.0
// and projected).
Taxonomy LoadTaxonomy(const std::filesystem::path &file);
Taxonomy ReadTaxonomy(std::istream &in);
void SaveTaxonomy(const Taxonomy &taxonomy, const std::filesystem::path &file);
void WriteTaxonomy(const Taxonomy &taxonomy, std::ostream &out);

}  // namespace taxo

#endif  // TAXO_GRAPH_H_
