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

#ifndef TAXO_LABELING_H_
#define TAXO_LABELING_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "taxo/graph.h"

namespace taxo {

enum class Label { kIsA, kNotIsA };

std::string_view LabelName(Label label);

struct LabeledEdge {
  std::string child;
  std::string parent;
  Label label = Label::kIsA;

  bool operator==(const LabeledEdge &) const = default;
};

struct EdgeDataset {
  EdgeKind kind = EdgeKind::kEntityToCategory;
  std::vector<LabeledEdge> train;
  std::vector<LabeledEdge> validation;
};

// Projected edges become is-a; every other network edge whose child is
// covered by the projection becomes not-is-a; the rest stay unlabeled.
// Output is sorted by (child, parent). Throws ProjectedEdgeNotInGraph.
std::vector<LabeledEdge> LabelEdges(const WcnGraph &graph,
                                    const Taxonomy &projected);

struct KindPartition {
  std::vector<LabeledEdge> entity;    // entity -> category
  std::vector<LabeledEdge> category;  // category -> category
};

// Order-preserving partition by edge kind.
KindPartition SplitByKind(const std::vector<LabeledEdge> &edges,
                          const WcnGraph &graph);

struct Split {
  std::vector<LabeledEdge> train;
  std::vector<LabeledEdge> validation;
};

// Stratified split: floor(fraction * class size) edges of each label go to
// validation, picked by a seeded shuffle of the sorted class. Both halves come
// back sorted by (child, parent).
Split TrainValSplit(const std::vector<LabeledEdge> &edges,
                    double validation_fraction, uint64_t seed);

// Train/validation split of edges already restricted to `kind`.
EdgeDataset MakeDataset(EdgeKind kind, const std::vector<LabeledEdge> &edges,
                        double validation_fraction, uint64_t seed);

void SaveLabeledEdges(const std::vector<LabeledEdge> &edges,
                      const std::filesystem::path &file);
std::vector<LabeledEdge> LoadLabeledEdges(const std::filesystem::path &file);

}  // namespace taxo

#endif  // TAXO_LABELING_H_
