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

#include "taxo/labeling.h"

#include <algorithm>
#include <cmath>
#include <span>
#include <tuple>

#include "taxo/error.h"
#include "taxo/logging.h"
#include "taxo/random.h"
#include "taxo/tsv.h"

namespace taxo {

namespace {

bool ByEdge(const LabeledEdge &a, const LabeledEdge &b) {
  return std::tie(a.child, a.parent) < std::tie(b.child, b.parent);
}

}  // namespace

std::string_view LabelName(Label label) {
  return label == Label::kIsA ? "isa" : "notisa";
}

std::vector<LabeledEdge> LabelEdges(const WcnGraph &graph,
                                    const Taxonomy &projected) {
  std::vector<LabeledEdge> out;
  for (const TaxoEdge &e : projected.Edges()) {
    if (!graph.HasEdge(e.child, e.parent)) {
      throw Error(ErrorCode::kProjectedEdgeNotInGraph,
                  e.child + " -> " + e.parent);
    }
    out.push_back({e.child, e.parent, Label::kIsA});
  }
  for (auto [c, p] : graph.Edges()) {
    const std::string &child = graph.id(c);
    const std::string &parent = graph.id(p);
    if (!projected.Covered(child) || projected.Contains(child, parent)) {
      continue;
    }
    out.push_back({child, parent, Label::kNotIsA});
  }
  std::sort(out.begin(), out.end(), ByEdge);
  return out;
}

KindPartition SplitByKind(const std::vector<LabeledEdge> &edges,
                          const WcnGraph &graph) {
  KindPartition out;
  for (const LabeledEdge &e : edges) {
    if (EdgeKindOf(graph, e.child, e.parent) == EdgeKind::kEntityToCategory) {
      out.entity.push_back(e);
    } else {
      out.category.push_back(e);
    }
  }
  return out;
}

Split TrainValSplit(const std::vector<LabeledEdge> &edges,
                    double validation_fraction, uint64_t seed) {
  if (!(validation_fraction >= 0.0 && validation_fraction < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "validation fraction must be in [0, 1)");
  }
  Split split;
  for (Label label : {Label::kIsA, Label::kNotIsA}) {
    std::vector<LabeledEdge> members;
    for (const LabeledEdge &e : edges) {
      if (e.label == label) members.push_back(e);
    }
    if (members.empty()) {
      Log().warn("EmptyClass: no {} edges; validation will miss that label",
                 LabelName(label));
      continue;
    }
    std::sort(members.begin(), members.end(), ByEdge);
    SplitMix64 rng(seed, static_cast<uint64_t>(label));
    Shuffle(std::span<LabeledEdge>(members), rng);
    // The epsilon keeps products such as 0.29 * 100 from flooring to 28.
    const auto held_out = static_cast<size_t>(
        std::floor(validation_fraction * members.size() + 1e-9));
    for (size_t i = 0; i < members.size(); ++i) {
      (i < held_out ? split.validation : split.train).push_back(members[i]);
    }
  }
  std::sort(split.train.begin(), split.train.end(), ByEdge);
  std::sort(split.validation.begin(), split.validation.end(), ByEdge);
  return split;
}

EdgeDataset MakeDataset(EdgeKind kind, const std::vector<LabeledEdge> &edges,
                        double validation_fraction, uint64_t seed) {
  EdgeDataset dataset;
  dataset.kind = kind;
  // Separate streams per kind so the two datasets do not share a shuffle.
  Split split = TrainValSplit(edges, validation_fraction,
                              seed ^ (static_cast<uint64_t>(kind) << 32));
  dataset.train = std::move(split.train);
  dataset.validation = std::move(split.validation);
  return dataset;
}

void SaveLabeledEdges(const std::vector<LabeledEdge> &edges,
                      const std::filesystem::path &file) {
  auto out = OpenForWrite(file);
  for (const LabeledEdge &e : edges) {
    out << e.child << '\t' << e.parent << '\t' << LabelName(e.label) << '\n';
  }
}

std::vector<LabeledEdge> LoadLabeledEdges(const std::filesystem::path &file) {
  std::vector<LabeledEdge> edges;
  auto in = OpenForRead(file);
  ForEachRow(in, [&](size_t line, const std::vector<std::string_view> &f) {
    if (f.size() != 3 || f[0].empty() || f[1].empty() ||
        (f[2] != "isa" && f[2] != "notisa")) {
      throw Error(ErrorCode::kMalformedRow,
                  file.filename().string() + ":" + std::to_string(line));
    }
    edges.push_back({std::string(f[0]), std::string(f[1]),
                     f[2] == "isa" ? Label::kIsA : Label::kNotIsA});
  });
  return edges;
}

}  // namespace taxo
