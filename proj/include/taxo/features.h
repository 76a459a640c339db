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

// Title featurization: word tokens or character n-grams, weighted by TFIDF.
// An edge is represented by the concatenation of its child and parent title
// vectors, each half normalized on its own.

#ifndef TAXO_FEATURES_H_
#define TAXO_FEATURES_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

namespace taxo {

enum class FeatureMode { kWord, kCharNgram };

std::string_view FeatureModeName(FeatureMode mode);
FeatureMode ParseFeatureMode(std::string_view name);

struct FeatureSpec {
  FeatureMode mode = FeatureMode::kCharNgram;
  std::vector<int> ngram_sizes = {2, 3, 4, 5, 6};
  bool lowercase = true;

  // Throws InvalidArgument. Sorts and dedups ngram_sizes.
  void Validate();

  bool operator==(const FeatureSpec &) const = default;
};

// Lowercases (when enabled) and splits on runs of Unicode whitespace.
std::vector<std::string> WordTokens(std::string_view title,
                                    const FeatureSpec &spec);

// Lowercases (when enabled), collapses whitespace runs into one space, trims,
// and emits every substring whose length in scalars is one of the configured
// sizes. N-grams may span word boundaries.
std::vector<std::string> CharNgrams(std::string_view title,
                                    const FeatureSpec &spec);

// Dispatches on spec.mode.
std::vector<std::string> ExtractFeatures(std::string_view title,
                                         const FeatureSpec &spec);

struct SparseVector {
  // Strictly increasing column indices, no explicit zeros.
  std::vector<std::pair<uint32_t, double>> entries;

  double Norm() const;
  bool empty() const { return entries.empty(); }
};

class TfidfModel {
 public:
  TfidfModel() = default;

  const FeatureSpec &spec() const { return spec_; }
  size_t size() const { return features_.size(); }
  size_t n_docs() const { return n_docs_; }
  const std::vector<std::string> &features() const { return features_; }
  const std::vector<size_t> &document_frequency() const { return df_; }
  const std::vector<double> &idf() const { return idf_; }

  // Column of `feature`, or -1 when out of vocabulary.
  int64_t Column(std::string_view feature) const;

  nlohmann::json ToJson() const;
  static TfidfModel FromJson(const nlohmann::json &json);

 private:
  friend TfidfModel FitTfidf(std::span<const std::string> titles,
                             FeatureSpec spec, size_t min_df);

  void BuildIndex();

  FeatureSpec spec_;
  std::vector<std::string> features_;  // column order = lexicographic
  std::vector<size_t> df_;
  std::vector<double> idf_;
  size_t n_docs_ = 0;
  std::unordered_map<std::string, uint32_t> column_;
};

// Fits vocabulary and smoothed idf, ln((1 + N) / (1 + df)) + 1, over the
// features with document frequency >= min_df. Throws InvalidArgument on an
// empty corpus and EmptyVocabulary when nothing survives min_df.
TfidfModel FitTfidf(std::span<const std::string> titles, FeatureSpec spec,
                    size_t min_df = 1);

// TF * IDF over in-vocabulary features, L2-normalized.
SparseVector VectorizeTitle(const TfidfModel &model, std::string_view title);

// Child half in columns [0, V), parent half in [V, 2V).
SparseVector VectorizeEdge(const TfidfModel &model, std::string_view child,
                           std::string_view parent);

}  // namespace taxo

#endif  // TAXO_FEATURES_H_
