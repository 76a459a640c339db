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

// Binary is-a edge classifier: L2-regularized logistic regression over the
// concatenated TFIDF vectors of the child and parent titles, trained by
// seeded SGD. The model maps a pair of titles to an is-a probability, which is
// all the induction phase needs.

#ifndef TAXO_CLASSIFIER_H_
#define TAXO_CLASSIFIER_H_

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "taxo/features.h"
#include "taxo/graph.h"
#include "taxo/labeling.h"

namespace taxo {

struct TrainConfig {
  int epochs = 10;
  double learning_rate = 0.1;  // eta_0; eta_t = eta_0 / (1 + lambda eta_0 t)
  double l2_lambda = 1e-6;
  uint64_t seed = 0;

  void Validate() const;
  nlohmann::json ToJson() const;
  static TrainConfig FromJson(const nlohmann::json &json);
};

// Interface for anything that scores a (child title, parent title) pair.
class EdgeScorer {
 public:
  virtual ~EdgeScorer() = default;
  virtual double Probability(std::string_view child_title,
                             std::string_view parent_title) const = 0;
};

class LinearEdgeModel : public EdgeScorer {
 public:
  LinearEdgeModel() = default;
  LinearEdgeModel(TfidfModel tfidf, std::vector<double> weights, double bias,
                  TrainConfig config);

  const TfidfModel &tfidf() const { return tfidf_; }
  const std::vector<double> &weights() const { return weights_; }
  double bias() const { return bias_; }
  const TrainConfig &config() const { return config_; }

  // w . x + b for x = VectorizeEdge(child, parent).
  double Margin(std::string_view child_title,
                std::string_view parent_title) const;

  // Logistic of the margin, kept strictly inside (0, 1).
  double Probability(std::string_view child_title,
                     std::string_view parent_title) const override;

  // Weights are stored sparsely as [[column, value], ...]; `tfidf_ref` names
  // the file holding the TFIDF model, relative to the model file.
  nlohmann::json ToJson(std::string_view tfidf_ref) const;

 private:
  TfidfModel tfidf_;
  std::vector<double> weights_;  // 2 * |vocabulary|
  double bias_ = 0.0;
  TrainConfig config_;
};

double Sigmoid(double z);

// Fits TFIDF on the titles of every node touched by the training edges.
TfidfModel FitDatasetTfidf(const EdgeDataset &dataset, const WcnGraph &graph,
                           const FeatureSpec &spec, size_t min_df);

// Throws SingleClassDataset unless the training set holds both labels.
LinearEdgeModel TrainLinear(const EdgeDataset &dataset, const WcnGraph &graph,
                            const TfidfModel &tfidf, const TrainConfig &config);

double PredictProba(const LinearEdgeModel &model, std::string_view child_title,
                    std::string_view parent_title);

// Fraction of edges whose thresholded prediction (p >= 0.5 is is-a) matches
// the label. Throws EmptyValidation on an empty list.
double ValidationAccuracy(const LinearEdgeModel &model,
                          const std::vector<LabeledEdge> &validation,
                          const WcnGraph &graph);

// Writes `model_file` and its TFIDF model next to it as `tfidf_file_name`.
void SaveModel(const LinearEdgeModel &model,
               const std::filesystem::path &model_file,
               std::string_view tfidf_file_name);
LinearEdgeModel LoadModel(const std::filesystem::path &model_file);

}  // namespace taxo

#endif  // TAXO_CLASSIFIER_H_
