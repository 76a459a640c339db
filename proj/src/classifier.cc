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

#include "taxo/classifier.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <set>
#include <span>

#include "taxo/error.h"
#include "taxo/random.h"
#include "taxo/tsv.h"

namespace taxo {

namespace {

const std::string &TitleOf(const WcnGraph &graph, const std::string &id) {
  return graph.node(graph.Index(id)).title;
}

}  // namespace

void TrainConfig::Validate() const {
  if (epochs < 1) throw Error(ErrorCode::kInvalidArgument, "epochs must be >= 1");
  if (!(learning_rate > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "learning_rate must be > 0");
  }
  if (!(l2_lambda >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "l2_lambda must be >= 0");
  }
}

nlohmann::json TrainConfig::ToJson() const {
  return {{"epochs", epochs},
          {"learning_rate", learning_rate},
          {"l2_lambda", l2_lambda},
          {"seed", seed}};
}

TrainConfig TrainConfig::FromJson(const nlohmann::json &json) {
  TrainConfig c;
  c.epochs = json.at("epochs").get<int>();
  c.learning_rate = json.at("learning_rate").get<double>();
  c.l2_lambda = json.at("l2_lambda").get<double>();
  c.seed = json.at("seed").get<uint64_t>();
  return c;
}

double Sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

LinearEdgeModel::LinearEdgeModel(TfidfModel tfidf, std::vector<double> weights,
                                 double bias, TrainConfig config)
    : tfidf_(std::move(tfidf)),
      weights_(std::move(weights)),
      bias_(bias),
      config_(config) {
  if (weights_.size() != 2 * tfidf_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "weight dimension must be twice the vocabulary size");
  }
}

double LinearEdgeModel::Margin(std::string_view child_title,
                               std::string_view parent_title) const {
  double z = bias_;
  for (const auto &[col, value] :
       VectorizeEdge(tfidf_, child_title, parent_title).entries) {
    z += weights_[col] * value;
  }
  return z;
}

double LinearEdgeModel::Probability(std::string_view child_title,
                                    std::string_view parent_title) const {
  const double p = Sigmoid(Margin(child_title, parent_title));
  return std::clamp(p, std::numeric_limits<double>::denorm_min(),
                    std::nextafter(1.0, 0.0));
}

nlohmann::json LinearEdgeModel::ToJson(std::string_view tfidf_ref) const {
  nlohmann::json weights = nlohmann::json::array();
  for (size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] != 0.0) weights.push_back({i, weights_[i]});
  }
  return {{"tfidf_ref", tfidf_ref},
          {"dimension", weights_.size()},
          {"weights", std::move(weights)},
          {"bias", bias_},
          {"config", config_.ToJson()}};
}

TfidfModel FitDatasetTfidf(const EdgeDataset &dataset, const WcnGraph &graph,
                           const FeatureSpec &spec, size_t min_df) {
  std::set<std::string> ids;
  for (const LabeledEdge &e : dataset.train) {
    ids.insert(e.child);
    ids.insert(e.parent);
  }
  std::vector<std::string> titles;
  titles.reserve(ids.size());
  for (const std::string &id : ids) titles.push_back(TitleOf(graph, id));
  return FitTfidf(titles, spec, min_df);
}

LinearEdgeModel TrainLinear(const EdgeDataset &dataset, const WcnGraph &graph,
                            const TfidfModel &tfidf,
                            const TrainConfig &config) {
  config.Validate();
  size_t positives = 0;
  for (const LabeledEdge &e : dataset.train) {
    if (e.label == Label::kIsA) ++positives;
  }
  if (positives == 0 || positives == dataset.train.size()) {
    throw Error(ErrorCode::kSingleClassDataset,
                std::string(EdgeKindName(dataset.kind)) +
                    " training set needs both is-a and not-is-a edges");
  }

  const size_t n = dataset.train.size();
  std::vector<SparseVector> inputs;
  std::vector<double> targets;
  inputs.reserve(n);
  targets.reserve(n);
  for (const LabeledEdge &e : dataset.train) {
    inputs.push_back(VectorizeEdge(tfidf, TitleOf(graph, e.child),
                                   TitleOf(graph, e.parent)));
    targets.push_back(e.label == Label::kIsA ? 1.0 : 0.0);
  }

  // Weights are kept as scale * raw so the L2 shrinkage of a step is O(1).
  std::vector<double> raw(2 * tfidf.size(), 0.0);
  double scale = 1.0;
  double bias = 0.0;
  const double eta0 = config.learning_rate;
  const double lambda = config.l2_lambda;
  std::vector<size_t> order(n);
  uint64_t step = 0;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    std::iota(order.begin(), order.end(), 0);
    SplitMix64 rng(config.seed, static_cast<uint64_t>(epoch));
    Shuffle(std::span<size_t>(order), rng);
    for (size_t i : order) {
      const double eta = eta0 / (1.0 + lambda * eta0 * static_cast<double>(step));
      double z = bias;
      for (const auto &[col, value] : inputs[i].entries) {
        z += scale * raw[col] * value;
      }
      const double gradient = Sigmoid(z) - targets[i];
      scale *= 1.0 - eta * lambda;
      if (scale < 1e-9) {
        for (double &w : raw) w *= scale;
        scale = 1.0;
      }
      for (const auto &[col, value] : inputs[i].entries) {
        raw[col] -= eta * gradient * value / scale;
      }
      bias -= eta * gradient;
      ++step;
    }
  }
  for (double &w : raw) w *= scale;
  return LinearEdgeModel(tfidf, std::move(raw), bias, config);
}

double PredictProba(const LinearEdgeModel &model, std::string_view child_title,
                    std::string_view parent_title) {
  return model.Probability(child_title, parent_title);
}

double ValidationAccuracy(const LinearEdgeModel &model,
                          const std::vector<LabeledEdge> &validation,
                          const WcnGraph &graph) {
  if (validation.empty()) {
    throw Error(ErrorCode::kEmptyValidation, "no edges to evaluate");
  }
  size_t correct = 0;
  for (const LabeledEdge &e : validation) {
    const bool predicted_isa =
        model.Probability(TitleOf(graph, e.child), TitleOf(graph, e.parent)) >=
        0.5;
    if (predicted_isa == (e.label == Label::kIsA)) ++correct;
  }
  return static_cast<double>(correct) / validation.size();
}

void SaveModel(const LinearEdgeModel &model,
               const std::filesystem::path &model_file,
               std::string_view tfidf_file_name) {
  const auto tfidf_file = model_file.parent_path() / tfidf_file_name;
  {
    auto out = OpenForWrite(tfidf_file);
    out << model.tfidf().ToJson().dump() << '\n';
  }
  auto out = OpenForWrite(model_file);
  out << model.ToJson(tfidf_file_name).dump(1) << '\n';
}

LinearEdgeModel LoadModel(const std::filesystem::path &model_file) {
  try {
    auto in = OpenForRead(model_file);
    const nlohmann::json json = nlohmann::json::parse(in);
    const auto ref = json.at("tfidf_ref").get<std::string>();
    auto tfidf_in = OpenForRead(model_file.parent_path() / ref);
    TfidfModel tfidf = TfidfModel::FromJson(nlohmann::json::parse(tfidf_in));
    std::vector<double> weights(2 * tfidf.size(), 0.0);
    if (json.at("dimension").get<size_t>() != weights.size()) {
      throw Error(ErrorCode::kMalformedRow,
                  model_file.string() + ": dimension does not match tfidf");
    }
    for (const auto &entry : json.at("weights")) {
      const auto col = entry.at(0).get<size_t>();
      if (col >= weights.size()) {
        throw Error(ErrorCode::kMalformedRow,
                    model_file.string() + ": weight column out of range");
      }
      weights[col] = entry.at(1).get<double>();
    }
    return LinearEdgeModel(std::move(tfidf), std::move(weights),
                           json.at("bias").get<double>(),
                           TrainConfig::FromJson(json.at("config")));
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kMalformedRow,
                model_file.string() + ": " + e.what());
  }
}

}  // namespace taxo
