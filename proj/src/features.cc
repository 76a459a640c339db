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

#include "taxo/features.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "taxo/error.h"
#include "taxo/unicode.h"

namespace taxo {

namespace {

std::u32string Normalize(std::string_view title, const FeatureSpec &spec) {
  std::u32string text = DecodeUtf8(title);
  if (spec.lowercase) {
    for (char32_t &c : text) c = ToLower(c);
  }
  return text;
}

}  // namespace

std::string_view FeatureModeName(FeatureMode mode) {
  return mode == FeatureMode::kWord ? "word" : "char";
}

FeatureMode ParseFeatureMode(std::string_view name) {
  if (name == "word") return FeatureMode::kWord;
  if (name == "char") return FeatureMode::kCharNgram;
  throw Error(ErrorCode::kInvalidArgument,
              "feature mode must be word or char, got " + std::string(name));
}

void FeatureSpec::Validate() {
  std::sort(ngram_sizes.begin(), ngram_sizes.end());
  ngram_sizes.erase(std::unique(ngram_sizes.begin(), ngram_sizes.end()),
                    ngram_sizes.end());
  if (mode == FeatureMode::kCharNgram) {
    if (ngram_sizes.empty() || ngram_sizes.front() < 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "n-gram sizes must be nonempty and >= 1");
    }
  }
}

std::vector<std::string> WordTokens(std::string_view title,
                                    const FeatureSpec &spec) {
  std::u32string text = Normalize(title, spec);
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsWhitespace(text[i])) ++i;
    size_t start = i;
    while (i < text.size() && !IsWhitespace(text[i])) ++i;
    if (i > start) {
      tokens.push_back(EncodeUtf8(std::u32string_view(text).substr(start, i - start)));
    }
  }
  return tokens;
}

std::vector<std::string> CharNgrams(std::string_view title,
                                    const FeatureSpec &spec) {
  std::u32string raw = Normalize(title, spec);
  std::u32string text;
  text.reserve(raw.size());
  bool pending_space = false;
  for (char32_t c : raw) {
    if (IsWhitespace(c)) {
      pending_space = !text.empty();
      continue;
    }
    if (pending_space) text.push_back(U' ');
    pending_space = false;
    text.push_back(c);
  }

  std::vector<std::string> grams;
  const std::u32string_view view(text);
  for (int n : spec.ngram_sizes) {
    const auto size = static_cast<size_t>(n);
    if (size > view.size()) continue;
    for (size_t i = 0; i + size <= view.size(); ++i) {
      grams.push_back(EncodeUtf8(view.substr(i, size)));
    }
  }
  return grams;
}

std::vector<std::string> ExtractFeatures(std::string_view title,
                                         const FeatureSpec &spec) {
  return spec.mode == FeatureMode::kWord ? WordTokens(title, spec)
                                         : CharNgrams(title, spec);
}

double SparseVector::Norm() const {
  double sum = 0.0;
  for (const auto &[col, value] : entries) sum += value * value;
  return std::sqrt(sum);
}

int64_t TfidfModel::Column(std::string_view feature) const {
  auto it = column_.find(std::string(feature));
  return it == column_.end() ? int64_t{-1} : int64_t{it->second};
}

void TfidfModel::BuildIndex() {
  column_.clear();
  column_.reserve(features_.size());
  for (size_t i = 0; i < features_.size(); ++i) {
    column_.emplace(features_[i], static_cast<uint32_t>(i));
  }
}

nlohmann::json TfidfModel::ToJson() const {
  nlohmann::json vocab = nlohmann::json::array();
  for (size_t i = 0; i < features_.size(); ++i) {
    vocab.push_back({features_[i], df_[i]});
  }
  return {
      {"spec",
       {{"mode", FeatureModeName(spec_.mode)},
        {"ngram_sizes", spec_.ngram_sizes},
        {"lowercase", spec_.lowercase}}},
      {"n_docs", n_docs_},
      {"vocab", std::move(vocab)},
      {"idf", idf_},
  };
}

TfidfModel TfidfModel::FromJson(const nlohmann::json &json) {
  TfidfModel model;
  try {
    const auto &spec = json.at("spec");
    model.spec_.mode = ParseFeatureMode(spec.at("mode").get<std::string>());
    model.spec_.ngram_sizes = spec.at("ngram_sizes").get<std::vector<int>>();
    model.spec_.lowercase = spec.at("lowercase").get<bool>();
    model.spec_.Validate();
    model.n_docs_ = json.at("n_docs").get<size_t>();
    for (const auto &row : json.at("vocab")) {
      model.features_.push_back(row.at(0).get<std::string>());
      model.df_.push_back(row.at(1).get<size_t>());
    }
    model.idf_ = json.at("idf").get<std::vector<double>>();
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kMalformedRow,
                std::string("bad tfidf model json: ") + e.what());
  }
  if (model.idf_.size() != model.features_.size()) {
    throw Error(ErrorCode::kMalformedRow, "idf and vocab sizes differ");
  }
  model.BuildIndex();
  return model;
}

TfidfModel FitTfidf(std::span<const std::string> titles, FeatureSpec spec,
                    size_t min_df) {
  spec.Validate();
  if (titles.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty TFIDF corpus");
  }
  std::map<std::string, size_t> df;
  for (const std::string &title : titles) {
    auto features = ExtractFeatures(title, spec);
    std::set<std::string> unique(features.begin(), features.end());
    for (const std::string &f : unique) ++df[f];
  }

  TfidfModel model;
  model.spec_ = std::move(spec);
  model.n_docs_ = titles.size();
  const double n = static_cast<double>(titles.size());
  // std::map iterates in lexicographic (byte, hence code point) order.
  for (const auto &[feature, count] : df) {
    if (count < min_df) continue;
    model.features_.push_back(feature);
    model.df_.push_back(count);
    model.idf_.push_back(std::log((1.0 + n) / (1.0 + count)) + 1.0);
  }
  if (model.features_.empty()) {
    throw Error(ErrorCode::kEmptyVocabulary,
                "no feature reaches min_df=" + std::to_string(min_df));
  }
  model.BuildIndex();
  return model;
}

SparseVector VectorizeTitle(const TfidfModel &model, std::string_view title) {
  std::map<uint32_t, size_t> counts;
  for (const std::string &f : ExtractFeatures(title, model.spec())) {
    int64_t col = model.Column(f);
    if (col >= 0) ++counts[static_cast<uint32_t>(col)];
  }
  SparseVector v;
  v.entries.reserve(counts.size());
  for (const auto &[col, count] : counts) {
    v.entries.emplace_back(col, count * model.idf()[col]);
  }
  const double norm = v.Norm();
  if (norm > 0.0) {
    for (auto &[col, value] : v.entries) value /= norm;
  }
  return v;
}

SparseVector VectorizeEdge(const TfidfModel &model, std::string_view child,
                           std::string_view parent) {
  SparseVector out = VectorizeTitle(model, child);
  const auto offset = static_cast<uint32_t>(model.size());
  for (const auto &[col, value] : VectorizeTitle(model, parent).entries) {
    out.entries.emplace_back(col + offset, value);
  }
  return out;
}

}  // namespace taxo
