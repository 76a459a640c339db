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

#include "taxo/cli.h"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "taxo/classifier.h"
#include "taxo/error.h"
#include "taxo/features.h"
#include "taxo/graph.h"
#include "taxo/induction.h"
#include "taxo/labeling.h"
#include "taxo/metrics.h"
#include "taxo/projection.h"
#include "taxo/tsv.h"

namespace taxo {

namespace fs = std::filesystem;

namespace {

template <typename T>
void Take(const nlohmann::json &json, const char *key, T *field) {
  try {
    *field = json.at(key).get<T>();
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("config key ") + key + ": " + e.what());
  }
}

void WriteJson(const fs::path &file, const nlohmann::json &json) {
  auto out = OpenForWrite(file);
  out << json.dump(2) << '\n';
}

// Options whose values may also come from the config file, by config key.
using BoundOptions = std::map<std::string, CLI::Option *>;

void AddConfigFlag(CLI::App *cmd, std::string *config_file) {
  cmd->add_option("--config", *config_file,
                  "JSON file with pipeline settings; flags take precedence")
      ->check(CLI::ExistingFile);
}

// Fills `config` from the config file for every key whose flag was not given.
void ApplyConfigFile(const std::string &config_file,
                     const BoundOptions &options, PipelineConfig *config) {
  if (config_file.empty()) return;
  std::vector<std::string> explicit_keys;
  for (const auto &[key, option] : options) {
    if (option->count() > 0) explicit_keys.push_back(key);
  }
  auto in = OpenForRead(config_file);
  nlohmann::json json;
  try {
    json = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kInvalidArgument,
                config_file + ": " + e.what());
  }
  config->Merge(json, explicit_keys);
}

FeatureSpec MakeFeatureSpec(const PipelineConfig &config) {
  FeatureSpec spec;
  spec.mode = ParseFeatureMode(config.mode);
  spec.ngram_sizes = config.ngram_sizes;
  spec.Validate();
  return spec;
}

int RunProject(const fs::path &nodes, const fs::path &edges,
               const fs::path &langlinks, const fs::path &source,
               const fs::path &out_dir, const PipelineConfig &config,
               std::ostream &out) {
  ProjectionConfig projection{config.k1, config.k2};
  projection.Validate();
  WcnGraph graph = LoadWcn(nodes, edges);
  InterlangMap links = LoadInterlang(langlinks);
  Taxonomy source_taxonomy = LoadTaxonomy(source);
  ProjectionResult result = Project(source_taxonomy, graph, links, projection);

  fs::create_directories(out_dir);
  SaveTaxonomy(result.taxonomy, out_dir / "taxonomy.tsv");
  const ProjectionReport &r = result.report;
  nlohmann::json report = {
      {"entity_coverage", r.entity_coverage},
      {"category_coverage", r.category_coverage},
      {"skipped_no_equivalent", r.skipped_no_equivalent},
      {"skipped_no_path", r.skipped_no_path},
      {"edges_added", r.edges_added},
      {"k1", config.k1},
      {"k2", config.k2},
  };
  WriteJson(out_dir / "projection_report.json", report);
  out << report.dump() << '\n';
  return kExitOk;
}

nlohmann::json TrainKind(const WcnGraph &graph, EdgeKind kind,
                         const std::vector<LabeledEdge> &edges,
                         const PipelineConfig &config, const fs::path &out_dir,
                         const std::string &suffix) {
  EdgeDataset dataset =
      MakeDataset(kind, edges, config.val_fraction, config.seed);
  if (dataset.train.empty()) {
    throw Error(ErrorCode::kSingleClassDataset,
                "no labeled " + std::string(EdgeKindName(kind)) +
                    " edges; the projected taxonomy covers none of them");
  }
  TrainConfig train{config.epochs, config.learning_rate, config.l2_lambda,
                    config.seed};
  TfidfModel tfidf =
      FitDatasetTfidf(dataset, graph, MakeFeatureSpec(config), config.min_df);
  LinearEdgeModel model = TrainLinear(dataset, graph, tfidf, train);
  SaveModel(model, out_dir / ("model." + suffix + ".json"),
            "tfidf." + suffix + ".json");

  nlohmann::json metrics = {
      {"train_acc", ValidationAccuracy(model, dataset.train, graph)},
      {"val_acc", nullptr},
      {"n_train", dataset.train.size()},
      {"n_val", dataset.validation.size()},
  };
  if (!dataset.validation.empty()) {
    metrics["val_acc"] = ValidationAccuracy(model, dataset.validation, graph);
  }
  WriteJson(out_dir / ("metrics." + suffix + ".json"), metrics);
  return metrics;
}

int RunTrain(const fs::path &nodes, const fs::path &edges,
             const fs::path &projected_file, const fs::path &out_dir,
             const PipelineConfig &config, std::ostream &out) {
  MakeFeatureSpec(config);
  TrainConfig{config.epochs, config.learning_rate, config.l2_lambda,
              config.seed}
      .Validate();
  WcnGraph graph = LoadWcn(nodes, edges);
  Taxonomy projected = LoadTaxonomy(projected_file);
  if (projected.empty()) {
    throw Error(ErrorCode::kEmptyProjectedTaxonomy,
                "projected taxonomy is empty; run `project` first");
  }
  std::vector<LabeledEdge> labeled = LabelEdges(graph, projected);
  KindPartition parts = SplitByKind(labeled, graph);

  fs::create_directories(out_dir);
  SaveLabeledEdges(labeled, out_dir / "labels.tsv");
  nlohmann::json report = {
      {"config", config.ToJson()},
      {"ec", TrainKind(graph, EdgeKind::kEntityToCategory, parts.entity,
                       config, out_dir, "ec")},
      {"cc", TrainKind(graph, EdgeKind::kCategoryToCategory, parts.category,
                       config, out_dir, "cc")},
  };
  WriteJson(out_dir / "training_report.json", report);
  out << report.dump() << '\n';
  return kExitOk;
}

int RunInduce(const fs::path &nodes, const fs::path &edges,
              const fs::path &projected_file, const fs::path &model_ec,
              const fs::path &model_cc, const fs::path &out_dir,
              const PipelineConfig &config, int threads, std::ostream &out) {
  InductionConfig induction{config.k, config.epsilon, config.uniform, threads};
  induction.Validate();
  WcnGraph graph = LoadWcn(nodes, edges);
  Taxonomy projected = LoadTaxonomy(projected_file);
  LinearEdgeModel ec = LoadModel(model_ec);
  LinearEdgeModel cc = LoadModel(model_cc);
  WeightedGraph weighted = WeighEdges(graph, ec, cc, induction);
  InductionResult result = Induce(projected, weighted, induction);

  fs::create_directories(out_dir);
  SaveTaxonomy(result.taxonomy, out_dir / "taxonomy.tsv");
  const InductionReport &r = result.report;
  nlohmann::json report = {
      {"entity_coverage", r.entity_coverage},
      {"category_coverage", r.category_coverage},
      {"uncovered", r.uncovered},
      {"edges_added", r.edges_added},
      {"k", r.k},
      {"uniform", r.uniform},
      {"epsilon", config.epsilon},
  };
  WriteJson(out_dir / "induction_report.json", report);
  report.erase("uncovered");
  report["n_uncovered"] = r.uncovered.size();
  out << report.dump() << '\n';
  return kExitOk;
}

nlohmann::json StatsJson(const Taxonomy &taxonomy, uint64_t seed,
                         size_t sample_size) {
  return {{"nodes", taxonomy.NodeIds().size()},
          {"edges", taxonomy.size()},
          {"branching_factor", RoundTo(BranchingFactor(taxonomy), 4)},
          {"max_depth_sampled", MaxDepthSampled(taxonomy, sample_size, seed)},
          {"seed", seed}};
}

}  // namespace

void PipelineConfig::Merge(const nlohmann::json &json,
                           const std::vector<std::string> &skip) {
  if (!json.is_object()) {
    throw Error(ErrorCode::kInvalidArgument, "config must be a JSON object");
  }
  const std::map<std::string, std::function<void()>> setters = {
      {"k1", [&] { Take(json, "k1", &k1); }},
      {"k2", [&] { Take(json, "k2", &k2); }},
      {"val_fraction", [&] { Take(json, "val_fraction", &val_fraction); }},
      {"seed", [&] { Take(json, "seed", &seed); }},
      {"mode", [&] { Take(json, "mode", &mode); }},
      {"ngram_sizes", [&] { Take(json, "ngram_sizes", &ngram_sizes); }},
      {"min_df", [&] { Take(json, "min_df", &min_df); }},
      {"epochs", [&] { Take(json, "epochs", &epochs); }},
      {"learning_rate", [&] { Take(json, "learning_rate", &learning_rate); }},
      {"l2_lambda", [&] { Take(json, "l2_lambda", &l2_lambda); }},
      {"k", [&] { Take(json, "k", &k); }},
      {"epsilon", [&] { Take(json, "epsilon", &epsilon); }},
      {"uniform", [&] { Take(json, "uniform", &uniform); }},
  };
  for (const auto &[key, value] : json.items()) {
    auto setter = setters.find(key);
    if (setter == setters.end()) {
      throw Error(ErrorCode::kInvalidArgument, "unknown config key " + key);
    }
    if (std::find(skip.begin(), skip.end(), key) != skip.end()) continue;
    setter->second();
  }
}

nlohmann::json PipelineConfig::ToJson() const {
  return {{"k1", k1},
          {"k2", k2},
          {"val_fraction", val_fraction},
          {"seed", seed},
          {"mode", mode},
          {"ngram_sizes", ngram_sizes},
          {"min_df", min_df},
          {"epochs", epochs},
          {"learning_rate", learning_rate},
          {"l2_lambda", l2_lambda},
          {"k", k},
          {"epsilon", epsilon},
          {"uniform", uniform}};
}

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Taxonomy induction from a category network: projection, "
               "edge classification, path-based induction and evaluation."};
  app.name(args.empty() ? "taxo" : fs::path(args[0]).filename().string());
  app.require_subcommand(1);

  PipelineConfig config;
  std::string config_file;
  std::string nodes, edges, langlinks, source, projected, out_dir;
  std::string model_ec, model_cc, taxonomy, gold, nodes_file, paths_file;
  int threads = 0;
  size_t sample_size = 1000;
  size_t n_entities = 200, n_categories = 200;
  BoundOptions bound;

  auto *project = app.add_subcommand(
      "project", "Project the source taxonomy over interlanguage links");
  project->add_option("--nodes", nodes, "Target nodes.tsv")->required();
  project->add_option("--edges", edges, "Target edges.tsv")->required();
  project->add_option("--langlinks", langlinks, "langlinks.tsv")->required();
  project->add_option("--source-taxonomy", source, "Source taxonomy.tsv")
      ->required();
  project->add_option("--out", out_dir, "Output directory")->required();
  bound["k1"] = project->add_option(
      "--k1", config.k1,
      "Max ancestor height in the source taxonomy (default 14, the height "
      "of the source taxonomy used in the original experiments)");
  bound["k2"] = project->add_option(
      "--k2", config.k2,
      "Max path length in target edges (default 3, kept small for "
      "precision)");
  AddConfigFlag(project, &config_file);

  auto *train = app.add_subcommand(
      "train", "Label network edges and train the two edge classifiers");
  train->add_option("--nodes", nodes, "nodes.tsv")->required();
  train->add_option("--edges", edges, "edges.tsv")->required();
  train->add_option("--projected", projected, "Projected taxonomy.tsv")
      ->required();
  train->add_option("--out-dir", out_dir, "Output directory")->required();
  bound["mode"] = train->add_option("--mode", config.mode,
                                    "Features: word or char (default char)")
                      ->check(CLI::IsMember({"word", "char"}));
  bound["ngram_sizes"] = train->add_option(
      "--ngram-sizes", config.ngram_sizes,
      "Character n-gram sizes (default 2 3 4 5 6, the best-performing set "
      "reported for char TFIDF)");
  bound["min_df"] = train->add_option(
      "--min-df", config.min_df, "Minimum document frequency (default 1)");
  bound["seed"] = train->add_option("--seed", config.seed, "Seed (default 0)");
  bound["val_fraction"] = train->add_option(
      "--val-fraction", config.val_fraction,
      "Share of each label held out for validation (default 0.25)");
  bound["epochs"] =
      train->add_option("--epochs", config.epochs, "SGD epochs (default 10)");
  bound["learning_rate"] = train->add_option(
      "--learning-rate", config.learning_rate, "Initial step (default 0.1)");
  bound["l2_lambda"] = train->add_option("--l2-lambda", config.l2_lambda,
                                         "L2 strength (default 1e-6)");
  AddConfigFlag(train, &config_file);

  auto *induce = app.add_subcommand(
      "induce", "Extend the projected taxonomy with most probable paths");
  induce->add_option("--nodes", nodes, "nodes.tsv")->required();
  induce->add_option("--edges", edges, "edges.tsv")->required();
  induce->add_option("--projected", projected, "Projected taxonomy.tsv")
      ->required();
  induce->add_option("--model-ec", model_ec, "Entity->category model")
      ->required();
  induce->add_option("--model-cc", model_cc, "Category->category model")
      ->required();
  induce->add_option("--out", out_dir, "Output directory")->required();
  bound["k"] = induce->add_option(
      "--k", config.k, "Paths per uncovered node (default 1, as in the "
                       "released taxonomies)");
  bound["uniform"] = induce->add_flag(
      "--uniform", config.uniform,
      "Weigh every edge 1, reducing search to fewest hops");
  bound["epsilon"] = induce->add_option("--epsilon", config.epsilon,
                                        "Probability floor (default 1e-6)");
  induce->add_option("--threads", threads,
                     "Worker threads (default: one per core); output does "
                     "not depend on it");
  AddConfigFlag(induce, &config_file);

  auto *baseline = app.add_subcommand(
      "baseline", "Write the whole network as a taxonomy (WCN baseline)");
  baseline->add_option("--nodes", nodes, "nodes.tsv")->required();
  baseline->add_option("--edges", edges, "edges.tsv")->required();
  baseline->add_option("--out", out_dir, "Output directory")->required();

  auto *sample = app.add_subcommand(
      "sample", "Sample evaluation nodes (default 200 entities and 200 "
                "categories)");
  sample->add_option("--nodes", nodes, "nodes.tsv")->required();
  sample->add_option("--edges", edges, "edges.tsv")->required();
  sample->add_option("--entities", n_entities, "Entities to sample");
  sample->add_option("--categories", n_categories, "Categories to sample");
  sample->add_option("--seed", config.seed, "Seed (default 0)");

  auto *evaluate = app.add_subcommand("evaluate", "Score a taxonomy");
  evaluate->require_subcommand(1);
  auto *eval_edges = evaluate->add_subcommand(
      "edges", "Macro precision, recall and coverage against gold edges");
  eval_edges->add_option("--taxonomy", taxonomy, "taxonomy.tsv")->required();
  eval_edges->add_option("--gold", gold, "gold_edges.tsv")->required();
  eval_edges->add_option("--nodes-file", nodes_file, "sampled_nodes.txt")
      ->required();
  auto *eval_paths = evaluate->add_subcommand(
      "paths", "AL, ACPP and ARCPP over annotated paths");
  eval_paths->add_option("--paths", paths_file, "paths.jsonl")->required();

  auto *stats = app.add_subcommand("stats", "Structural statistics");
  stats->add_option("--taxonomy", taxonomy, "taxonomy.tsv")->required();
  stats->add_option("--seed", config.seed, "Seed for depth sampling");
  stats->add_option("--sample-size", sample_size,
                    "Nodes sampled for max depth (default 1000)");

  std::vector<const char *> argv;
  for (const std::string &a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("taxo");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*project) {
      ApplyConfigFile(config_file, bound, &config);
      return RunProject(nodes, edges, langlinks, source, out_dir, config, out);
    }
    if (*train) {
      ApplyConfigFile(config_file, bound, &config);
      return RunTrain(nodes, edges, projected, out_dir, config, out);
    }
    if (*induce) {
      ApplyConfigFile(config_file, bound, &config);
      return RunInduce(nodes, edges, projected, model_ec, model_cc, out_dir,
                       config, threads, out);
    }
    if (*baseline) {
      WcnGraph graph = LoadWcn(nodes, edges);
      fs::create_directories(out_dir);
      SaveTaxonomy(WcnBaseline(graph), fs::path(out_dir) / "taxonomy.tsv");
      return kExitOk;
    }
    if (*sample) {
      WcnGraph graph = LoadWcn(nodes, edges);
      for (const std::string &id :
           SampleEvalNodes(graph, n_entities, n_categories, config.seed)) {
        out << id << '\n';
      }
      return kExitOk;
    }
    if (*eval_edges) {
      Taxonomy t = LoadTaxonomy(taxonomy);
      GoldEdgeSet g = LoadGold(gold, nodes_file);
      out << EdgeMetricsJson(ComputeEdgeMetrics(t, g)).dump() << '\n';
      return kExitOk;
    }
    if (*eval_paths) {
      out << PathMetricsJson(ComputePathMetrics(LoadAnnotatedPaths(paths_file)))
                 .dump()
          << '\n';
      return kExitOk;
    }
    if (*stats) {
      out << StatsJson(LoadTaxonomy(taxonomy), config.seed, sample_size).dump()
          << '\n';
      return kExitOk;
    }
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace taxo
