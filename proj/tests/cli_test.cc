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

#include <sstream>

#include "gtest/gtest.h"
#include "synthetic.h"
#include "test_util.h"

namespace taxo {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using testing::ReadFile;
using testing::TempDir;
using testing::WriteFile;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome RunTaxo(std::vector<std::string> args) {
  args.insert(args.begin(), "taxo");
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string P(const fs::path &path) { return path.string(); }

// Projects and trains once on a reduced synthetic fixture.
class PipelineTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new TempDir;
    testing::WriteSynthetic({.entities = 150, .topics = 30}, data());
    ASSERT_EQ(RunTaxo({"project", "--nodes", P(data() / "nodes.tsv"), "--edges",
                   P(data() / "edges.tsv"), "--langlinks",
                   P(data() / "langlinks.tsv"), "--source-taxonomy",
                   P(data() / "source_taxonomy.tsv"), "--out",
                   P(root() / "proj")})
                  .code,
              0);
    for (const char *mode : {"char", "word"}) {
      const Outcome o = Train(root() / (std::string("train_") + mode),
                              {"--mode", mode});
      ASSERT_EQ(o.code, 0) << o.err;
    }
  }
  static void TearDownTestSuite() { delete dir_; }

  static fs::path root() { return dir_->path(); }
  static fs::path data() { return root() / "data"; }

  static Outcome Train(const fs::path &out, std::vector<std::string> extra) {
    std::vector<std::string> args = {
        "train", "--nodes", P(data() / "nodes.tsv"), "--edges",
        P(data() / "edges.tsv"), "--projected",
        P(root() / "proj" / "taxonomy.tsv"), "--out-dir", P(out)};
    args.insert(args.end(), extra.begin(), extra.end());
    return RunTaxo(args);
  }

  static Outcome Induce(const fs::path &out, std::vector<std::string> extra,
                        const std::string &ec = "model.ec.json",
                        const std::string &cc = "model.cc.json") {
    const fs::path models = root() / "train_char";
    std::vector<std::string> args = {
        "induce", "--nodes", P(data() / "nodes.tsv"), "--edges",
        P(data() / "edges.tsv"), "--projected",
        P(root() / "proj" / "taxonomy.tsv"), "--model-ec", P(models / ec),
        "--model-cc", P(models / cc), "--out", P(out)};
    args.insert(args.end(), extra.begin(), extra.end());
    return RunTaxo(args);
  }

  static TempDir *dir_;
};

TempDir *PipelineTest::dir_ = nullptr;

TEST(CliProjectTest, FigureOne) {
  TempDir dir;
  testing::WriteFigure1(dir.path());
  const Outcome o =
      RunTaxo({"project", "--nodes", P(dir / "nodes.tsv"), "--edges",
           P(dir / "edges.tsv"), "--langlinks", P(dir / "langlinks.tsv"),
           "--source-taxonomy", P(dir / "source_taxonomy.tsv"), "--out",
           P(dir / "out")});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(ReadFile(dir / "out" / "taxonomy.tsv"),
            "fr:Auguste\tfr:Empereur_romain\t1.000000\tprojected\n"
            "fr:Empereur_romain\tfr:Empereur\t1.000000\tprojected\n");
  const json report =
      json::parse(ReadFile(dir / "out" / "projection_report.json"));
  EXPECT_EQ(report["k1"], 14);
  EXPECT_EQ(report["k2"], 3);
  EXPECT_EQ(report["edges_added"], 2);
}

TEST(CliProjectTest, UsageAndInputErrors) {
  TempDir dir;
  testing::WriteFigure1(dir.path());
  Outcome missing = RunTaxo({"project", "--edges", P(dir / "edges.tsv")});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("--nodes"), std::string::npos);
  EXPECT_EQ(RunTaxo({}).code, 2);
  EXPECT_EQ(RunTaxo({"frobnicate"}).code, 2);

  WriteFile(dir / "bad_edges.tsv", "fr:Auguste\tfr:Nowhere\n");
  Outcome bad = RunTaxo({"project", "--nodes", P(dir / "nodes.tsv"), "--edges",
                     P(dir / "bad_edges.tsv"), "--langlinks",
                     P(dir / "langlinks.tsv"), "--source-taxonomy",
                     P(dir / "source_taxonomy.tsv"), "--out", P(dir / "out")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("UnknownNodeInEdge"), std::string::npos) << bad.err;

  Outcome k2 = RunTaxo({"project", "--nodes", P(dir / "nodes.tsv"), "--edges",
                    P(dir / "edges.tsv"), "--langlinks",
                    P(dir / "langlinks.tsv"), "--source-taxonomy",
                    P(dir / "source_taxonomy.tsv"), "--out", P(dir / "out"),
                    "--k2", "0"});
  EXPECT_EQ(k2.code, 2);
}

TEST(CliProjectTest, ConfigFileAndFlagPrecedence) {
  TempDir dir;
  testing::WriteFigure1(dir.path());
  WriteFile(dir / "config.json", R"({"k1": 1, "k2": 2})");
  WriteFile(dir / "unknown.json", R"({"k3": 1})");
  auto args = [&](const std::string &config, std::vector<std::string> extra) {
    std::vector<std::string> a = {
        "project", "--nodes", P(dir / "nodes.tsv"), "--edges",
        P(dir / "edges.tsv"), "--langlinks", P(dir / "langlinks.tsv"),
        "--source-taxonomy", P(dir / "source_taxonomy.tsv"), "--out",
        P(dir / "out"), "--config", P(dir / config)};
    a.insert(a.end(), extra.begin(), extra.end());
    return a;
  };
  ASSERT_EQ(RunTaxo(args("config.json", {"--k2", "3"})).code, 0);
  const json report =
      json::parse(ReadFile(dir / "out" / "projection_report.json"));
  EXPECT_EQ(report["k1"], 1);
  EXPECT_EQ(report["k2"], 3);
  // With k1 = 1 only Emperors is mapped, still reached through the path.
  EXPECT_EQ(report["edges_added"], 2);
  EXPECT_EQ(RunTaxo(args("unknown.json", {})).code, 2);
}

TEST_F(PipelineTest, TrainWritesModelsAndMetrics) {
  const fs::path out = root() / "train_char";
  for (const char *name :
       {"labels.tsv", "model.ec.json", "model.cc.json", "tfidf.ec.json",
        "tfidf.cc.json", "metrics.ec.json", "metrics.cc.json",
        "training_report.json"}) {
    EXPECT_TRUE(fs::exists(out / name)) << name;
  }
  const json metrics = json::parse(ReadFile(out / "metrics.ec.json"));
  EXPECT_TRUE(metrics["val_acc"].is_number());
  EXPECT_GT(metrics["n_val"].get<int>(), 0);
  const json report = json::parse(ReadFile(out / "training_report.json"));
  EXPECT_EQ(report["config"]["seed"], 0);
  EXPECT_EQ(report["config"]["mode"], "char");
}

TEST_F(PipelineTest, WordAndCharModelsDifferOnlyInFeatures) {
  for (const char *kind : {"ec", "cc"}) {
    const std::string model = std::string("model.") + kind + ".json";
    const std::string tfidf = std::string("tfidf.") + kind + ".json";
    json c = json::parse(ReadFile(root() / "train_char" / model));
    json w = json::parse(ReadFile(root() / "train_word" / model));
    EXPECT_EQ(c["config"], w["config"]);
    EXPECT_EQ(c["tfidf_ref"], w["tfidf_ref"]);
    json ct = json::parse(ReadFile(root() / "train_char" / tfidf));
    json wt = json::parse(ReadFile(root() / "train_word" / tfidf));
    EXPECT_EQ(ct["spec"]["mode"], "char");
    EXPECT_EQ(wt["spec"]["mode"], "word");
    EXPECT_EQ(ct["n_docs"], wt["n_docs"]);
  }
}

TEST_F(PipelineTest, TrainRejectsEmptyProjection) {
  WriteFile(root() / "empty.tsv", "");
  const Outcome o =
      RunTaxo({"train", "--nodes", P(data() / "nodes.tsv"), "--edges",
           P(data() / "edges.tsv"), "--projected", P(root() / "empty.tsv"),
           "--out-dir", P(root() / "train_empty")});
  EXPECT_EQ(o.code, 2);
  EXPECT_FALSE(o.err.empty());
  EXPECT_EQ(Train(root() / "train_bad", {"--mode", "bytes"}).code, 2);
  EXPECT_EQ(Train(root() / "train_bad", {"--min-df", "100000"}).code, 2);
}

TEST_F(PipelineTest, TrainIsDeterministic) {
  ASSERT_EQ(Train(root() / "train_again", {"--mode", "char"}).code, 0);
  for (const char *name : {"model.ec.json", "model.cc.json", "labels.tsv",
                           "training_report.json"}) {
    EXPECT_EQ(ReadFile(root() / "train_char" / name),
              ReadFile(root() / "train_again" / name))
        << name;
  }
}

TEST_F(PipelineTest, InduceReportsAndNests) {
  ASSERT_EQ(Induce(root() / "k1", {"--k", "1"}).code, 0);
  ASSERT_EQ(Induce(root() / "k2", {"--k", "2"}).code, 0);
  const json report = json::parse(ReadFile(root() / "k1" / "induction_report.json"));
  EXPECT_GT(report["entity_coverage"].get<double>(), 0.9);
  EXPECT_EQ(report["k"], 1);
  EXPECT_EQ(report["uniform"], false);

  std::set<std::pair<std::string, std::string>> k1, k2;
  for (auto [file, set] : {std::pair{"k1", &k1}, std::pair{"k2", &k2}}) {
    std::istringstream in(ReadFile(root() / file / "taxonomy.tsv"));
    std::string c, p, rest;
    while (std::getline(in, c, '\t') && std::getline(in, p, '\t') &&
           std::getline(in, rest)) {
      set->emplace(c, p);
    }
  }
  EXPECT_FALSE(k1.empty());
  EXPECT_TRUE(std::includes(k2.begin(), k2.end(), k1.begin(), k1.end()));
  EXPECT_GT(k2.size(), k1.size());
}

TEST_F(PipelineTest, UniformIgnoresModels) {
  ASSERT_EQ(Induce(root() / "u1", {"--uniform"}).code, 0);
  ASSERT_EQ(Induce(root() / "u2", {"--uniform"}, "model.cc.json",
                   "model.ec.json")
                .code,
            0);
  EXPECT_EQ(ReadFile(root() / "u1" / "taxonomy.tsv"),
            ReadFile(root() / "u2" / "taxonomy.tsv"));
}

TEST_F(PipelineTest, InduceIndependentOfThreads) {
  ASSERT_EQ(Induce(root() / "t1", {"--threads", "1", "--k", "2"}).code, 0);
  ASSERT_EQ(Induce(root() / "t3", {"--threads", "3", "--k", "2"}).code, 0);
  for (const char *name : {"taxonomy.tsv", "induction_report.json"}) {
    EXPECT_EQ(ReadFile(root() / "t1" / name), ReadFile(root() / "t3" / name));
  }
  EXPECT_EQ(Induce(root() / "bad", {"--k", "0"}).code, 2);
}

TEST(CliEvaluateTest, PathsWorkedExample) {
  TempDir dir;
  WriteFile(dir / "paths.jsonl",
            R"({"nodes":["apple","fruit","farmer","human","animal"],)"
            R"("first_wrong_index":2})"
            "\n");
  const Outcome o = RunTaxo({"evaluate", "paths", "--paths", P(dir / "paths.jsonl")});
  ASSERT_EQ(o.code, 0) << o.err;
  const json m = json::parse(o.out);
  EXPECT_EQ(m["AL"], 5.0);
  EXPECT_EQ(m["ACPP"], 2.0);
  EXPECT_EQ(m["ARCPP"], 0.4);

  WriteFile(dir / "empty.jsonl", "");
  EXPECT_EQ(RunTaxo({"evaluate", "paths", "--paths", P(dir / "empty.jsonl")}).code,
            2);
}

TEST(CliEvaluateTest, Edges) {
  TempDir dir;
  WriteFile(dir / "taxonomy.tsv", "x\ta\nx\tb\ny\tc\n");
  WriteFile(dir / "gold.tsv", "x\ta\tisa\nx\tb\tnotisa\ny\tc\tisa\n");
  WriteFile(dir / "nodes.txt", "x\ny\n");
  Outcome o = RunTaxo({"evaluate", "edges", "--taxonomy", P(dir / "taxonomy.tsv"),
                   "--gold", P(dir / "gold.tsv"), "--nodes-file",
                   P(dir / "nodes.txt")});
  ASSERT_EQ(o.code, 0) << o.err;
  json m = json::parse(o.out);
  EXPECT_EQ(m["P"], 0.75);
  EXPECT_EQ(m["R"], 1.0);
  EXPECT_EQ(m["C"], 1.0);

  WriteFile(dir / "all_good.tsv", "x\ta\tisa\nx\tb\tisa\ny\tc\tisa\n");
  WriteFile(dir / "three.txt", "x\ny\nz\n");
  m = json::parse(RunTaxo({"evaluate", "edges", "--taxonomy",
                       P(dir / "taxonomy.tsv"), "--gold",
                       P(dir / "all_good.tsv"), "--nodes-file",
                       P(dir / "three.txt")})
                      .out);
  EXPECT_EQ(m["P"], 1.0);
  EXPECT_EQ(m["R"], m["C"]);

  WriteFile(dir / "none.txt", "");
  EXPECT_EQ(RunTaxo({"evaluate", "edges", "--taxonomy", P(dir / "taxonomy.tsv"),
                 "--gold", P(dir / "gold.tsv"), "--nodes-file",
                 P(dir / "none.txt")})
                .code,
            2);
}

TEST(CliStatsTest, BranchingFactor) {
  TempDir dir;
  WriteFile(dir / "tree.tsv", "a\tr\nb\tr\nr\ts\n");
  json s = json::parse(RunTaxo({"stats", "--taxonomy", P(dir / "tree.tsv")}).out);
  EXPECT_EQ(s["branching_factor"], 1.0);
  EXPECT_EQ(s["nodes"], 4);
  EXPECT_EQ(s["edges"], 3);
  EXPECT_EQ(s["max_depth_sampled"], 2);
  EXPECT_EQ(s["seed"], 0);

  WriteFile(dir / "known.tsv", "a\tr\nb\tr\nb\ts\nb\tt\nc\tr\nc\ts\n");
  s = json::parse(RunTaxo({"stats", "--taxonomy", P(dir / "known.tsv")}).out);
  EXPECT_EQ(s["branching_factor"], 2.0);

  WriteFile(dir / "empty.tsv", "");
  EXPECT_EQ(RunTaxo({"stats", "--taxonomy", P(dir / "empty.tsv")}).code, 2);
}

TEST(CliSampleTest, SeededSample) {
  TempDir dir;
  testing::WriteSynthetic({.entities = 60, .topics = 10}, dir.path());
  auto sample = [&](const std::string &seed) {
    return RunTaxo({"sample", "--nodes", P(dir / "nodes.tsv"), "--edges",
                P(dir / "edges.tsv"), "--entities", "20", "--categories", "10",
                "--seed", seed});
  };
  const Outcome a = sample("1");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 30);
  EXPECT_EQ(sample("1").out, a.out);
  EXPECT_NE(sample("2").out, a.out);
}

TEST(CliBaselineTest, WritesEveryEdge) {
  TempDir dir;
  testing::WriteFigure1(dir.path());
  ASSERT_EQ(RunTaxo({"baseline", "--nodes", P(dir / "nodes.tsv"), "--edges",
                 P(dir / "edges.tsv"), "--out", P(dir / "wcn")})
                .code,
            0);
  const std::string t = ReadFile(dir / "wcn" / "taxonomy.tsv");
  EXPECT_EQ(std::count(t.begin(), t.end(), '\n'), 3);
}

}  // namespace
}  // namespace taxo
