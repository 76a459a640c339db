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

#include "taxo/metrics.h"

#include "gtest/gtest.h"
#include "synthetic.h"
#include "taxo/error.h"
#include "test_util.h"

namespace taxo {
namespace {

using testing::TempDir;
using testing::WriteFile;

Taxonomy Returned(const std::vector<std::pair<std::string, std::string>> &edges) {
  Taxonomy t;
  for (const auto &[c, p] : edges) t.Add({c, p, 1.0, Provenance::kInduced});
  return t;
}

TEST(EdgeMetricsTest, MacroPrecisionOverAnsweredNodes) {
  GoldEdgeSet gold;
  gold.sampled_nodes = {"x", "y"};
  gold.judgments = {{{"x", "a"}, Label::kIsA},
                    {{"x", "b"}, Label::kNotIsA},
                    {{"y", "c"}, Label::kIsA}};
  EdgeMetrics m =
      ComputeEdgeMetrics(Returned({{"x", "a"}, {"x", "b"}, {"y", "c"}}), gold);
  EXPECT_DOUBLE_EQ(m.macro_precision, 0.75);
  EXPECT_DOUBLE_EQ(m.recall, 1.0);
  EXPECT_DOUBLE_EQ(m.coverage, 1.0);
  EXPECT_TRUE(m.precision_defined);
  EXPECT_EQ(m.answered_nodes, 2u);
}

TEST(EdgeMetricsTest, NothingReturned) {
  GoldEdgeSet gold;
  gold.sampled_nodes = {"x", "y"};
  EdgeMetrics m = ComputeEdgeMetrics(Returned({{"z", "a"}}), gold);
  EXPECT_EQ(m.coverage, 0.0);
  EXPECT_EQ(m.recall, 0.0);
  EXPECT_EQ(m.macro_precision, 0.0);
  EXPECT_FALSE(m.precision_defined);
  EXPECT_EQ(EdgeMetricsJson(m)["precision_defined"], false);
}

TEST(EdgeMetricsTest, UnjudgedCountsAsWrong) {
  GoldEdgeSet gold;
  gold.sampled_nodes = {"x", "y", "w"};
  gold.judgments = {{{"x", "a"}, Label::kIsA}, {{"y", "c"}, Label::kIsA}};
  EdgeMetrics m =
      ComputeEdgeMetrics(Returned({{"x", "a"}, {"x", "q"}, {"y", "c"}}), gold);
  EXPECT_DOUBLE_EQ(m.macro_precision, 0.75);
  EXPECT_DOUBLE_EQ(m.coverage, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(m.recall, 2.0 / 3.0);
  EXPECT_EQ(m.unjudged_hypernyms, 1u);
}

TEST(EdgeMetricsTest, PerfectPrecisionMeansRecallEqualsCoverage) {
  GoldEdgeSet gold;
  gold.sampled_nodes = {"x", "y", "z"};
  gold.judgments = {{{"x", "a"}, Label::kIsA}, {{"y", "b"}, Label::kIsA}};
  EdgeMetrics m = ComputeEdgeMetrics(Returned({{"x", "a"}, {"y", "b"}}), gold);
  EXPECT_EQ(m.macro_precision, 1.0);
  EXPECT_EQ(m.recall, m.coverage);
}

TEST(EdgeMetricsTest, EmptyGoldAndInvalidGold) {
  try {
    ComputeEdgeMetrics(Returned({{"x", "a"}}), GoldEdgeSet());
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyGold);
  }
  GoldEdgeSet gold;
  gold.sampled_nodes = {"x"};
  gold.judgments = {{{"y", "a"}, Label::kIsA}};
  EXPECT_THROW(gold.Validate(), Error);
}

TEST(PathMetricsTest, AppleFruitExample) {
  PathMetrics m = ComputePathMetrics(
      {{{"apple", "fruit", "farmer", "human", "animal"}, 2}});
  EXPECT_EQ(m.avg_length, 5.0);
  EXPECT_EQ(m.avg_cpp, 2.0);
  EXPECT_EQ(m.avg_ratio_cpp, 0.4);
}

TEST(PathMetricsTest, Averages) {
  PathMetrics full = ComputePathMetrics({{{"a", "b", "c", "d"}, std::nullopt}});
  EXPECT_EQ(full.avg_cpp, 4.0);
  EXPECT_EQ(full.avg_ratio_cpp, 1.0);

  PathMetrics m = ComputePathMetrics(
      {{{"a", "b", "c", "d", "e"}, 2}, {{"f", "g", "h"}, std::nullopt}});
  EXPECT_DOUBLE_EQ(m.avg_length, 4.0);
  EXPECT_DOUBLE_EQ(m.avg_cpp, 2.5);
  EXPECT_DOUBLE_EQ(m.avg_ratio_cpp, 0.7);
}

TEST(PathMetricsTest, RejectsBadInput) {
  try {
    ComputePathMetrics({});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyPathSet);
  }
  EXPECT_THROW(ComputePathMetrics({{{"a", "b"}, 0}}), Error);
  EXPECT_THROW(ComputePathMetrics({{{"a", "b"}, 2}}), Error);
  EXPECT_THROW(ComputePathMetrics({{{}, std::nullopt}}), Error);
}

TEST(BranchingFactorTest, MeanParentCount) {
  EXPECT_EQ(BranchingFactor(Returned({{"a", "r"}, {"b", "r"}, {"r", "s"}})),
            1.0);
  EXPECT_EQ(BranchingFactor(
                Returned({{"a", "r"}, {"b", "r"}, {"b", "s"}, {"b", "t"}})),
            2.0);
  try {
    BranchingFactor(Taxonomy());
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyTaxonomy);
  }
}

TEST(MaxDepthSampledTest, ChainAndCycle) {
  EXPECT_EQ(MaxDepthSampled(Returned({{"a", "b"}, {"b", "c"}, {"c", "d"}}),
                            1000, 1),
            3u);
  EXPECT_EQ(MaxDepthSampled(Returned({{"a", "b"}, {"b", "a"}}), 1000, 1), 1u);
  EXPECT_EQ(MaxDepthSampled(Taxonomy(), 1000, 1), 0u);
}

TEST(SampleEvalNodesTest, PerKindSample) {
  testing::SyntheticFixture f = testing::MakeSynthetic();
  auto a = SampleEvalNodes(f.graph, 200, 100, 3);
  EXPECT_EQ(a.size(), 300u);
  size_t entities = 0;
  for (const std::string &id : a) {
    if (f.graph.node(f.graph.Index(id)).kind == NodeKind::kEntity) ++entities;
  }
  EXPECT_EQ(entities, 200u);
  EXPECT_EQ(SampleEvalNodes(f.graph, 200, 100, 3), a);
  EXPECT_NE(SampleEvalNodes(f.graph, 200, 100, 4), a);
  EXPECT_TRUE(SampleEvalNodes(f.graph, 0, 0, 3).empty());
  try {
    SampleEvalNodes(f.graph, 100000, 0, 3);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kInsufficientNodes);
  }
}

TEST(MetricsIoTest, LoadGoldAndPaths) {
  TempDir dir;
  WriteFile(dir / "gold.tsv", "x\ta\tisa\nx\tb\tnotisa\n");
  WriteFile(dir / "nodes.txt", "x\ny\n");
  GoldEdgeSet gold = LoadGold(dir / "gold.tsv", dir / "nodes.txt");
  EXPECT_EQ(gold.sampled_nodes, (std::set<std::string>{"x", "y"}));
  EXPECT_EQ(gold.judgments.at({"x", "b"}), Label::kNotIsA);

  WriteFile(dir / "bad.tsv", "x\ta\tperhaps\n");
  EXPECT_THROW(LoadGold(dir / "bad.tsv", dir / "nodes.txt"), Error);
  WriteFile(dir / "orphan.tsv", "z\ta\tisa\n");
  EXPECT_THROW(LoadGold(dir / "orphan.tsv", dir / "nodes.txt"), Error);

  WriteFile(dir / "paths.jsonl",
            "{\"nodes\":[\"a\",\"b\",\"c\"],\"first_wrong_index\":1}\n"
            "\n"
            "{\"nodes\":[\"d\"],\"first_wrong_index\":null}\n");
  auto paths = LoadAnnotatedPaths(dir / "paths.jsonl");
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(paths[0].first_wrong_index, 1u);
  EXPECT_FALSE(paths[1].first_wrong_index.has_value());
  WriteFile(dir / "broken.jsonl", "{\"nodes\": 5}\n");
  EXPECT_THROW(LoadAnnotatedPaths(dir / "broken.jsonl"), Error);
}

TEST(MetricsJsonTest, RoundsToFourDecimals) {
  PathMetrics m{10.0 / 3.0, 2.0, 0.4};
  const auto json = PathMetricsJson(m);
  EXPECT_EQ(json["AL"], 3.3333);
  EXPECT_EQ(json["ARCPP"], 0.4);
  EXPECT_EQ(RoundTo(0.12345, 4), 0.1235);
  EXPECT_EQ(RoundTo(2.0 / 3.0, 4), 0.6667);
}

}  // namespace
}  // namespace taxo
