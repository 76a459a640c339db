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

#ifndef TAXO_CLI_H_
#define TAXO_CLI_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace taxo {

// Every tunable of the pipeline. A JSON file with any subset of these keys
// may be passed with --config; flags given on the command line win.
struct PipelineConfig {
  int k1 = 14;
  int k2 = 3;
  double val_fraction = 0.25;
  uint64_t seed = 0;
  std::string mode = "char";
  std::vector<int> ngram_sizes = {2, 3, 4, 5, 6};
  size_t min_df = 1;
  int epochs = 10;
  double learning_rate = 0.1;
  double l2_lambda = 1e-6;
  int k = 1;
  double epsilon = 1e-6;
  bool uniform = false;

  // Throws InvalidArgument on unknown keys or wrongly typed values.
  void Merge(const nlohmann::json &json, const std::vector<std::string> &skip);
  nlohmann::json ToJson() const;
};

// Exit codes.
constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

// Runs the command line tool; args[0] is the program name.
int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err);

}  // namespace taxo

#endif  // TAXO_CLI_H_
