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

#ifndef TAXO_TSV_H_
#define TAXO_TSV_H_

#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace taxo {

std::vector<std::string_view> SplitTabs(std::string_view line);

// Calls `fn(line_number, fields)` for every non-empty line. Line numbers start
// at 1. A trailing carriage return is stripped.
void ForEachRow(std::istream &in,
                const std::function<void(size_t,
                                         const std::vector<std::string_view> &)>
                    &fn);

std::ifstream OpenForRead(const std::filesystem::path &file);
std::ofstream OpenForWrite(const std::filesystem::path &file);

}  // namespace taxo

#endif  // TAXO_TSV_H_
