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

#ifndef TAXO_LOGGING_H_
#define TAXO_LOGGING_H_

#include <spdlog/spdlog.h>

namespace taxo {

// Library-wide logger. Writes to stderr so command output stays clean.
spdlog::logger &Log();

}  // namespace taxo

#endif  // TAXO_LOGGING_H_
