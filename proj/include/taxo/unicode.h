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

#ifndef TAXO_UNICODE_H_
#define TAXO_UNICODE_H_

#include <string>
#include <string_view>

namespace taxo {

// Decodes UTF-8 into scalar values. Ill-formed sequences decode to U+FFFD.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view text);

// Unicode White_Space property.
bool IsWhitespace(char32_t c);

// Simple (one-to-one) lowercase mapping.
char32_t ToLower(char32_t c);

}  // namespace taxo

#endif  // TAXO_UNICODE_H_
