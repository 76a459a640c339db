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

#ifndef TAXO_RANDOM_H_
#define TAXO_RANDOM_H_

#include <cstdint>
#include <span>
#include <utility>

namespace taxo {

// SplitMix64 generator. Unlike the std distributions its output sequence is
// fixed across standard library implementations, so every shuffle and sample
// in the pipeline is reproducible bit for bit.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  // Seeds from a (seed, stream) pair so that independent streams derived from
  // one user seed do not overlap.
  SplitMix64(uint64_t seed, uint64_t stream) : state_(seed) {
    state_ = Next() ^ (stream * 0xD1B54A32D192ED03ULL);
  }

  uint64_t Next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, bound) by rejection; bound must be positive.
  uint64_t Below(uint64_t bound) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t r;
    do {
      r = Next();
    } while (r >= limit);
    return r % bound;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform() { return (Next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

// Fisher-Yates shuffle driven by SplitMix64.
template <typename T>
void Shuffle(std::span<T> items, SplitMix64 &rng) {
  for (size_t i = items.size(); i > 1; --i) {
    size_t j = rng.Below(i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace taxo

#endif  // TAXO_RANDOM_H_
