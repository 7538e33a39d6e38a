// Copyright 2026 molsig authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MOLSIG_SPLIT_HPP
#define MOLSIG_SPLIT_HPP

#include <cstdint>
#include <vector>

namespace molsig {

/// SplitMix64 generator. The exact update rule is documented in
/// docs/determinism.md so every implementation produces identical splits.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

/// In-place Fisher-Yates shuffle driven by SplitMix64 (see docs).
void shuffle(std::vector<int>& values, SplitMix64& rng);

struct SplitPlan {
  std::vector<int> train_indices;  // sorted ascending
  std::vector<int> test_indices;   // sorted ascending
  std::uint64_t seed = 0;
  double train_fraction = 0.0;

  int total() const {
    return static_cast<int>(train_indices.size() + test_indices.size());
  }
};

/// Deterministic shuffled split: the first round(fraction * m) shuffled
/// indices train, the rest test. Throws ConfigError when either side would
/// be empty or m < 2.
SplitPlan make_split(int m, double fraction, std::uint64_t seed);

}  // namespace molsig

#endif  // MOLSIG_SPLIT_HPP
