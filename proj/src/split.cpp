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

#include "molsig/split.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "molsig/errors.hpp"

namespace molsig {

void shuffle(std::vector<int>& values, SplitMix64& rng) {
  // Fisher-Yates from the top; j = next() mod (i + 1) as documented.
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j =
        static_cast<std::size_t>(rng.next() % static_cast<std::uint64_t>(i));
    std::swap(values[i - 1], values[j]);
  }
}

SplitPlan make_split(int m, double fraction, std::uint64_t seed) {
  if (m < 2) {
    throw ConfigError("need at least 2 samples to split, got " +
                      std::to_string(m));
  }
  if (!(fraction > 0.0) || !(fraction < 1.0)) {
    throw ConfigError("train fraction must be in (0, 1)");
  }
  const int n_train =
      static_cast<int>(std::llround(fraction * static_cast<double>(m)));
  if (n_train < 1 || n_train >= m) {
    throw ConfigError("fraction " + std::to_string(fraction) + " leaves " +
                      (n_train < 1 ? "the training side" : "the test side") +
                      " empty for m = " + std::to_string(m));
  }

  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  SplitMix64 rng(seed);
  shuffle(order, rng);

  SplitPlan plan;
  plan.seed = seed;
  plan.train_fraction = fraction;
  plan.train_indices.assign(order.begin(), order.begin() + n_train);
  plan.test_indices.assign(order.begin() + n_train, order.end());
  std::sort(plan.train_indices.begin(), plan.train_indices.end());
  std::sort(plan.test_indices.begin(), plan.test_indices.end());
  return plan;
}

}  // namespace molsig
