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

#include <cmath>
#include <numeric>
#include <sstream>

#include <doctest.h>

#include "helpers.hpp"
#include "molsig/errors.hpp"
#include "molsig/krr.hpp"

using namespace molsig;

namespace {

FeatureMatrix random_features(testing::TestRng& rng, int rows, int cols,
                              double lo = 0.0, double hi = 10.0) {
  FeatureMatrix fm;
  fm.domain = FeatureDomain::raw;
  fm.values.resize(rows, cols);
  for (int m = 0; m < rows; ++m) {
    for (int l = 0; l < cols; ++l) {
      fm.values(m, l) = rng.uniform(lo, hi);
    }
  }
  return fm;
}

}  // namespace

TEST_CASE("kernel configuration accepts gamma or sigma") {
  const KernelConfig from_gamma = KernelConfig::from_gamma(0.25);
  CHECK(from_gamma.gamma == 0.25);
  CHECK(!from_gamma.input_sigma.has_value());

  const KernelConfig from_sigma = KernelConfig::from_sigma(2.0);
  CHECK(from_sigma.gamma == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(from_sigma.input_sigma == 2.0);

  CHECK_THROWS_AS(KernelConfig::from_gamma(0.0), ConfigError);
  CHECK_THROWS_AS(KernelConfig::from_gamma(-1.0), ConfigError);
  CHECK_THROWS_AS(KernelConfig::from_sigma(0.0), ConfigError);
}

TEST_CASE("kernel entries follow exp(-gamma d^2)") {
  SUBCASE("identical rows give exactly 1") {
    testing::TestRng rng(31);
    FeatureMatrix fm = random_features(rng, 3, 12);
    fm.values.row(1) = fm.values.row(0);
    const Eigen::MatrixXd k =
        kernel_matrix(fm, fm, KernelConfig::from_gamma(1e-3));
    CHECK(k(0, 1) == 1.0);
    CHECK(k(1, 0) == 1.0);
  }
  SUBCASE("distance ln2/gamma gives 1/2") {
    const double gamma = 0.7;
    const double d = std::sqrt(std::log(2.0) / gamma);
    FeatureMatrix a, b;
    a.domain = b.domain = FeatureDomain::raw;
    a.values = MatrixRM::Zero(1, 4);
    b.values = MatrixRM::Zero(1, 4);
    b.values(0, 0) = d;
    const Eigen::MatrixXd k =
        kernel_matrix(a, b, KernelConfig::from_gamma(gamma));
    CHECK(k(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
  }
  SUBCASE("self-kernel is symmetric with a unit diagonal") {
    testing::TestRng rng(32);
    const FeatureMatrix fm = random_features(rng, 7, 9);
    const Eigen::MatrixXd k =
        kernel_matrix(fm, fm, KernelConfig::from_gamma(0.01));
    for (int i = 0; i < 7; ++i) {
      CHECK(k(i, i) == 1.0);
      for (int j = 0; j < i; ++j) {
        CHECK(k(i, j) == k(j, i));
        CHECK(k(i, j) > 0.0);
        CHECK(k(i, j) <= 1.0);
      }
    }
  }
  SUBCASE("entries decrease as distance grows") {
    FeatureMatrix a, b;
    a.domain = b.domain = FeatureDomain::raw;
    a.values = MatrixRM::Zero(1, 2);
    b.values.resize(5, 2);
    for (int i = 0; i < 5; ++i) {
      b.values(i, 0) = static_cast<double>(i);
      b.values(i, 1) = 0.0;
    }
    const Eigen::MatrixXd k =
        kernel_matrix(a, b, KernelConfig::from_gamma(0.3));
    for (int i = 1; i < 5; ++i) {
      CHECK(k(0, i) < k(0, i - 1));
    }
  }
  SUBCASE("domain mismatch is rejected") {
    testing::TestRng rng(33);
    FeatureMatrix a = random_features(rng, 2, 6);
    FeatureMatrix b = random_features(rng, 2, 6);
    b.domain = FeatureDomain::dft_magnitude;
    CHECK_THROWS_AS(kernel_matrix(a, b, KernelConfig::from_gamma(1.0)),
                    DomainMismatchError);
  }
}

TEST_CASE("fit solves the scalar case exactly") {
  FeatureMatrix fm;
  fm.domain = FeatureDomain::raw;
  fm.values = MatrixRM::Zero(1, 3);
  const std::vector<double> targets = {3.0};

  const KrrModel model = fit(fm, targets, KernelConfig::from_gamma(1.0), 0.5);
  CHECK(model.weights.size() == 1);
  CHECK(model.weights(0) == doctest::Approx(2.0).epsilon(1e-14));  // 3/(1+0.5)

  const Eigen::VectorXd pred = predict(model, fm);
  CHECK(pred(0) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("lambda = 0 interpolates distinct training points") {
  testing::TestRng rng(34);
  const FeatureMatrix fm = random_features(rng, 20, 8, 0.0, 6.0);
  std::vector<double> targets(20);
  for (double& t : targets) {
    t = rng.uniform(-100.0, 100.0);
  }

  const KrrModel model = fit(fm, targets, KernelConfig::from_gamma(0.05), 0.0);
  const Eigen::VectorXd pred = predict(model, fm);
  for (int i = 0; i < 20; ++i) {
    CHECK(std::abs(pred(i) - targets[static_cast<std::size_t>(i)]) <=
          1e-6 * std::max(1.0, std::abs(targets[static_cast<std::size_t>(i)])));
  }
}

TEST_CASE("duplicate rows with lambda = 0 fail as singular") {
  testing::TestRng rng(35);
  FeatureMatrix fm = random_features(rng, 4, 5);
  fm.values.row(3) = fm.values.row(0);
  const std::vector<double> targets = {1.0, 2.0, 3.0, 4.0};
  CHECK_THROWS_AS(fit(fm, targets, KernelConfig::from_gamma(0.1), 0.0),
                  SolveError);
}

TEST_CASE("solver matches a dense-inverse oracle on small systems") {
  testing::TestRng rng(36);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = rng.uniform_int(1, 10);
    const FeatureMatrix fm = random_features(rng, m, 6, 0.0, 4.0);
    const double gamma = rng.uniform(0.01, 0.5);
    const double lambda = rng.uniform(1e-6, 0.1);
    std::vector<double> targets(static_cast<std::size_t>(m));
    for (double& t : targets) {
      t = rng.uniform(-50.0, 50.0);
    }

    const KrrModel model =
        fit(fm, targets, KernelConfig::from_gamma(gamma), lambda);

    Eigen::MatrixXd system =
        kernel_matrix(fm, fm, KernelConfig::from_gamma(gamma));
    system.diagonal().array() += lambda;
    const Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(
        targets.data(), static_cast<Eigen::Index>(m));
    const Eigen::VectorXd oracle = testing::gauss_jordan_inverse(system) * y;

    for (int i = 0; i < m; ++i) {
      CHECK(std::abs(model.weights(i) - oracle(i)) <= 1e-8);
    }
  }
}

TEST_CASE("queries far outside the training set predict zero") {
  testing::TestRng rng(37);
  const FeatureMatrix fm = random_features(rng, 6, 4, 0.0, 1.0);
  std::vector<double> targets(6, 42.0);
  const KrrModel model = fit(fm, targets, KernelConfig::from_gamma(0.5), 1e-3);

  FeatureMatrix far;
  far.domain = FeatureDomain::raw;
  far.values = MatrixRM::Constant(1, 4, 1e6);
  const Prediction pred = predict_detailed(model, far);
  CHECK(pred.values(0) == 0.0);
  CHECK(pred.max_kernel(0) < kLowConfidenceKernel);
}

TEST_CASE("prediction is invariant under joint permutation of training rows") {
  testing::TestRng rng(38);
  const FeatureMatrix fm = random_features(rng, 12, 7);
  std::vector<double> targets(12);
  for (double& t : targets) {
    t = rng.uniform(-10.0, 10.0);
  }
  const FeatureMatrix probe = random_features(rng, 4, 7);

  const KrrModel model = fit(fm, targets, KernelConfig::from_gamma(0.02), 1e-4);
  const Eigen::VectorXd base = predict(model, probe);

  std::vector<int> perm(12);
  std::iota(perm.begin(), perm.end(), 0);
  shuffle(perm, rng.raw());

  FeatureMatrix shuffled;
  shuffled.domain = fm.domain;
  shuffled.values.resize(12, 7);
  std::vector<double> shuffled_targets(12);
  for (int i = 0; i < 12; ++i) {
    shuffled.values.row(i) = fm.values.row(perm[static_cast<std::size_t>(i)]);
    shuffled_targets[static_cast<std::size_t>(i)] =
        targets[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
  }
  const KrrModel model2 =
      fit(shuffled, shuffled_targets, KernelConfig::from_gamma(0.02), 1e-4);
  const Eigen::VectorXd permuted = predict(model2, probe);

  for (int i = 0; i < 4; ++i) {
    CHECK(permuted(i) == doctest::Approx(base(i)).epsilon(1e-10));
  }
}

TEST_CASE("model files round-trip bit-identically") {
  testing::TestRng rng(39);
  const FeatureMatrix fm = random_features(rng, 9, 11);
  std::vector<double> targets(9);
  for (double& t : targets) {
    t = rng.uniform(-2000.0, -200.0);
  }
  KrrModel model =
      fit(fm, targets, KernelConfig::from_sigma(17.3), 1.52587890625e-05);
  model.target_name = "energy";

  std::stringstream buffer;
  save_model(model, buffer);
  const KrrModel loaded = load_model(buffer);

  CHECK(loaded.kernel.gamma == model.kernel.gamma);
  CHECK(loaded.kernel.input_sigma == model.kernel.input_sigma);
  CHECK(loaded.ridge_lambda == model.ridge_lambda);
  CHECK(loaded.descriptor.n_max == model.descriptor.n_max);

  const FeatureMatrix probe = random_features(rng, 5, 11);
  const Eigen::VectorXd before = predict(model, probe);
  const Eigen::VectorXd after = predict(loaded, probe);
  for (int i = 0; i < 5; ++i) {
    CHECK(before(i) == after(i));
  }
}

TEST_CASE("model loading rejects malformed documents") {
  testing::TestRng rng(40);
  const FeatureMatrix fm = random_features(rng, 3, 4);
  const std::vector<double> targets = {1.0, 2.0, 3.0};
  const KrrModel model =
      fit(fm, targets, KernelConfig::from_gamma(0.1), 1e-3);

  std::stringstream buffer;
  save_model(model, buffer);
  const std::string text = buffer.str();

  SUBCASE("future format version") {
    std::string bumped = text;
    const auto pos = bumped.find("\"format_version\": 1");
    REQUIRE(pos != std::string::npos);
    bumped.replace(pos, 19, "\"format_version\": 2");
    std::istringstream in(bumped);
    CHECK_THROWS_WITH_AS(load_model(in), doctest::Contains("format_version"),
                         IoError);
  }
  SUBCASE("weights length mismatch") {
    std::string broken = text;
    const auto pos = broken.find("\"weights\": [");
    REQUIRE(pos != std::string::npos);
    broken.insert(pos + 12, "0.0, ");
    std::istringstream in(broken);
    CHECK_THROWS_WITH_AS(load_model(in), doctest::Contains("weights"),
                         IoError);
  }
  SUBCASE("truncated file") {
    std::istringstream in(text.substr(0, text.size() / 2));
    CHECK_THROWS_AS(load_model(in), IoError);
  }
}
