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

#include "molsig/krr.hpp"

#include <cmath>

#include <Eigen/Cholesky>

#include "molsig/errors.hpp"
#include "molsig/io.hpp"

namespace molsig {

namespace {

constexpr double kResidualTolerance = 1e-8;
constexpr int kMaxRefinementSteps = 3;

void check_compatible(const FeatureMatrix& a, const FeatureMatrix& b) {
  if (a.domain != b.domain) {
    throw DomainMismatchError("feature domains differ: " + to_string(a.domain) +
                              " vs " + to_string(b.domain));
  }
  if (a.cols() != b.cols()) {
    throw DomainMismatchError(
        "feature lengths differ: " + std::to_string(a.cols()) + " vs " +
        std::to_string(b.cols()));
  }
}

}  // namespace

KernelConfig KernelConfig::from_gamma(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw ConfigError("gamma must be positive and finite");
  }
  return KernelConfig{gamma, std::nullopt};
}

KernelConfig KernelConfig::from_sigma(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ConfigError("sigma must be positive and finite");
  }
  return KernelConfig{1.0 / (2.0 * sigma * sigma), sigma};
}

Eigen::MatrixXd pairwise_sqdist(const MatrixRM& a, const MatrixRM& b) {
  const Eigen::Index rows_a = a.rows();
  const Eigen::Index rows_b = b.rows();
  const Eigen::Index length = a.cols();
  Eigen::MatrixXd d2(rows_a, rows_b);

  // Explicit differences rather than the Gram-matrix expansion: identical
  // rows produce an exact zero, which the kernel contract relies on.
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < rows_a; ++i) {
    const double* ra = a.data() + i * length;
    for (Eigen::Index j = 0; j < rows_b; ++j) {
      const double* rb = b.data() + j * length;
      double sum = 0.0;
      for (Eigen::Index l = 0; l < length; ++l) {
        const double diff = ra[l] - rb[l];
        sum += diff * diff;
      }
      d2(i, j) = sum;
    }
  }
  return d2;
}

Eigen::MatrixXd pairwise_sqdist_self(const MatrixRM& a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index length = a.cols();
  Eigen::MatrixXd d2(rows, rows);

#pragma omp parallel for schedule(dynamic, 8)
  for (Eigen::Index i = 0; i < rows; ++i) {
    d2(i, i) = 0.0;
    const double* ra = a.data() + i * length;
    for (Eigen::Index j = 0; j < i; ++j) {
      const double* rb = a.data() + j * length;
      double sum = 0.0;
      for (Eigen::Index l = 0; l < length; ++l) {
        const double diff = ra[l] - rb[l];
        sum += diff * diff;
      }
      d2(i, j) = sum;
      d2(j, i) = sum;
    }
  }
  return d2;
}

Eigen::MatrixXd gaussian_kernel_from_sqdist(const Eigen::MatrixXd& sqdist,
                                            double gamma) {
  const Eigen::Index rows = sqdist.rows();
  const Eigen::Index cols = sqdist.cols();
  Eigen::MatrixXd k(rows, cols);
#pragma omp parallel for schedule(static)
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      k(i, j) = std::exp(-gamma * sqdist(i, j));
    }
  }
  return k;
}

Eigen::MatrixXd kernel_matrix(const FeatureMatrix& a, const FeatureMatrix& b,
                              const KernelConfig& cfg) {
  check_compatible(a, b);
  const Eigen::MatrixXd d2 = pairwise_sqdist(a.values, b.values);
  if (!d2.allFinite()) {
    throw DataError("non-finite pairwise distance");
  }
  return gaussian_kernel_from_sqdist(d2, cfg.gamma);
}

Eigen::VectorXd solve_ridge(const Eigen::MatrixXd& kernel,
                            const Eigen::VectorXd& targets, double lambda) {
  if (kernel.rows() != kernel.cols()) {
    throw DomainMismatchError("kernel matrix is not square");
  }
  if (kernel.rows() != targets.size()) {
    throw DomainMismatchError("kernel size does not match target count");
  }
  if (lambda < 0.0 || !std::isfinite(lambda)) {
    throw ConfigError("lambda must be finite and >= 0");
  }

  Eigen::MatrixXd system = kernel;
  system.diagonal().array() += lambda;

  // Factor in place; residual products below use the original operator as
  // kernel * x + lambda * x, so no second copy of the system is kept.
  Eigen::LLT<Eigen::Ref<Eigen::MatrixXd>> llt(system);
  if (llt.info() != Eigen::Success) {
    throw SolveError(
        "kernel system is not positive definite (duplicate rows with "
        "lambda = 0?); use lambda > 0");
  }

  Eigen::VectorXd beta = llt.solve(targets);

  const double target_scale = targets.lpNorm<Eigen::Infinity>();
  const double bound = kResidualTolerance * target_scale;
  double residual_norm = 0.0;
  for (int step = 0; step < kMaxRefinementSteps; ++step) {
    Eigen::VectorXd residual = targets - kernel * beta - lambda * beta;
    residual_norm = residual.lpNorm<Eigen::Infinity>();
    if (residual_norm <= bound) {
      return beta;
    }
    beta += llt.solve(residual);
  }
  residual_norm =
      (targets - kernel * beta - lambda * beta).lpNorm<Eigen::Infinity>();
  if (residual_norm <= bound) {
    return beta;
  }
  throw SolveError("ridge solve residual " + format_double(residual_norm) +
                   " exceeds " + format_double(bound) +
                   "; the system is too ill-conditioned at lambda = " +
                   format_double(lambda));
}

KrrModel fit(const FeatureMatrix& features, std::span<const double> targets,
             const KernelConfig& cfg, double lambda,
             const std::string& target_name, EnergyUnit unit) {
  if (features.rows() < 1) {
    throw ConfigError("cannot fit on an empty feature matrix");
  }
  if (static_cast<int>(targets.size()) != features.rows()) {
    throw DomainMismatchError(
        "target count (" + std::to_string(targets.size()) +
        ") does not match feature rows (" + std::to_string(features.rows()) +
        ")");
  }

  const Eigen::MatrixXd kernel = kernel_matrix(features, features, cfg);
  const Eigen::VectorXd y =
      Eigen::Map<const Eigen::VectorXd>(targets.data(),
                                        static_cast<Eigen::Index>(targets.size()));

  KrrModel model;
  model.weights = solve_ridge(kernel, y, lambda);
  model.training_features = features;
  model.kernel = cfg;
  model.ridge_lambda = lambda;
  model.target_name = target_name;
  model.energy_unit = unit;
  model.descriptor.domain = features.domain;
  // n_max recovered from the raw signal length l = n (n + 1) / 2.
  const int stored = features.domain == FeatureDomain::dft_complex
                         ? features.cols() / 2
                         : features.cols();
  model.descriptor.n_max =
      static_cast<int>(std::lround((std::sqrt(8.0 * stored + 1.0) - 1.0) / 2.0));
  return model;
}

Prediction predict_detailed(const KrrModel& model,
                            const FeatureMatrix& features) {
  check_compatible(model.training_features, features);
  const Eigen::MatrixXd k =
      kernel_matrix(features, model.training_features, model.kernel);
  Prediction out;
  out.values = k * model.weights;
  out.max_kernel = k.rowwise().maxCoeff();
  return out;
}

Eigen::VectorXd predict(const KrrModel& model, const FeatureMatrix& features) {
  return predict_detailed(model, features).values;
}

}  // namespace molsig
