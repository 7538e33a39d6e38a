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

#ifndef MOLSIG_KRR_HPP
#define MOLSIG_KRR_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include <Eigen/Core>

#include "molsig/descriptor.hpp"
#include "molsig/units.hpp"

namespace molsig {

/// Gaussian kernel parameterized canonically as K = exp(-gamma * d^2).
/// A user-supplied bandwidth sigma maps to gamma = 1 / (2 sigma^2) and is
/// kept for provenance.
struct KernelConfig {
  double gamma = 0.0;
  std::optional<double> input_sigma;

  static KernelConfig from_gamma(double gamma);
  static KernelConfig from_sigma(double sigma);
};

/// Everything needed to featurize a new molecule exactly like the training
/// set. Sorting is always by descending column norm.
struct DescriptorMeta {
  int n_max = 0;
  FeatureDomain domain = FeatureDomain::raw;
};

/// Trained kernel ridge regressor: stored training rows plus weights.
struct KrrModel {
  FeatureMatrix training_features;
  Eigen::VectorXd weights;
  KernelConfig kernel;
  double ridge_lambda = 0.0;
  std::string target_name;
  EnergyUnit energy_unit = EnergyUnit::kcal_per_mol;
  DescriptorMeta descriptor;
};

struct Prediction {
  Eigen::VectorXd values;
  /// Largest kernel entry per query row; values below 1e-12 mean the query
  /// is effectively outside the training distribution.
  Eigen::VectorXd max_kernel;
};

inline constexpr double kLowConfidenceKernel = 1e-12;

/// Squared Euclidean distances between rows of a and rows of b, computed
/// from explicit differences so identical rows give exactly zero.
Eigen::MatrixXd pairwise_sqdist(const MatrixRM& a, const MatrixRM& b);

/// Self-distance variant: symmetric with an exactly zero diagonal.
Eigen::MatrixXd pairwise_sqdist_self(const MatrixRM& a);

/// Entry (m, m') = exp(-gamma * ||a_m - b_m'||^2). Throws
/// DomainMismatchError when domains or row lengths differ.
Eigen::MatrixXd kernel_matrix(const FeatureMatrix& a, const FeatureMatrix& b,
                              const KernelConfig& cfg);

/// exp(-gamma * d2) entrywise via std::exp, preserving IEEE underflow to
/// exact zero for far-apart rows (vectorized exponentials clamp instead).
Eigen::MatrixXd gaussian_kernel_from_sqdist(const Eigen::MatrixXd& sqdist,
                                            double gamma);

/// Solves (K + lambda I) beta = targets by Cholesky factorization with
/// iterative refinement; K must be symmetric. Throws SolveError when the
/// system is not positive definite or the residual stays above
/// 1e-8 * ||targets||_inf.
Eigen::VectorXd solve_ridge(const Eigen::MatrixXd& kernel,
                            const Eigen::VectorXd& targets, double lambda);

KrrModel fit(const FeatureMatrix& features, std::span<const double> targets,
             const KernelConfig& cfg, double lambda,
             const std::string& target_name = "energy",
             EnergyUnit unit = EnergyUnit::kcal_per_mol);

Eigen::VectorXd predict(const KrrModel& model, const FeatureMatrix& features);
Prediction predict_detailed(const KrrModel& model,
                            const FeatureMatrix& features);

/// Versioned JSON model document (.krr.json). Numbers are written with
/// shortest round-trip precision, so load(save(m)) predicts bit-identically.
void save_model(const KrrModel& model, std::ostream& out);
KrrModel load_model(std::istream& in);
void save_model_file(const KrrModel& model, const std::string& path);
KrrModel load_model_file(const std::string& path);

}  // namespace molsig

#endif  // MOLSIG_KRR_HPP
