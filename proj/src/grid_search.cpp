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

#include "molsig/grid_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "molsig/errors.hpp"
#include "molsig/krr.hpp"
#include "molsig/metrics.hpp"
#include "molsig/split.hpp"

namespace molsig {

namespace {

void check_grid(std::span<const double> grid, const char* name) {
  if (grid.empty()) {
    throw ConfigError(std::string(name) + " grid is empty");
  }
  for (double v : grid) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ConfigError(std::string(name) + " grid values must be positive");
    }
  }
}

}  // namespace

FeatureMatrix take_rows(const FeatureMatrix& fm, std::span<const int> indices) {
  FeatureMatrix out;
  out.domain = fm.domain;
  out.values.resize(static_cast<Eigen::Index>(indices.size()), fm.cols());
  if (!fm.labels.empty()) {
    out.labels.reserve(indices.size());
  }
  for (std::size_t i = 0; i < indices.size(); ++i) {
    out.values.row(static_cast<Eigen::Index>(i)) = fm.values.row(indices[i]);
    if (!fm.labels.empty()) {
      out.labels.push_back(fm.labels[static_cast<std::size_t>(indices[i])]);
    }
  }
  return out;
}

std::vector<double> take_values(std::span<const double> values,
                                std::span<const int> indices) {
  std::vector<double> out;
  out.reserve(indices.size());
  for (int idx : indices) {
    out.push_back(values[static_cast<std::size_t>(idx)]);
  }
  return out;
}

GridSearchResult grid_search_scored(const FeatureMatrix& fit_features,
                                    std::span<const double> fit_targets,
                                    const FeatureMatrix& val_features,
                                    std::span<const double> val_targets,
                                    std::span<const double> gamma_grid,
                                    std::span<const double> lambda_grid,
                                    std::optional<int> subsample,
                                    std::uint64_t subsample_seed) {
  check_grid(gamma_grid, "gamma");
  check_grid(lambda_grid, "lambda");
  if (static_cast<int>(fit_targets.size()) != fit_features.rows() ||
      static_cast<int>(val_targets.size()) != val_features.rows()) {
    throw DomainMismatchError("target counts do not match feature rows");
  }

  FeatureMatrix fit_view = fit_features;
  std::vector<double> fit_y(fit_targets.begin(), fit_targets.end());
  if (subsample && *subsample > 0 && *subsample < fit_features.rows()) {
    std::vector<int> order(static_cast<std::size_t>(fit_features.rows()));
    std::iota(order.begin(), order.end(), 0);
    SplitMix64 rng(subsample_seed);
    shuffle(order, rng);
    order.resize(static_cast<std::size_t>(*subsample));
    std::sort(order.begin(), order.end());
    fit_view = take_rows(fit_features, order);
    fit_y = take_values(fit_targets, order);
  }

  // One distance evaluation serves every (gamma, lambda) cell.
  const Eigen::MatrixXd d2_fit = pairwise_sqdist_self(fit_view.values);
  const Eigen::MatrixXd d2_val =
      pairwise_sqdist(val_features.values, fit_view.values);
  const Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(
      fit_y.data(), static_cast<Eigen::Index>(fit_y.size()));

  GridSearchResult result;
  result.domain = fit_features.domain;
  result.table.reserve(gamma_grid.size() * lambda_grid.size());

  double best_mae = std::numeric_limits<double>::infinity();
  bool any_success = false;

  Eigen::MatrixXd kernel_fit;
  Eigen::MatrixXd kernel_val;
  for (double gamma : gamma_grid) {
    kernel_fit = gaussian_kernel_from_sqdist(d2_fit, gamma);
    kernel_val = gaussian_kernel_from_sqdist(d2_val, gamma);
    for (double lambda : lambda_grid) {
      GridCell cell;
      cell.gamma = gamma;
      cell.lambda = lambda;
      try {
        const Eigen::VectorXd beta = solve_ridge(kernel_fit, y, lambda);
        const Eigen::VectorXd pred = kernel_val * beta;
        const std::vector<double> pred_values(pred.data(),
                                              pred.data() + pred.size());
        cell.validation_mae = mae(val_targets, pred_values);
        if (!std::isfinite(cell.validation_mae)) {
          cell.solve_failed = true;
          cell.validation_mae = std::numeric_limits<double>::infinity();
        }
      } catch (const SolveError&) {
        cell.solve_failed = true;
        cell.validation_mae = std::numeric_limits<double>::infinity();
      }

      if (!cell.solve_failed) {
        any_success = true;
        const bool better =
            cell.validation_mae < best_mae ||
            (cell.validation_mae == best_mae &&
             (cell.gamma < result.best_gamma ||
              (cell.gamma == result.best_gamma &&
               cell.lambda < result.best_lambda)));
        if (better) {
          best_mae = cell.validation_mae;
          result.best_gamma = cell.gamma;
          result.best_lambda = cell.lambda;
        }
      }
      result.table.push_back(cell);
    }
  }

  if (!any_success) {
    throw SolveError(
        "every grid cell failed to solve; increase lambda or check the "
        "features");
  }
  return result;
}

GridSearchResult grid_search(const FeatureMatrix& train_features,
                             std::span<const double> train_targets,
                             std::span<const double> gamma_grid,
                             std::span<const double> lambda_grid,
                             const GridSearchOptions& options) {
  if (!(options.validation_fraction > 0.0) ||
      !(options.validation_fraction < 1.0)) {
    throw ConfigError("validation fraction must be in (0, 1)");
  }

  // Sub-split of the supplied rows only; the experiment's test set is never
  // passed in, so the grid cannot read it.
  const SplitPlan sub = make_split(train_features.rows(),
                                   1.0 - options.validation_fraction,
                                   options.seed);
  const FeatureMatrix fit_side = take_rows(train_features, sub.train_indices);
  const FeatureMatrix val_side = take_rows(train_features, sub.test_indices);
  const std::vector<double> fit_y = take_values(train_targets, sub.train_indices);
  const std::vector<double> val_y = take_values(train_targets, sub.test_indices);

  const std::uint64_t subsample_seed = SplitMix64(options.seed).next();
  return grid_search_scored(fit_side, fit_y, val_side, val_y, gamma_grid,
                            lambda_grid, options.subsample, subsample_seed);
}

}  // namespace molsig
