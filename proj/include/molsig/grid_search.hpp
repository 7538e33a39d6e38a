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

#ifndef MOLSIG_GRID_SEARCH_HPP
#define MOLSIG_GRID_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "molsig/descriptor.hpp"

namespace molsig {

struct GridCell {
  double gamma = 0.0;
  double lambda = 0.0;
  double validation_mae = 0.0;
  bool solve_failed = false;  // cell excluded from the argmin
};

struct GridSearchResult {
  std::vector<GridCell> table;  // gamma-major, lambda-minor order
  double best_gamma = 0.0;
  double best_lambda = 0.0;
  FeatureDomain domain = FeatureDomain::raw;
};

struct GridSearchOptions {
  /// Portion of the supplied rows held out for scoring the grid.
  double validation_fraction = 0.25;
  /// Fit on a seeded subsample of the fit side (coarse stage); nullopt or a
  /// value >= the fit-side size means all of it.
  std::optional<int> subsample;
  /// Seed for the internal sub-split and the subsample draw.
  std::uint64_t seed = 0;
};

/// Brute-force search over (gamma, lambda). The caller passes only training
/// rows; the held-out validation side comes from an internal sub-split, so
/// the experiment's test set is structurally out of reach. The pairwise
/// distance matrices are computed once and reused across cells. Ties in the
/// argmin break toward smaller gamma, then smaller lambda.
GridSearchResult grid_search(const FeatureMatrix& train_features,
                             std::span<const double> train_targets,
                             std::span<const double> gamma_grid,
                             std::span<const double> lambda_grid,
                             const GridSearchOptions& options);

/// Explicit-sides variant: fit on (fit_features, fit_targets), score MAE on
/// (val_features, val_targets). Used by grid_search and by the experiment's
/// paper mode (scoring on the test set).
GridSearchResult grid_search_scored(const FeatureMatrix& fit_features,
                                    std::span<const double> fit_targets,
                                    const FeatureMatrix& val_features,
                                    std::span<const double> val_targets,
                                    std::span<const double> gamma_grid,
                                    std::span<const double> lambda_grid,
                                    std::optional<int> subsample,
                                    std::uint64_t subsample_seed);

/// Row subset in the given index order.
FeatureMatrix take_rows(const FeatureMatrix& fm, std::span<const int> indices);
std::vector<double> take_values(std::span<const double> values,
                                std::span<const int> indices);

}  // namespace molsig

#endif  // MOLSIG_GRID_SEARCH_HPP
