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

#ifndef MOLSIG_METRICS_HPP
#define MOLSIG_METRICS_HPP

#include <span>

#include "molsig/units.hpp"

namespace molsig {

double rmse(std::span<const double> reference, std::span<const double> predicted);
double mae(std::span<const double> reference, std::span<const double> predicted);

/// Pearson correlation with mean centering. Throws DataError when either
/// vector has zero variance; clamps at most 1e-12 of rounding overshoot.
double pearson(std::span<const double> reference,
               std::span<const double> predicted);

struct Metrics {
  double rmse = 0.0;
  double mae = 0.0;
  double pearson_r = 0.0;
  EnergyUnit unit = EnergyUnit::kcal_per_mol;
  int n = 0;
};

Metrics compute_metrics(std::span<const double> reference,
                        std::span<const double> predicted, EnergyUnit unit);

/// Unit change applied to the metric values themselves (rmse and mae scale,
/// the correlation does not), so unit pairs match convert_energy exactly.
Metrics convert_metrics(const Metrics& m, EnergyUnit to);

}  // namespace molsig

#endif  // MOLSIG_METRICS_HPP
