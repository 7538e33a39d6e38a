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

#include "molsig/metrics.hpp"

#include <cmath>

#include "molsig/errors.hpp"

namespace molsig {

namespace {

void check_lengths(std::span<const double> reference,
                   std::span<const double> predicted, std::size_t minimum) {
  if (reference.size() != predicted.size()) {
    throw DomainMismatchError(
        "vector lengths differ: " + std::to_string(reference.size()) + " vs " +
        std::to_string(predicted.size()));
  }
  if (reference.size() < minimum) {
    throw ConfigError("need at least " + std::to_string(minimum) +
                      " samples, got " + std::to_string(reference.size()));
  }
}

}  // namespace

double rmse(std::span<const double> reference,
            std::span<const double> predicted) {
  check_lengths(reference, predicted, 1);
  double sum = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const double diff = reference[i] - predicted[i];
    sum += diff * diff;
  }
  return std::sqrt(sum / static_cast<double>(reference.size()));
}

double mae(std::span<const double> reference,
           std::span<const double> predicted) {
  check_lengths(reference, predicted, 1);
  double sum = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    sum += std::abs(reference[i] - predicted[i]);
  }
  return sum / static_cast<double>(reference.size());
}

double pearson(std::span<const double> reference,
               std::span<const double> predicted) {
  check_lengths(reference, predicted, 2);
  const double n = static_cast<double>(reference.size());

  double mean_ref = 0.0;
  double mean_pred = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    mean_ref += reference[i];
    mean_pred += predicted[i];
  }
  mean_ref /= n;
  mean_pred /= n;

  double cov = 0.0;
  double var_ref = 0.0;
  double var_pred = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const double dr = reference[i] - mean_ref;
    const double dp = predicted[i] - mean_pred;
    cov += dr * dp;
    var_ref += dr * dr;
    var_pred += dp * dp;
  }
  if (var_ref == 0.0 || var_pred == 0.0) {
    throw DataError(
        "correlation undefined: at least one vector has zero variance");
  }

  double r = cov / (std::sqrt(var_ref) * std::sqrt(var_pred));
  // Clamp only rounding overshoot, never a genuinely out-of-range value.
  if (r > 1.0 && r <= 1.0 + 1e-12) {
    r = 1.0;
  } else if (r < -1.0 && r >= -1.0 - 1e-12) {
    r = -1.0;
  }
  return r;
}

Metrics compute_metrics(std::span<const double> reference,
                        std::span<const double> predicted, EnergyUnit unit) {
  Metrics m;
  m.rmse = rmse(reference, predicted);
  m.mae = mae(reference, predicted);
  m.pearson_r = pearson(reference, predicted);
  m.unit = unit;
  m.n = static_cast<int>(reference.size());
  return m;
}

Metrics convert_metrics(const Metrics& m, EnergyUnit to) {
  Metrics out = m;
  out.rmse = convert_energy(m.rmse, m.unit, to);
  out.mae = convert_energy(m.mae, m.unit, to);
  out.unit = to;
  return out;
}

}  // namespace molsig
