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

#ifndef MOLSIG_EXPERIMENT_HPP
#define MOLSIG_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "molsig/dataset.hpp"
#include "molsig/grid_search.hpp"
#include "molsig/metrics.hpp"
#include "molsig/split.hpp"

namespace molsig {

std::vector<double> default_gamma_grid();   // 2^-24 .. 2^-4
std::vector<double> default_lambda_grid();  // 2^-20, 2^-18, .., 2^-4

struct ExperimentConfig {
  std::string target = "energy";
  double train_fraction = 0.8;
  std::uint64_t seed = 0;
  std::vector<FeatureDomain> domains = {FeatureDomain::raw,
                                        FeatureDomain::dft_magnitude};
  std::vector<double> gamma_grid = default_gamma_grid();
  std::vector<double> lambda_grid = default_lambda_grid();
  /// Coarse stage fits on at most this many training molecules; <= 0
  /// disables the coarse/fine staging and scans the full grid directly.
  int coarse_subsample = 1000;
  /// Fine stage spans best * 2^[-radius, +radius] in both dimensions.
  int fine_radius = 2;
  /// Score the grid on the test set instead of an internal sub-split,
  /// imitating the protocol the source experiment may have used. Leaky by
  /// construction; off by default.
  bool paper_mode = false;
};

struct DomainReport {
  FeatureDomain domain = FeatureDomain::raw;
  GridSearchResult coarse;
  GridSearchResult fine;
  double best_gamma = 0.0;
  double best_lambda = 0.0;
  Metrics metrics_kcal;
  Metrics metrics_ev;
  /// Per-test-molecule (reference, predicted) pairs in kcal/mol.
  std::vector<std::pair<double, double>> scatter;
  int low_confidence_count = 0;
};

struct EvalReport {
  SplitPlan split;
  std::vector<DomainReport> domains;
  ExperimentConfig config;
  int feature_length = 0;
};

/// Full pipeline: featurize, split, per-domain staged grid search on the
/// training side, refit, evaluate on the held-out test side. Errors are
/// re-thrown with the failing stage prepended.
EvalReport run_experiment(const Dataset& ds, const ExperimentConfig& config);

struct ReportProvenance {
  std::string tool_version;
  std::string command;
  std::string input_hash;
};

void write_report_json(const EvalReport& report, const ReportProvenance& prov,
                       std::ostream& out);
void write_scatter_csv(const DomainReport& domain, std::ostream& out,
                       const std::vector<std::string>& comment_lines = {});
void write_grid_csv(const DomainReport& domain, std::ostream& out,
                    const std::vector<std::string>& comment_lines = {});

/// Two-line-per-domain table comparing the domains side by side.
std::string format_report_summary(const EvalReport& report);

}  // namespace molsig

#endif  // MOLSIG_EXPERIMENT_HPP
