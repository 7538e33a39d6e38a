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

#ifndef MOLSIG_DESCRIPTOR_HPP
#define MOLSIG_DESCRIPTOR_HPP

#include <string>
#include <vector>

#include <Eigen/Core>

#include "molsig/dataset.hpp"

namespace molsig {

/// Symmetric atom-pair matrix, zero padded to n_max rows/columns:
/// diagonal 0.5 * Z^2.4, off-diagonal Z_i * Z_j / ||R_i - R_j|| (Bohr).
struct CoulombMatrix {
  Eigen::MatrixXd values;  // n_max x n_max
  int n_atoms = 0;         // real atoms; rows/cols >= n_atoms are padding

  int n_max() const { return static_cast<int>(values.rows()); }
};

/// The sorted Coulomb matrix's lower triangle, unfolded row-wise into a
/// fixed-length vector of n_max*(n_max+1)/2 entries.
struct CoulombSignal {
  std::vector<double> values;
  int n_atoms = 0;
  std::string source_label;
};

enum class FeatureDomain { raw, dft_complex, dft_magnitude };

std::string to_string(FeatureDomain domain);
FeatureDomain feature_domain_from_string(const std::string& name);

/// M stacked feature rows of identical length; `domain` records which
/// representation the rows carry. Complex spectra are stored as interleaved
/// (re, im) pairs so one Euclidean distance serves every domain.
struct FeatureMatrix {
  MatrixRM values;
  FeatureDomain domain = FeatureDomain::raw;
  std::vector<std::string> labels;  // may be empty

  int rows() const { return static_cast<int>(values.rows()); }
  int cols() const { return static_cast<int>(values.cols()); }
};

/// Builds the Coulomb matrix of `mol` padded to n_max. Throws GeometryError
/// when two atoms are closer than 1e-10 Bohr and ConfigError when
/// n_max < atom count.
CoulombMatrix coulomb_matrix(const Molecule& mol, int n_max);

/// Applies one permutation to rows and columns simultaneously so column
/// Euclidean norms are non-increasing; ties keep their original order.
CoulombMatrix sort_coulomb(const CoulombMatrix& cm);

/// Row-wise unfolding of the lower triangle (diagonal included).
CoulombSignal flatten_lower(const CoulombMatrix& cm);

/// Full pipeline for every molecule: coulomb_matrix -> sort_coulomb ->
/// flatten_lower, padded to the dataset's max atom count. Row order follows
/// molecule order regardless of thread count.
FeatureMatrix featurize(const Dataset& ds);

/// Feature CSV: one row per molecule, optional leading label column.
void write_features_csv(const FeatureMatrix& fm, std::ostream& out,
                        bool with_labels,
                        const std::vector<std::string>& comment_lines = {});

}  // namespace molsig

#endif  // MOLSIG_DESCRIPTOR_HPP
