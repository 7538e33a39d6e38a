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

#ifndef MOLSIG_DATASET_HPP
#define MOLSIG_DATASET_HPP

#include <array>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "molsig/units.hpp"

namespace molsig {

using Vec3 = std::array<double, 3>;

/// Row-major real matrix; feature rows and property columns live here so a
/// per-sample row is contiguous in memory.
using MatrixRM =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// One molecule: nuclear charges plus positions in Bohr.
struct Molecule {
  std::vector<int> atomic_numbers;  // Z_i, each in [1, 118]
  std::vector<Vec3> positions;      // R_i in Bohr
  std::string label;                // optional; empty means unlabeled

  int atom_count() const { return static_cast<int>(atomic_numbers.size()); }

  /// Throws DataError unless the invariants hold: equal non-zero lengths,
  /// Z in range, finite coordinates.
  void validate() const;
};

/// An ordered set of molecules with an M x |P| matrix of target properties.
struct Dataset {
  std::vector<Molecule> molecules;
  MatrixRM properties;  // one row per molecule, one column per property
  std::vector<std::string> property_names;
  std::vector<EnergyUnit> property_units;  // per column, default kcal/mol

  int size() const { return static_cast<int>(molecules.size()); }

  /// Largest atom count across molecules; 0 for an empty dataset.
  int max_atoms() const;

  /// Column of `properties` selected by property name or, if `name` parses
  /// as an integer, by index. Throws ConfigError when absent.
  int property_index(const std::string& name) const;

  Eigen::VectorXd property_column(int index) const;

  void validate() const;
};

}  // namespace molsig

#endif  // MOLSIG_DATASET_HPP
