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

#include "molsig/dataset.hpp"

#include <algorithm>
#include <cmath>

#include "molsig/elements.hpp"
#include "molsig/errors.hpp"

namespace molsig {

void Molecule::validate() const {
  if (atomic_numbers.empty()) {
    throw DataError("molecule '" + label + "' has no atoms");
  }
  if (atomic_numbers.size() != positions.size()) {
    throw DataError("molecule '" + label + "': " +
                    std::to_string(atomic_numbers.size()) +
                    " atomic numbers but " + std::to_string(positions.size()) +
                    " positions");
  }
  for (std::size_t i = 0; i < atomic_numbers.size(); ++i) {
    const int z = atomic_numbers[i];
    if (z < 1 || z > kMaxAtomicNumber) {
      throw DataError("molecule '" + label + "': atomic number " +
                      std::to_string(z) + " outside [1, 118]");
    }
    for (double c : positions[i]) {
      if (!std::isfinite(c)) {
        throw DataError("molecule '" + label + "': non-finite coordinate");
      }
    }
  }
}

int Dataset::max_atoms() const {
  int n = 0;
  for (const Molecule& mol : molecules) {
    n = std::max(n, mol.atom_count());
  }
  return n;
}

int Dataset::property_index(const std::string& name) const {
  for (std::size_t i = 0; i < property_names.size(); ++i) {
    if (property_names[i] == name) {
      return static_cast<int>(i);
    }
  }
  try {
    const std::size_t pos_end = name.size();
    std::size_t used = 0;
    const int idx = std::stoi(name, &used);
    if (used == pos_end && idx >= 0 && idx < properties.cols()) {
      return idx;
    }
  } catch (const std::exception&) {
    // fall through to the error below
  }
  throw ConfigError("no property named '" + name + "'");
}

Eigen::VectorXd Dataset::property_column(int index) const {
  if (index < 0 || index >= properties.cols()) {
    throw ConfigError("property index " + std::to_string(index) +
                      " out of range");
  }
  return properties.col(index);
}

void Dataset::validate() const {
  if (properties.rows() != static_cast<Eigen::Index>(molecules.size())) {
    throw DataError("property rows (" + std::to_string(properties.rows()) +
                    ") do not match molecule count (" +
                    std::to_string(molecules.size()) + ")");
  }
  if (static_cast<Eigen::Index>(property_names.size()) != properties.cols()) {
    throw DataError("property name count does not match property columns");
  }
  if (!properties.allFinite()) {
    throw DataError("non-finite property value");
  }
  for (const Molecule& mol : molecules) {
    mol.validate();
  }
}

}  // namespace molsig
