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

#include "molsig/units.hpp"

#include "molsig/errors.hpp"

namespace molsig {

double convert_energy(double value, EnergyUnit from, EnergyUnit to) {
  if (from == to) {
    return value;
  }
  if (from == EnergyUnit::kcal_per_mol && to == EnergyUnit::ev) {
    return value / kKcalPerMolPerEv;
  }
  return value * kKcalPerMolPerEv;
}

std::vector<double> convert_energy(std::span<const double> values,
                                   EnergyUnit from, EnergyUnit to) {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = convert_energy(values[i], from, to);
  }
  return out;
}

std::string to_string(EnergyUnit unit) {
  return unit == EnergyUnit::kcal_per_mol ? "kcal/mol" : "eV";
}

std::string to_string(LengthUnit unit) {
  return unit == LengthUnit::angstrom ? "angstrom" : "bohr";
}

EnergyUnit energy_unit_from_string(const std::string& name) {
  if (name == "kcal/mol" || name == "kcal_per_mol" || name == "kcal") {
    return EnergyUnit::kcal_per_mol;
  }
  if (name == "eV" || name == "ev") {
    return EnergyUnit::ev;
  }
  throw ConfigError("unknown energy unit '" + name + "'");
}

LengthUnit length_unit_from_string(const std::string& name) {
  if (name == "angstrom" || name == "ang" || name == "A") {
    return LengthUnit::angstrom;
  }
  if (name == "bohr" || name == "au") {
    return LengthUnit::bohr;
  }
  throw ConfigError("unknown length unit '" + name + "'");
}

}  // namespace molsig
