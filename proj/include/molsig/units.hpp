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

#ifndef MOLSIG_UNITS_HPP
#define MOLSIG_UNITS_HPP

#include <span>
#include <string>
#include <vector>

namespace molsig {

// CODATA conversion factor; all internal coordinates are Bohr.
inline constexpr double kBohrPerAngstrom = 1.8897259886;

// 1 eV = 23.0605 kcal/mol. Energies are stored in kcal/mol internally;
// eV is a presentation-time conversion.
inline constexpr double kKcalPerMolPerEv = 23.0605;

enum class LengthUnit { angstrom, bohr };
enum class EnergyUnit { kcal_per_mol, ev };

/// Converts energies between kcal/mol and eV. Identity when units match.
double convert_energy(double value, EnergyUnit from, EnergyUnit to);
std::vector<double> convert_energy(std::span<const double> values,
                                   EnergyUnit from, EnergyUnit to);

std::string to_string(EnergyUnit unit);
std::string to_string(LengthUnit unit);
EnergyUnit energy_unit_from_string(const std::string& name);
LengthUnit length_unit_from_string(const std::string& name);

}  // namespace molsig

#endif  // MOLSIG_UNITS_HPP
