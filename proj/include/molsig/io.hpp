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

#ifndef MOLSIG_IO_HPP
#define MOLSIG_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "molsig/dataset.hpp"

namespace molsig {

/// Parses concatenated XYZ frames:
///   line 1: atom count N
///   line 2: comment containing `energy=<real>` (kcal/mol) and optionally
///           `label=<text>`
///   then N lines `<symbol> <x> <y> <z>`
/// Coordinates are converted to Bohr when `unit` is angstrom.
Dataset parse_xyz(std::istream& in, LengthUnit unit);

/// Parses the canonical packed CSV, one molecule per line:
///   label,energy_kcalmol,N,Z1,x1,y1,z1,...,ZN,xN,yN,zN
/// Coordinates must already be Bohr. Lines starting with '#' are comments;
/// the first non-comment line must be the header.
Dataset parse_csv(std::istream& in);

/// Writes the canonical CSV. `comment_lines` are emitted first, each
/// prefixed with "# ". Numbers round-trip exactly (shortest representation).
void write_csv(const Dataset& ds, std::ostream& out,
               const std::vector<std::string>& comment_lines = {});

Dataset load_dataset(const std::string& path);  // dispatch on extension: .xyz/.csv
Dataset load_dataset_csv(const std::string& path);
Dataset load_dataset_xyz(const std::string& path, LengthUnit unit);

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

}  // namespace molsig

#endif  // MOLSIG_IO_HPP
