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

#include "molsig/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "molsig/elements.hpp"
#include "molsig/errors.hpp"

namespace molsig {

namespace {

constexpr std::string_view kCsvHeader = "label,energy_kcalmol,n_atoms,atoms";

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) {
    return {};
  }
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

bool parse_double(const std::string& token, double& out) {
  const std::string t = trim(token);
  const char* first = t.data();
  const char* last = t.data() + t.size();
  const auto result = std::from_chars(first, last, out);
  return result.ec == std::errc() && result.ptr == last;
}

bool parse_int(const std::string& token, long& out) {
  const std::string t = trim(token);
  const char* first = t.data();
  const char* last = t.data() + t.size();
  const auto result = std::from_chars(first, last, out);
  return result.ec == std::errc() && result.ptr == last;
}

[[noreturn]] void fail_xyz(int frame, int line, const std::string& msg) {
  throw ParseError("xyz frame " + std::to_string(frame) + ", line " +
                   std::to_string(line) + ": " + msg);
}

[[noreturn]] void fail_csv(int line, const std::string& msg) {
  throw ParseError("csv line " + std::to_string(line) + ": " + msg);
}

Dataset finish_dataset(std::vector<Molecule> molecules,
                       std::vector<double> energies) {
  Dataset ds;
  ds.molecules = std::move(molecules);
  ds.properties.resize(static_cast<Eigen::Index>(energies.size()), 1);
  for (std::size_t i = 0; i < energies.size(); ++i) {
    ds.properties(static_cast<Eigen::Index>(i), 0) = energies[i];
  }
  ds.property_names = {"energy"};
  ds.property_units = {EnergyUnit::kcal_per_mol};
  ds.validate();
  return ds;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

Dataset parse_xyz(std::istream& in, LengthUnit unit) {
  std::vector<Molecule> molecules;
  std::vector<double> energies;

  std::string line;
  int line_no = 0;
  int frame = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string count_text = trim(line);
    if (count_text.empty()) {
      continue;  // blank separator between frames
    }
    ++frame;

    long n_atoms = 0;
    if (!parse_int(count_text, n_atoms) || n_atoms < 1) {
      fail_xyz(frame, line_no, "malformed atom count '" + count_text + "'");
    }

    if (!std::getline(in, line)) {
      fail_xyz(frame, line_no + 1, "missing comment line");
    }
    ++line_no;

    Molecule mol;
    bool have_energy = false;
    double energy = 0.0;
    {
      std::istringstream comment(line);
      std::string token;
      while (comment >> token) {
        if (token.rfind("energy=", 0) == 0) {
          if (!parse_double(token.substr(7), energy)) {
            fail_xyz(frame, line_no,
                     "malformed energy value '" + token.substr(7) + "'");
          }
          have_energy = true;
        } else if (token.rfind("label=", 0) == 0) {
          mol.label = token.substr(6);
        }
      }
    }
    if (!have_energy) {
      fail_xyz(frame, line_no, "comment line is missing the energy=<value> key");
    }
    if (!std::isfinite(energy)) {
      fail_xyz(frame, line_no, "non-finite energy");
    }

    for (long a = 0; a < n_atoms; ++a) {
      if (!std::getline(in, line)) {
        fail_xyz(frame, line_no + 1,
                 "unexpected end of input (expected " +
                     std::to_string(n_atoms) + " atom lines, got " +
                     std::to_string(a) + ")");
      }
      ++line_no;

      std::istringstream atom_line(trim(line));
      std::string symbol, xs, ys, zs, extra;
      if (!(atom_line >> symbol >> xs >> ys >> zs) || (atom_line >> extra)) {
        fail_xyz(frame, line_no,
                 "expected '<symbol> <x> <y> <z>', got '" + trim(line) + "'");
      }
      const auto z = atomic_number_of(symbol);
      if (!z) {
        fail_xyz(frame, line_no, "unknown element symbol '" + symbol + "'");
      }
      Vec3 pos;
      const std::string coords[3] = {xs, ys, zs};
      for (int c = 0; c < 3; ++c) {
        if (!parse_double(coords[c], pos[static_cast<std::size_t>(c)]) ||
            !std::isfinite(pos[static_cast<std::size_t>(c)])) {
          fail_xyz(frame, line_no,
                   "non-numeric coordinate '" + coords[c] + "'");
        }
        if (unit == LengthUnit::angstrom) {
          pos[static_cast<std::size_t>(c)] *= kBohrPerAngstrom;
        }
      }
      mol.atomic_numbers.push_back(*z);
      mol.positions.push_back(pos);
    }

    molecules.push_back(std::move(mol));
    energies.push_back(energy);
  }

  return finish_dataset(std::move(molecules), std::move(energies));
}

Dataset parse_csv(std::istream& in) {
  std::vector<Molecule> molecules;
  std::vector<double> energies;

  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') {
      continue;
    }
    if (!header_seen) {
      if (text.rfind("label,energy_kcalmol", 0) != 0) {
        fail_csv(line_no, "expected header '" + std::string(kCsvHeader) +
                              "', got '" + text + "'");
      }
      header_seen = true;
      continue;
    }

    const std::vector<std::string> fields = split_on(text, ',');
    if (fields.size() < 3) {
      fail_csv(line_no, "expected at least 3 fields");
    }

    Molecule mol;
    mol.label = trim(fields[0]);

    double energy = 0.0;
    if (!parse_double(fields[1], energy) || !std::isfinite(energy)) {
      fail_csv(line_no, "non-finite or malformed energy '" + fields[1] + "'");
    }

    long n_atoms = 0;
    if (!parse_int(fields[2], n_atoms) || n_atoms < 1) {
      fail_csv(line_no, "malformed atom count '" + fields[2] + "'");
    }
    const std::size_t expected = 3 + 4 * static_cast<std::size_t>(n_atoms);
    if (fields.size() != expected) {
      fail_csv(line_no, "declared " + std::to_string(n_atoms) +
                            " atoms, so expected " + std::to_string(expected) +
                            " fields, got " + std::to_string(fields.size()));
    }

    for (long a = 0; a < n_atoms; ++a) {
      const std::size_t base = 3 + 4 * static_cast<std::size_t>(a);
      long z = 0;
      if (!parse_int(fields[base], z) || z < 1 || z > kMaxAtomicNumber) {
        fail_csv(line_no, "bad atomic number '" + fields[base] + "'");
      }
      Vec3 pos;
      for (int c = 0; c < 3; ++c) {
        if (!parse_double(fields[base + 1 + static_cast<std::size_t>(c)],
                          pos[static_cast<std::size_t>(c)]) ||
            !std::isfinite(pos[static_cast<std::size_t>(c)])) {
          fail_csv(line_no, "non-finite coordinate '" +
                                fields[base + 1 + static_cast<std::size_t>(c)] +
                                "'");
        }
      }
      mol.atomic_numbers.push_back(static_cast<int>(z));
      mol.positions.push_back(pos);
    }

    molecules.push_back(std::move(mol));
    energies.push_back(energy);
  }

  if (!header_seen) {
    throw ParseError("csv input has no header line");
  }
  return finish_dataset(std::move(molecules), std::move(energies));
}

void write_csv(const Dataset& ds, std::ostream& out,
               const std::vector<std::string>& comment_lines) {
  for (const std::string& c : comment_lines) {
    out << "# " << c << '\n';
  }
  out << kCsvHeader << '\n';

  const int energy_col = ds.properties.cols() > 0 ? 0 : -1;
  for (int m = 0; m < ds.size(); ++m) {
    const Molecule& mol = ds.molecules[static_cast<std::size_t>(m)];
    if (mol.label.find(',') != std::string::npos ||
        mol.label.find('\n') != std::string::npos) {
      throw IoError("label '" + mol.label + "' contains a separator");
    }
    out << mol.label << ',';
    out << format_double(energy_col >= 0 ? ds.properties(m, energy_col) : 0.0);
    out << ',' << mol.atom_count();
    for (int a = 0; a < mol.atom_count(); ++a) {
      const auto& pos = mol.positions[static_cast<std::size_t>(a)];
      out << ',' << mol.atomic_numbers[static_cast<std::size_t>(a)];
      for (double c : pos) {
        out << ',' << format_double(c);
      }
    }
    out << '\n';
  }
}

Dataset load_dataset_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open dataset '" + path + "'");
  }
  return parse_csv(in);
}

Dataset load_dataset_xyz(const std::string& path, LengthUnit unit) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open dataset '" + path + "'");
  }
  return parse_xyz(in, unit);
}

Dataset load_dataset(const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".xyz") {
    return load_dataset_xyz(path, LengthUnit::angstrom);
  }
  return load_dataset_csv(path);
}

}  // namespace molsig
