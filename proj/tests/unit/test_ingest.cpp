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

#include <sstream>

#include <doctest.h>

#include "helpers.hpp"
#include "molsig/errors.hpp"
#include "molsig/io.hpp"
#include "molsig/units.hpp"

using namespace molsig;

TEST_CASE("parse_xyz converts angstrom coordinates to Bohr") {
  std::istringstream in(
      "2\n"
      "energy=-1.0 label=h2\n"
      "H 0 0 0\n"
      "H 0 0 0.74\n");
  const Dataset ds = parse_xyz(in, LengthUnit::angstrom);

  REQUIRE(ds.size() == 1);
  const Molecule& mol = ds.molecules[0];
  CHECK(mol.atomic_numbers == std::vector<int>{1, 1});
  CHECK(mol.label == "h2");
  CHECK(mol.positions[0][2] == 0.0);
  CHECK(mol.positions[1][2] == doctest::Approx(1.398397231564).epsilon(1e-12));
  CHECK(mol.positions[1][2] == 0.74 * kBohrPerAngstrom);
  CHECK(ds.properties(0, 0) == -1.0);
  CHECK(ds.property_names == std::vector<std::string>{"energy"});
}

TEST_CASE("parse_xyz passes bohr coordinates through unchanged") {
  std::istringstream in(
      "3\n"
      "energy=0\n"
      "O 0 0 0\n"
      "H 1 0 0\n"
      "H 0 1 0\n");
  const Dataset ds = parse_xyz(in, LengthUnit::bohr);

  REQUIRE(ds.size() == 1);
  CHECK(ds.molecules[0].atomic_numbers == std::vector<int>{8, 1, 1});
  CHECK(ds.molecules[0].positions[1][0] == 1.0);
  CHECK(ds.molecules[0].positions[2][1] == 1.0);
}

TEST_CASE("parse_xyz reports unknown element symbols with frame context") {
  std::istringstream in(
      "1\n"
      "energy=0\n"
      "Xx 0 0 0\n");
  CHECK_THROWS_WITH_AS(parse_xyz(in, LengthUnit::bohr),
                       doctest::Contains("Xx"), ParseError);
}

TEST_CASE("parse_xyz error paths name the offending line") {
  SUBCASE("malformed atom count") {
    std::istringstream in("two\nenergy=0\nH 0 0 0\n");
    CHECK_THROWS_WITH_AS(parse_xyz(in, LengthUnit::bohr),
                         doctest::Contains("atom count"), ParseError);
  }
  SUBCASE("missing energy key") {
    std::istringstream in("1\njust a comment\nH 0 0 0\n");
    CHECK_THROWS_WITH_AS(parse_xyz(in, LengthUnit::bohr),
                         doctest::Contains("energy="), ParseError);
  }
  SUBCASE("non-numeric coordinate") {
    std::istringstream in("1\nenergy=0\nH 0 zero 0\n");
    CHECK_THROWS_WITH_AS(parse_xyz(in, LengthUnit::bohr),
                         doctest::Contains("line 3"), ParseError);
  }
  SUBCASE("truncated frame") {
    std::istringstream in("2\nenergy=0\nH 0 0 0\n");
    CHECK_THROWS_AS(parse_xyz(in, LengthUnit::bohr), ParseError);
  }
}

TEST_CASE("parse_csv reads the canonical packed format") {
  std::istringstream in(
      "label,energy_kcalmol,n_atoms,atoms\n"
      "h2,-1.0,2,1,0,0,0,1,0,0,1.4\n");
  const Dataset ds = parse_csv(in);

  REQUIRE(ds.size() == 1);
  CHECK(ds.molecules[0].label == "h2");
  CHECK(ds.molecules[0].atomic_numbers == std::vector<int>{1, 1});
  CHECK(ds.molecules[0].positions[1][2] == 1.4);
  CHECK(ds.properties(0, 0) == -1.0);
}

TEST_CASE("parse_csv accepts an empty body") {
  std::istringstream in("label,energy_kcalmol,n_atoms,atoms\n");
  const Dataset ds = parse_csv(in);
  CHECK(ds.size() == 0);
  CHECK(ds.max_atoms() == 0);
}

TEST_CASE("parse_csv rejects inconsistent atom counts and bad numbers") {
  SUBCASE("declared three atoms, provided two") {
    std::istringstream in(
        "label,energy_kcalmol,n_atoms,atoms\n"
        "bad,0,3,1,0,0,0,1,1,1,1\n");
    CHECK_THROWS_WITH_AS(parse_csv(in), doctest::Contains("line 2"),
                         ParseError);
  }
  SUBCASE("non-finite coordinate") {
    std::istringstream in(
        "label,energy_kcalmol,n_atoms,atoms\n"
        "bad,0,1,1,0,nan,0\n");
    CHECK_THROWS_AS(parse_csv(in), ParseError);
  }
  SUBCASE("missing header") {
    std::istringstream in("h2,-1.0,2,1,0,0,0,1,0,0,1.4\n");
    CHECK_THROWS_AS(parse_csv(in), ParseError);
  }
}

TEST_CASE("csv round-trips field for field") {
  testing::TestRng rng(41);
  Dataset ds;
  std::vector<double> energies;
  for (int m = 0; m < 12; ++m) {
    Molecule mol = testing::random_molecule(rng, 1, 9);
    mol.label = "mol" + std::to_string(m);
    ds.molecules.push_back(std::move(mol));
    energies.push_back(rng.uniform(-2000.0, -100.0));
  }
  ds.properties.resize(12, 1);
  for (int m = 0; m < 12; ++m) {
    ds.properties(m, 0) = energies[static_cast<std::size_t>(m)];
  }
  ds.property_names = {"energy"};
  ds.property_units = {EnergyUnit::kcal_per_mol};

  std::ostringstream out;
  write_csv(ds, out, {"round trip check"});
  std::istringstream in(out.str());
  const Dataset back = parse_csv(in);

  REQUIRE(back.size() == ds.size());
  for (int m = 0; m < ds.size(); ++m) {
    const auto mu = static_cast<std::size_t>(m);
    CHECK(back.molecules[mu].label == ds.molecules[mu].label);
    CHECK(back.molecules[mu].atomic_numbers == ds.molecules[mu].atomic_numbers);
    REQUIRE(back.molecules[mu].positions.size() ==
            ds.molecules[mu].positions.size());
    for (std::size_t a = 0; a < ds.molecules[mu].positions.size(); ++a) {
      for (int c = 0; c < 3; ++c) {
        CHECK(back.molecules[mu].positions[a][static_cast<std::size_t>(c)] ==
              ds.molecules[mu].positions[a][static_cast<std::size_t>(c)]);
      }
    }
    CHECK(back.properties(m, 0) == ds.properties(m, 0));
  }
}

TEST_CASE("convert_energy matches the tabulated pairs") {
  CHECK(convert_energy(17.30, EnergyUnit::kcal_per_mol, EnergyUnit::ev) ==
        doctest::Approx(0.7502005593981049).epsilon(1e-14));
  CHECK(convert_energy(0.0, EnergyUnit::kcal_per_mol, EnergyUnit::ev) == 0.0);
  CHECK(convert_energy(5.5, EnergyUnit::ev, EnergyUnit::ev) == 5.5);
  CHECK(convert_energy(1.0, EnergyUnit::ev, EnergyUnit::kcal_per_mol) ==
        23.0605);
}

TEST_CASE("convert_energy round-trips within 1e-12 relative") {
  testing::TestRng rng(7);
  for (int i = 0; i < 200; ++i) {
    const double x = rng.uniform(-5000.0, 5000.0);
    const double there =
        convert_energy(x, EnergyUnit::kcal_per_mol, EnergyUnit::ev);
    const double back =
        convert_energy(there, EnergyUnit::ev, EnergyUnit::kcal_per_mol);
    CHECK(std::abs(back - x) <= 1e-12 * std::max(1.0, std::abs(x)));
  }
}

TEST_CASE("max_atoms does not depend on molecule order") {
  testing::TestRng rng(11);
  Dataset ds;
  for (int m = 0; m < 6; ++m) {
    ds.molecules.push_back(testing::random_molecule(rng, 2, 17));
  }
  ds.properties = MatrixRM::Zero(6, 1);
  ds.property_names = {"energy"};
  ds.property_units = {EnergyUnit::kcal_per_mol};

  const int before = ds.max_atoms();
  std::reverse(ds.molecules.begin(), ds.molecules.end());
  CHECK(ds.max_atoms() == before);
}
