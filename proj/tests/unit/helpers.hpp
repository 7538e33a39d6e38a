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

#ifndef MOLSIG_TESTS_HELPERS_HPP
#define MOLSIG_TESTS_HELPERS_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "molsig/dataset.hpp"
#include "molsig/split.hpp"

namespace molsig::testing {

class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * rng_.next_double();
  }

  // Inclusive bounds.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(rng_.next() %
                                 static_cast<std::uint64_t>(hi - lo + 1));
  }

  SplitMix64& raw() { return rng_; }

 private:
  SplitMix64 rng_;
};

// Random organic-ish molecule (H, C, N, O, S) with every pair separated by
// at least 1.2 Bohr.
inline Molecule random_molecule(TestRng& rng, int min_atoms, int max_atoms) {
  static constexpr int kSpecies[] = {1, 6, 7, 8, 16};
  const int n = rng.uniform_int(min_atoms, max_atoms);
  const double box = 3.5 * std::cbrt(static_cast<double>(n));

  Molecule mol;
  while (mol.atom_count() < n) {
    Vec3 pos = {rng.uniform(0.0, box), rng.uniform(0.0, box),
                rng.uniform(0.0, box)};
    bool accepted = true;
    for (const Vec3& other : mol.positions) {
      const double dx = pos[0] - other[0];
      const double dy = pos[1] - other[1];
      const double dz = pos[2] - other[2];
      if (dx * dx + dy * dy + dz * dz < 1.2 * 1.2) {
        accepted = false;
        break;
      }
    }
    if (accepted) {
      mol.atomic_numbers.push_back(kSpecies[rng.uniform_int(0, 4)]);
      mol.positions.push_back(pos);
    }
  }
  return mol;
}

// Uniform random rotation from a normalized quaternion.
inline Eigen::Matrix3d random_rotation(TestRng& rng) {
  Eigen::Vector4d q;
  for (int i = 0; i < 4; ++i) {
    q(i) = rng.uniform(-1.0, 1.0);
  }
  q.normalize();
  const double w = q(0), x = q(1), y = q(2), z = q(3);
  Eigen::Matrix3d r;
  r << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
      2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
      2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return r;
}

inline Molecule transformed(const Molecule& mol, const Eigen::Matrix3d& rot,
                            const Eigen::Vector3d& shift) {
  Molecule out = mol;
  for (Vec3& p : out.positions) {
    const Eigen::Vector3d v =
        rot * Eigen::Vector3d(p[0], p[1], p[2]) + shift;
    p = {v(0), v(1), v(2)};
  }
  return out;
}

// Literal evaluation of the transform's defining sum; the oracle every fast
// path is checked against. The k*l product is reduced mod L before the
// angle so no precision is lost at large indices.
inline std::vector<std::complex<double>> direct_dft(
    std::span<const double> signal) {
  const std::size_t length = signal.size();
  std::vector<std::complex<double>> out(length);
  for (std::size_t k = 0; k < length; ++k) {
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t l = 0; l < length; ++l) {
      const std::uint64_t kl =
          (static_cast<std::uint64_t>(k) * l) % length;
      const double angle = -2.0 * std::numbers::pi *
                           static_cast<double>(kl) /
                           static_cast<double>(length);
      sum += signal[l] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    out[k] = sum;
  }
  return out;
}

// Dense inverse by Gauss-Jordan elimination with partial pivoting; written
// without any factorization library so it stays independent of the solver
// it is used to check.
inline Eigen::MatrixXd gauss_jordan_inverse(Eigen::MatrixXd a) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd inv = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    for (Eigen::Index row = col + 1; row < n; ++row) {
      if (std::abs(a(row, col)) > std::abs(a(pivot, col))) {
        pivot = row;
      }
    }
    a.row(col).swap(a.row(pivot));
    inv.row(col).swap(inv.row(pivot));
    const double diag = a(col, col);
    a.row(col) /= diag;
    inv.row(col) /= diag;
    for (Eigen::Index row = 0; row < n; ++row) {
      if (row != col && a(row, col) != 0.0) {
        const double factor = a(row, col);
        a.row(row) -= factor * a.row(col);
        inv.row(row) -= factor * inv.row(col);
      }
    }
  }
  return inv;
}

inline std::vector<double> random_signal(TestRng& rng, int length, double lo,
                                         double hi) {
  std::vector<double> out(static_cast<std::size_t>(length));
  for (double& v : out) {
    v = rng.uniform(lo, hi);
  }
  return out;
}

}  // namespace molsig::testing

#endif  // MOLSIG_TESTS_HELPERS_HPP
