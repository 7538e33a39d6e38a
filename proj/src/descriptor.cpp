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

#include "molsig/descriptor.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <ostream>

#include "molsig/errors.hpp"
#include "molsig/io.hpp"

namespace molsig {

namespace {

// Below this separation (Bohr) the pair term is treated as singular.
constexpr double kCoincidenceThreshold = 1e-10;

}  // namespace

std::string to_string(FeatureDomain domain) {
  switch (domain) {
    case FeatureDomain::raw:
      return "raw";
    case FeatureDomain::dft_complex:
      return "dft_complex";
    case FeatureDomain::dft_magnitude:
      return "dft_magnitude";
  }
  return "raw";
}

FeatureDomain feature_domain_from_string(const std::string& name) {
  if (name == "raw") {
    return FeatureDomain::raw;
  }
  if (name == "dft_complex" || name == "dft-complex") {
    return FeatureDomain::dft_complex;
  }
  if (name == "dft_magnitude" || name == "dft-magnitude" || name == "dft-mag") {
    return FeatureDomain::dft_magnitude;
  }
  throw ConfigError("unknown feature domain '" + name + "'");
}

CoulombMatrix coulomb_matrix(const Molecule& mol, int n_max) {
  const int n = mol.atom_count();
  if (n_max < n) {
    throw ConfigError("n_max (" + std::to_string(n_max) +
                      ") smaller than atom count (" + std::to_string(n) + ")");
  }

  CoulombMatrix cm;
  cm.n_atoms = n;
  cm.values = Eigen::MatrixXd::Zero(n_max, n_max);

  for (int i = 0; i < n; ++i) {
    const double zi = mol.atomic_numbers[static_cast<std::size_t>(i)];
    cm.values(i, i) = 0.5 * std::pow(zi, 2.4);
    for (int j = 0; j < i; ++j) {
      const auto& ri = mol.positions[static_cast<std::size_t>(i)];
      const auto& rj = mol.positions[static_cast<std::size_t>(j)];
      const double dx = ri[0] - rj[0];
      const double dy = ri[1] - rj[1];
      const double dz = ri[2] - rj[2];
      const double dist = std::sqrt(dx * dx + dy * dy + dz * dz);
      if (dist < kCoincidenceThreshold) {
        throw GeometryError(
            "atoms " + std::to_string(j) + " and " + std::to_string(i) +
            (mol.label.empty() ? std::string() : " of '" + mol.label + "'") +
            " are coincident (distance " + format_double(dist) + " Bohr)");
      }
      const double zj = mol.atomic_numbers[static_cast<std::size_t>(j)];
      const double value = zi * zj / dist;
      cm.values(i, j) = value;
      cm.values(j, i) = value;
    }
  }
  return cm;
}

CoulombMatrix sort_coulomb(const CoulombMatrix& cm) {
  const int n = cm.n_max();

  // Column norms accumulated in a fixed order so the permutation is
  // reproducible; the diagonal entry is part of its column.
  std::vector<double> norms(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      sum += cm.values(i, j) * cm.values(i, j);
    }
    norms[static_cast<std::size_t>(j)] = std::sqrt(sum);
  }

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&norms](int a, int b) {
    return norms[static_cast<std::size_t>(a)] >
           norms[static_cast<std::size_t>(b)];
  });

  CoulombMatrix sorted;
  sorted.n_atoms = cm.n_atoms;
  sorted.values.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      sorted.values(i, j) = cm.values(perm[static_cast<std::size_t>(i)],
                                      perm[static_cast<std::size_t>(j)]);
    }
  }
  return sorted;
}

CoulombSignal flatten_lower(const CoulombMatrix& cm) {
  const int n = cm.n_max();
  CoulombSignal signal;
  signal.n_atoms = cm.n_atoms;
  signal.values.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      signal.values.push_back(cm.values(i, j));
    }
  }
  return signal;
}

FeatureMatrix featurize(const Dataset& ds) {
  const int m_count = ds.size();
  if (m_count == 0) {
    throw ConfigError("cannot featurize an empty dataset");
  }
  const int n_max = ds.max_atoms();
  const Eigen::Index length =
      static_cast<Eigen::Index>(n_max) * (n_max + 1) / 2;

  FeatureMatrix fm;
  fm.domain = FeatureDomain::raw;
  fm.values.resize(m_count, length);
  fm.labels.resize(static_cast<std::size_t>(m_count));

  std::mutex error_mutex;
  int error_index = -1;
  std::string error_message;

#pragma omp parallel for schedule(dynamic, 16)
  for (int m = 0; m < m_count; ++m) {
    try {
      const Molecule& mol = ds.molecules[static_cast<std::size_t>(m)];
      const CoulombSignal signal =
          flatten_lower(sort_coulomb(coulomb_matrix(mol, n_max)));
      for (Eigen::Index l = 0; l < length; ++l) {
        fm.values(m, l) = signal.values[static_cast<std::size_t>(l)];
      }
      fm.labels[static_cast<std::size_t>(m)] = mol.label;
    } catch (const Error& e) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (error_index < 0 || m < error_index) {
        error_index = m;
        error_message = e.what();
      }
    }
  }

  if (error_index >= 0) {
    throw GeometryError("molecule " + std::to_string(error_index) + ": " +
                        error_message);
  }
  return fm;
}

void write_features_csv(const FeatureMatrix& fm, std::ostream& out,
                        bool with_labels,
                        const std::vector<std::string>& comment_lines) {
  for (const std::string& c : comment_lines) {
    out << "# " << c << '\n';
  }
  for (int m = 0; m < fm.rows(); ++m) {
    if (with_labels) {
      out << (static_cast<std::size_t>(m) < fm.labels.size()
                  ? fm.labels[static_cast<std::size_t>(m)]
                  : std::string())
          << ',';
    }
    for (int l = 0; l < fm.cols(); ++l) {
      if (l > 0) {
        out << ',';
      }
      out << format_double(fm.values(m, l));
    }
    out << '\n';
  }
}

}  // namespace molsig
