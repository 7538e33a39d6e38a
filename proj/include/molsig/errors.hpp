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

#ifndef MOLSIG_ERRORS_HPP
#define MOLSIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace molsig {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed text input (XYZ frames, CSV lines, model files). Messages carry
/// the frame index and/or line number of the offending record.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Degenerate molecular geometry (coincident atoms).
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Feature-domain or shape mismatch between operands, including attempts to
/// transform an already-spectral feature matrix.
class DomainMismatchError : public Error {
 public:
  using Error::Error;
};

/// Numeric data violating a contract: non-finite values, a non-negligible
/// imaginary residue in an inverse transform, zero-variance correlation input.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Linear solve failure: non-positive-definite system or a solution whose
/// residual exceeds the fit contract.
class SolveError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration values (grids, fractions, window parameters).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// File system and serialization format failures (unreadable file,
/// unsupported format version, inconsistent array lengths).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace molsig

#endif  // MOLSIG_ERRORS_HPP
