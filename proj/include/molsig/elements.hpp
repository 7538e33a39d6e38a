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

#ifndef MOLSIG_ELEMENTS_HPP
#define MOLSIG_ELEMENTS_HPP

#include <optional>
#include <string>
#include <string_view>

namespace molsig {

inline constexpr int kMaxAtomicNumber = 118;

/// Maps an element symbol (case-insensitive, e.g. "C", "cl", "HE") to its
/// atomic number. Returns nullopt for unknown symbols.
std::optional<int> atomic_number_of(std::string_view symbol);

/// Canonical symbol for atomic number z in [1, 118]; throws ConfigError
/// outside that range.
std::string element_symbol(int z);

}  // namespace molsig

#endif  // MOLSIG_ELEMENTS_HPP
