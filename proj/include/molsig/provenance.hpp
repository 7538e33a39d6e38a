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

#ifndef MOLSIG_PROVENANCE_HPP
#define MOLSIG_PROVENANCE_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace molsig {

inline constexpr std::string_view kToolName = "molsig";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// FNV-1a 64-bit hash of a byte string.
std::uint64_t fnv1a64(std::string_view bytes);

/// "fnv1a64:<16 hex digits>" of a file's contents; throws IoError when the
/// file cannot be read.
std::string file_content_hash(const std::string& path);

}  // namespace molsig

#endif  // MOLSIG_PROVENANCE_HPP
