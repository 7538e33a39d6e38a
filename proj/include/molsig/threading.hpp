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

#ifndef MOLSIG_THREADING_HPP
#define MOLSIG_THREADING_HPP

namespace molsig {

/// Caps worker threads for OpenMP loops and Eigen products; n <= 0 restores
/// the hardware default. Results are bit-stable for a fixed thread count.
void set_thread_count(int n);

int thread_count();

}  // namespace molsig

#endif  // MOLSIG_THREADING_HPP
