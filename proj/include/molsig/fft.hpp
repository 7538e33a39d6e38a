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

#ifndef MOLSIG_FFT_HPP
#define MOLSIG_FFT_HPP

#include <complex>
#include <vector>

namespace molsig::fft {

/// Unnormalized forward transform of arbitrary length (iterative radix-2 for
/// powers of two, Bluestein's chirp-z otherwise).
std::vector<std::complex<double>> forward(
    std::vector<std::complex<double>> data);

/// Inverse transform with 1/N normalization.
std::vector<std::complex<double>> inverse(
    std::vector<std::complex<double>> data);

}  // namespace molsig::fft

#endif  // MOLSIG_FFT_HPP
