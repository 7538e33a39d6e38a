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

#ifndef MOLSIG_SPECTRAL_HPP
#define MOLSIG_SPECTRAL_HPP

#include <complex>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "molsig/descriptor.hpp"

namespace molsig {

/// Length-L complex spectrum of a length-L signal.
struct Spectrum {
  std::vector<std::complex<double>> values;

  int length() const { return static_cast<int>(values.size()); }
};

enum class WindowKind { hann, rectangular };

std::string to_string(WindowKind kind);
WindowKind window_kind_from_string(const std::string& name);

/// Squared-magnitude short-time Fourier frames: T rows of B = W/2 + 1 bins.
struct Spectrogram {
  MatrixRM frames;
  int window_length = 0;
  int hop = 0;
  WindowKind window = WindowKind::hann;

  int frame_count() const { return static_cast<int>(frames.rows()); }
  int bin_count() const { return static_cast<int>(frames.cols()); }
};

/// Unnormalized forward DFT: Y[k] = sum_l y[l] exp(-j 2 pi k l / L).
Spectrum dft(std::span<const double> signal);

/// Inverse with 1/L normalization. The reconstructed signal must be real:
/// any imaginary residue above 1e-9 raises DataError.
std::vector<double> idft(const Spectrum& spec);

/// Entrywise modulus |Y[k]|.
std::vector<double> magnitude(const Spectrum& spec);

/// Sliding-window DFT; frame t covers samples [t*hop, t*hop + window_length),
/// windowed, transformed, truncated to bins 0..W/2 and squared in magnitude.
Spectrogram spectrogram(std::span<const double> signal, int window_length,
                        int hop, WindowKind kind);

/// Row-wise DFT of a raw feature matrix. dft_complex keeps interleaved
/// (re, im) rows of length 2L; dft_magnitude keeps |Y[k]| rows of length L.
FeatureMatrix transform_features(const FeatureMatrix& fm, FeatureDomain mode);

void write_spectrogram_csv(const Spectrogram& sg, std::ostream& out,
                           const std::vector<std::string>& comment_lines = {});

/// Binary PGM (P5, 16-bit, big-endian samples) scaled by the maximum value.
void write_spectrogram_pgm(const Spectrogram& sg, std::ostream& out,
                           const std::string& comment = {});

}  // namespace molsig

#endif  // MOLSIG_SPECTRAL_HPP
