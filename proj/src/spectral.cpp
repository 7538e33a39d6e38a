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

#include "molsig/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "molsig/errors.hpp"
#include "molsig/fft.hpp"
#include "molsig/io.hpp"

namespace molsig {

namespace {

constexpr double kImagResidueTolerance = 1e-9;

std::vector<double> make_window(int length, WindowKind kind) {
  std::vector<double> w(static_cast<std::size_t>(length), 1.0);
  if (kind == WindowKind::hann) {
    for (int k = 0; k < length; ++k) {
      w[static_cast<std::size_t>(k)] =
          0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * k / length);
    }
  }
  return w;
}

}  // namespace

std::string to_string(WindowKind kind) {
  return kind == WindowKind::hann ? "hann" : "rectangular";
}

WindowKind window_kind_from_string(const std::string& name) {
  if (name == "hann" || name == "hanning") {
    return WindowKind::hann;
  }
  if (name == "rectangular" || name == "rect") {
    return WindowKind::rectangular;
  }
  throw ConfigError("unknown window kind '" + name + "'");
}

Spectrum dft(std::span<const double> signal) {
  if (signal.empty()) {
    throw DataError("cannot transform an empty signal");
  }
  std::vector<std::complex<double>> data(signal.size());
  for (std::size_t i = 0; i < signal.size(); ++i) {
    if (!std::isfinite(signal[i])) {
      throw DataError("non-finite signal entry at index " + std::to_string(i));
    }
    data[i] = std::complex<double>(signal[i], 0.0);
  }
  return Spectrum{fft::forward(std::move(data))};
}

std::vector<double> idft(const Spectrum& spec) {
  if (spec.values.empty()) {
    throw DataError("cannot invert an empty spectrum");
  }
  const std::vector<std::complex<double>> time = fft::inverse(spec.values);
  std::vector<double> out(time.size());
  for (std::size_t i = 0; i < time.size(); ++i) {
    if (std::abs(time[i].imag()) > kImagResidueTolerance) {
      throw DataError("inverse transform has imaginary residue " +
                      format_double(time[i].imag()) + " at sample " +
                      std::to_string(i) +
                      "; the spectrum is not that of a real signal");
    }
    out[i] = time[i].real();
  }
  return out;
}

std::vector<double> magnitude(const Spectrum& spec) {
  std::vector<double> out(spec.values.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::abs(spec.values[i]);
  }
  return out;
}

Spectrogram spectrogram(std::span<const double> signal, int window_length,
                        int hop, WindowKind kind) {
  const int length = static_cast<int>(signal.size());
  if (window_length < 2) {
    throw ConfigError("window length must be >= 2");
  }
  if (hop < 1 || hop > window_length) {
    throw ConfigError("hop must be in [1, window_length]");
  }
  if (window_length > length) {
    throw ConfigError("window length " + std::to_string(window_length) +
                      " exceeds signal length " + std::to_string(length) +
                      "; zero-pad the signal or choose a smaller window");
  }

  const int frames = (length - window_length) / hop + 1;
  const int bins = window_length / 2 + 1;
  const std::vector<double> window = make_window(window_length, kind);

  Spectrogram sg;
  sg.window_length = window_length;
  sg.hop = hop;
  sg.window = kind;
  sg.frames.resize(frames, bins);

  std::vector<double> frame(static_cast<std::size_t>(window_length));
  for (int t = 0; t < frames; ++t) {
    const int offset = t * hop;
    for (int k = 0; k < window_length; ++k) {
      frame[static_cast<std::size_t>(k)] =
          signal[static_cast<std::size_t>(offset + k)] *
          window[static_cast<std::size_t>(k)];
    }
    const Spectrum spec = dft(frame);
    for (int b = 0; b < bins; ++b) {
      sg.frames(t, b) = std::norm(spec.values[static_cast<std::size_t>(b)]);
    }
  }
  return sg;
}

FeatureMatrix transform_features(const FeatureMatrix& fm, FeatureDomain mode) {
  if (fm.domain != FeatureDomain::raw) {
    throw DomainMismatchError("input is already in the " +
                              to_string(fm.domain) +
                              " domain; transforms start from raw features");
  }
  if (mode == FeatureDomain::raw) {
    throw ConfigError("transform mode must be dft_complex or dft_magnitude");
  }

  const int rows = fm.rows();
  const int length = fm.cols();
  FeatureMatrix out;
  out.domain = mode;
  out.labels = fm.labels;
  out.values.resize(rows,
                    mode == FeatureDomain::dft_complex ? 2 * length : length);

#pragma omp parallel for schedule(dynamic, 16)
  for (int m = 0; m < rows; ++m) {
    std::vector<double> row(static_cast<std::size_t>(length));
    for (int l = 0; l < length; ++l) {
      row[static_cast<std::size_t>(l)] = fm.values(m, l);
    }
    const Spectrum spec = dft(row);
    if (mode == FeatureDomain::dft_complex) {
      for (int k = 0; k < length; ++k) {
        out.values(m, 2 * k) = spec.values[static_cast<std::size_t>(k)].real();
        out.values(m, 2 * k + 1) =
            spec.values[static_cast<std::size_t>(k)].imag();
      }
    } else {
      for (int k = 0; k < length; ++k) {
        out.values(m, k) = std::abs(spec.values[static_cast<std::size_t>(k)]);
      }
    }
  }
  return out;
}

void write_spectrogram_csv(const Spectrogram& sg, std::ostream& out,
                           const std::vector<std::string>& comment_lines) {
  for (const std::string& c : comment_lines) {
    out << "# " << c << '\n';
  }
  for (int t = 0; t < sg.frame_count(); ++t) {
    for (int b = 0; b < sg.bin_count(); ++b) {
      if (b > 0) {
        out << ',';
      }
      out << format_double(sg.frames(t, b));
    }
    out << '\n';
  }
}

void write_spectrogram_pgm(const Spectrogram& sg, std::ostream& out,
                           const std::string& comment) {
  const double max_value = sg.frames.size() > 0 ? sg.frames.maxCoeff() : 0.0;
  out << "P5\n";
  if (!comment.empty()) {
    out << "# " << comment << '\n';
  }
  out << sg.bin_count() << ' ' << sg.frame_count() << "\n65535\n";
  for (int t = 0; t < sg.frame_count(); ++t) {
    for (int b = 0; b < sg.bin_count(); ++b) {
      const double scaled =
          max_value > 0.0 ? sg.frames(t, b) / max_value * 65535.0 : 0.0;
      const auto sample = static_cast<unsigned>(std::lround(scaled));
      // 16-bit samples are big-endian per the netpbm convention.
      out.put(static_cast<char>((sample >> 8) & 0xFF));
      out.put(static_cast<char>(sample & 0xFF));
    }
  }
}

}  // namespace molsig
