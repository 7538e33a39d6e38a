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

#include "molsig/fft.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

namespace molsig::fft {

namespace {

using cdouble = std::complex<double>;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) {
    p <<= 1;
  }
  return p;
}

// Iterative radix-2 Cooley-Tukey; n must be a power of two. Twiddles are
// tabulated with one polar() per entry rather than accumulated products to
// keep per-bin error near machine precision.
void fft_radix2(std::vector<cdouble>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n < 2) {
    return;
  }

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) {
      j ^= bit;
    }
    j ^= bit;
    if (i < j) {
      std::swap(a[i], a[j]);
    }
  }

  const double sign = inverse ? 1.0 : -1.0;
  std::vector<cdouble> twiddle(n / 2);
  for (std::size_t j = 0; j < n / 2; ++j) {
    const double angle = sign * 2.0 * std::numbers::pi *
                         static_cast<double>(j) / static_cast<double>(n);
    twiddle[j] = std::polar(1.0, angle);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cdouble w = twiddle[k * stride];
        const cdouble u = a[start + k];
        const cdouble v = a[start + k + len / 2] * w;
        a[start + k] = u + v;
        a[start + k + len / 2] = u - v;
      }
    }
  }
}

// exp(sign * i * pi * (idx^2 mod 2n) / n); the quadratic index is reduced
// mod 2n first so the angle stays small and accurate.
cdouble chirp(std::size_t idx, std::size_t n, double sign) {
  const std::uint64_t reduced =
      (static_cast<std::uint64_t>(idx) * idx) % (2 * static_cast<std::uint64_t>(n));
  const double angle = sign * std::numbers::pi * static_cast<double>(reduced) /
                       static_cast<double>(n);
  return std::polar(1.0, angle);
}

// Bluestein's algorithm: an arbitrary-length DFT as a linear convolution
// carried out by power-of-two FFTs.
void fft_bluestein(std::vector<cdouble>& a, bool inverse) {
  const std::size_t n = a.size();
  const double sign = inverse ? 1.0 : -1.0;
  const std::size_t m = next_power_of_two(2 * n - 1);

  std::vector<cdouble> premultiplied(m, cdouble{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    premultiplied[i] = a[i] * chirp(i, n, sign);
  }

  std::vector<cdouble> kernel(m, cdouble{0.0, 0.0});
  kernel[0] = chirp(0, n, -sign);
  for (std::size_t i = 1; i < n; ++i) {
    const cdouble c = chirp(i, n, -sign);
    kernel[i] = c;
    kernel[m - i] = c;
  }

  fft_radix2(premultiplied, false);
  fft_radix2(kernel, false);
  for (std::size_t i = 0; i < m; ++i) {
    premultiplied[i] *= kernel[i];
  }
  fft_radix2(premultiplied, true);
  const double scale = 1.0 / static_cast<double>(m);

  for (std::size_t k = 0; k < n; ++k) {
    a[k] = premultiplied[k] * scale * chirp(k, n, sign);
  }
}

void transform(std::vector<cdouble>& a, bool inverse) {
  if (a.size() < 2) {
    return;
  }
  if (is_power_of_two(a.size())) {
    fft_radix2(a, inverse);
  } else {
    fft_bluestein(a, inverse);
  }
}

}  // namespace

std::vector<cdouble> forward(std::vector<cdouble> data) {
  transform(data, false);
  return data;
}

std::vector<cdouble> inverse(std::vector<cdouble> data) {
  transform(data, true);
  const double scale =
      data.empty() ? 1.0 : 1.0 / static_cast<double>(data.size());
  for (cdouble& value : data) {
    value *= scale;
  }
  return data;
}

}  // namespace molsig::fft
