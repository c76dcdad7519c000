// src/fft.cc

// Copyright 2026  Restobench Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "restobench/fft.h"

#include <cmath>
#include <stdexcept>

namespace restobench {

namespace {

constexpr double kPi = 3.14159265358979323846;

void fft_radix2(std::vector<std::complex<double>>& a, bool inverse) {
  const size_t n = a.size();
  // bit-reversal permutation
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * kPi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

// Bluestein: express an N-point DFT as a circular convolution of length
// m = next power of two >= 2N - 1, carried out with radix-2 FFTs.
void fft_bluestein(std::vector<std::complex<double>>& a, bool inverse) {
  const size_t n = a.size();
  size_t m = 1;
  while (m < 2 * n - 1) m <<= 1;

  const double sign = inverse ? 1.0 : -1.0;
  std::vector<std::complex<double>> chirp(n);
  for (size_t k = 0; k < n; ++k) {
    // k^2 mod 2n keeps the angle argument small for large k
    uint64_t k2 = (static_cast<uint64_t>(k) * k) % (2 * n);
    double ang = sign * kPi * static_cast<double>(k2) / static_cast<double>(n);
    chirp[k] = {std::cos(ang), std::sin(ang)};
  }

  std::vector<std::complex<double>> u(m, {0.0, 0.0}), v(m, {0.0, 0.0});
  for (size_t k = 0; k < n; ++k) u[k] = a[k] * chirp[k];
  for (size_t k = 0; k < n; ++k) {
    v[k] = std::conj(chirp[k]);
    if (k != 0) v[m - k] = std::conj(chirp[k]);
  }
  fft_radix2(u, false);
  fft_radix2(v, false);
  for (size_t k = 0; k < m; ++k) u[k] *= v[k];
  fft_radix2(u, true);
  const double inv_m = 1.0 / static_cast<double>(m);
  for (size_t k = 0; k < n; ++k) a[k] = u[k] * inv_m * chirp[k];
}

}  // namespace

void fft(std::vector<std::complex<double>>* data, bool inverse) {
  if (data == nullptr || data->empty())
    throw std::runtime_error("fft: empty input");
  auto& a = *data;
  const size_t n = a.size();
  if (n == 1) return;
  if (is_power_of_two(n)) {
    fft_radix2(a, inverse);
  } else {
    fft_bluestein(a, inverse);
  }
  if (inverse) {
    const double inv_n = 1.0 / static_cast<double>(n);
    for (auto& c : a) c *= inv_n;
  }
}

std::vector<std::complex<double>> fft_real(const float* x, size_t n,
                                           size_t fft_size) {
  std::vector<std::complex<double>> a(fft_size, {0.0, 0.0});
  const size_t copy = n < fft_size ? n : fft_size;
  for (size_t i = 0; i < copy; ++i) a[i] = {static_cast<double>(x[i]), 0.0};
  fft(&a, false);
  return a;
}

}  // namespace restobench
