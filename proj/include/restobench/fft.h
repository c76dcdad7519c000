// include/restobench/fft.h

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

#pragma once

#include <complex>
#include <vector>

namespace restobench {

// In-place complex FFT. Power-of-two sizes use iterative radix-2; other sizes
// go through Bluestein's chirp-z algorithm. Inverse includes the 1/N factor.
void fft(std::vector<std::complex<double>>* data, bool inverse);

// Forward FFT of a real signal zero-padded (or truncated) to fft_size.
// Returns the full fft_size-point complex spectrum.
std::vector<std::complex<double>> fft_real(const float* x, size_t n,
                                           size_t fft_size);

inline bool is_power_of_two(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace restobench
