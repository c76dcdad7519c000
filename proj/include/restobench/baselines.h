// include/restobench/baselines.h

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

#include <cstddef>

#include "restobench/audio.h"

namespace restobench {

// Reference restorers with known metric orderings. None of them is meant to
// be competitive; they anchor the harness (passthrough = the "noisy" row,
// oracle_mask = a masking upper bound that can only suppress).

// Identity, bit-exact.
AudioBuffer passthrough(const AudioBuffer& x);

// Clean-informed ratio mask: mask = min(1, |S| / (|X| + 1e-8)) on a
// 32 ms / 16 ms Hann STFT, resynthesized with the degraded phase. Capped at
// 1, so it never amplifies and cannot recover missing components.
AudioBuffer oracle_mask(const AudioBuffer& x, const AudioBuffer& clean);

// Replaces maximal runs of samples at or above the threshold with a cubic
// Hermite fit through the two unclipped neighbors on each side. Runs touching
// the buffer edges are held at the threshold.
AudioBuffer declip_interpolate(const AudioBuffer& x, float threshold);

// Magnitude spectral subtraction with the noise spectrum estimated as the
// mean of the lowest-energy frames: |S| = max(|X| - |N|, 0.02 |X|).
AudioBuffer spectral_subtract(const AudioBuffer& x,
                              size_t noise_floor_estimate_frames = 6);

}  // namespace restobench
