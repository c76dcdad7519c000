// include/restobench/synth.h

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

#include <cstdint>

#include "restobench/audio.h"

namespace restobench {

// Deterministic synthetic signals for the self-test and for harness runs
// that must not depend on external data.

AudioBuffer synth_sine(double freq_hz, double seconds, int sample_rate,
                       double amplitude = 1.0, double phase = 0.0);

// Gaussian white noise, RMS roughly = amplitude.
AudioBuffer synth_white_noise(double seconds, int sample_rate, uint64_t seed,
                              double amplitude = 0.3);

// Speech-like harmonic syllable train: voiced segments with randomized pitch
// and spectral envelope, separated by short gaps, peak-normalized to 0.5.
// Wideband enough to exercise every one-third octave band used by the
// intelligibility metric.
AudioBuffer synth_vowel_sequence(double seconds, int sample_rate,
                                 uint64_t seed);

}  // namespace restobench
