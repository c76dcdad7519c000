// src/synth.cc

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

#include "restobench/synth.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "restobench/rng.h"

namespace restobench {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

AudioBuffer synth_sine(double freq_hz, double seconds, int sample_rate,
                       double amplitude, double phase) {
  AudioBuffer buf;
  buf.sample_rate = sample_rate;
  const size_t n = static_cast<size_t>(seconds * sample_rate);
  buf.samples.resize(n);
  const double w = 2.0 * kPi * freq_hz / sample_rate;
  for (size_t i = 0; i < n; ++i)
    buf.samples[i] = static_cast<float>(
        amplitude * std::sin(w * static_cast<double>(i) + phase));
  return buf;
}

AudioBuffer synth_white_noise(double seconds, int sample_rate, uint64_t seed,
                              double amplitude) {
  AudioBuffer buf;
  buf.sample_rate = sample_rate;
  const size_t n = static_cast<size_t>(seconds * sample_rate);
  buf.samples.resize(n);
  Rng rng(seed);
  for (size_t i = 0; i < n; ++i)
    buf.samples[i] = static_cast<float>(amplitude * rng.gaussian());
  return buf;
}

AudioBuffer synth_vowel_sequence(double seconds, int sample_rate,
                                 uint64_t seed) {
  AudioBuffer buf;
  buf.sample_rate = sample_rate;
  const size_t total = static_cast<size_t>(seconds * sample_rate);
  buf.samples.assign(total, 0.0f);

  Rng rng(seed);
  const double top_hz = std::min(4600.0, 0.45 * sample_rate);
  size_t pos = 0;
  while (pos < total) {
    const double voiced_ms = rng.uniform(160.0, 260.0);
    const double gap_ms = rng.uniform(40.0, 90.0);
    const size_t voiced = std::min(
        total - pos, static_cast<size_t>(voiced_ms * 1e-3 * sample_rate));
    const double f0 = rng.uniform(105.0, 215.0);
    // two formant-like resonances shape the harmonic amplitudes
    const double f1 = rng.uniform(300.0, 850.0);
    const double f2 = rng.uniform(1000.0, 2600.0);
    const double vibrato_hz = rng.uniform(4.0, 7.0);
    const double vibrato_depth = rng.uniform(0.002, 0.01);

    const int harmonics = static_cast<int>(top_hz / f0);
    std::vector<double> amp(static_cast<size_t>(harmonics) + 1, 0.0);
    std::vector<double> phase(static_cast<size_t>(harmonics) + 1, 0.0);
    for (int k = 1; k <= harmonics; ++k) {
      const double f = k * f0;
      const double res1 = 1.0 / (1.0 + std::pow((f - f1) / 220.0, 2.0));
      const double res2 = 0.7 / (1.0 + std::pow((f - f2) / 350.0, 2.0));
      amp[static_cast<size_t>(k)] = (0.12 + res1 + res2) / std::sqrt(k);
      phase[static_cast<size_t>(k)] = rng.uniform(0.0, 2.0 * kPi);
    }

    for (size_t i = 0; i < voiced; ++i) {
      const double t = static_cast<double>(i) / sample_rate;
      const double ramp_len = 0.02 * sample_rate;
      const double env =
          std::min({1.0, static_cast<double>(i) / ramp_len,
                    static_cast<double>(voiced - i) / ramp_len});
      const double f0_t =
          f0 * (1.0 + vibrato_depth * std::sin(2.0 * kPi * vibrato_hz * t));
      double v = 0.0;
      for (int k = 1; k <= harmonics; ++k)
        v += amp[static_cast<size_t>(k)] *
             std::sin(2.0 * kPi * k * f0_t * t + phase[static_cast<size_t>(k)]);
      buf.samples[pos + i] = static_cast<float>(env * v);
    }
    pos += voiced;
    pos += std::min(total - pos,
                    static_cast<size_t>(gap_ms * 1e-3 * sample_rate));
  }

  const float peak = peak_abs(buf);
  if (peak > 0.0f) {
    const float scale = 0.5f / peak;
    for (auto& s : buf.samples) s *= scale;
  }
  return buf;
}

}  // namespace restobench
