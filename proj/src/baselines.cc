// src/baselines.cc

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

#include "restobench/baselines.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "restobench/dsp.h"

namespace restobench {

namespace {

size_t stft_frame_len(int sample_rate) {
  return static_cast<size_t>(std::llround(0.032 * sample_rate));
}

// Zero-pads by one frame on each side so every input sample is fully covered
// by the Hann overlap, runs fn on the spectrogram, and trims back.
template <typename Fn>
AudioBuffer masked_resynthesis(const AudioBuffer& x, Fn&& make_spec) {
  const size_t frame = stft_frame_len(x.sample_rate);
  const size_t hop = frame / 2;

  AudioBuffer padded;
  padded.sample_rate = x.sample_rate;
  padded.samples.assign(x.size() + 2 * frame, 0.0f);
  std::copy(x.samples.begin(), x.samples.end(), padded.samples.begin() + frame);

  Spectrogram spec = make_spec(padded, frame, hop);
  AudioBuffer synth = istft(spec);

  AudioBuffer out;
  out.sample_rate = x.sample_rate;
  out.samples.assign(x.size(), 0.0f);
  const size_t avail = synth.size() > frame ? synth.size() - frame : 0;
  const size_t n = std::min(x.size(), avail);
  std::copy(synth.samples.begin() + frame, synth.samples.begin() + frame + n,
            out.samples.begin());
  return out;
}

}  // namespace

AudioBuffer passthrough(const AudioBuffer& x) { return x; }

AudioBuffer oracle_mask(const AudioBuffer& x, const AudioBuffer& clean) {
  if (x.sample_rate != clean.sample_rate)
    throw std::runtime_error("oracle_mask: sample rate mismatch");
  if (x.size() != clean.size())
    throw std::runtime_error("oracle_mask: length mismatch");

  constexpr double kEps = 1e-8;
  return masked_resynthesis(
      x, [&](const AudioBuffer& padded, size_t frame, size_t hop) {
        AudioBuffer padded_clean;
        padded_clean.sample_rate = clean.sample_rate;
        padded_clean.samples.assign(padded.size(), 0.0f);
        std::copy(clean.samples.begin(), clean.samples.end(),
                  padded_clean.samples.begin() + frame);

        Spectrogram sx = stft(padded, frame, hop, Window::kHann);
        Spectrogram sc = stft(padded_clean, frame, hop, Window::kHann);
        for (size_t i = 0; i < sx.coef.size(); ++i) {
          const double mask = std::min(
              1.0, std::abs(sc.coef[i]) / (std::abs(sx.coef[i]) + kEps));
          sx.coef[i] *= mask;
        }
        return sx;
      });
}

AudioBuffer declip_interpolate(const AudioBuffer& x, float threshold) {
  if (!(threshold > 0.0f))
    throw std::runtime_error("declip threshold must be positive");
  const float limit = threshold * (1.0f - 1e-6f);
  const int64_t n = static_cast<int64_t>(x.size());

  std::vector<bool> clipped(x.size());
  bool any_anchor = false;
  for (int64_t i = 0; i < n; ++i) {
    clipped[static_cast<size_t>(i)] = std::fabs(x.samples[static_cast<size_t>(i)]) >= limit;
    any_anchor |= !clipped[static_cast<size_t>(i)];
  }
  if (!any_anchor) throw std::runtime_error("no anchor samples");

  AudioBuffer out = x;
  int64_t i = 0;
  while (i < n) {
    if (!clipped[static_cast<size_t>(i)]) {
      ++i;
      continue;
    }
    int64_t run_end = i;
    while (run_end + 1 < n && clipped[static_cast<size_t>(run_end + 1)])
      ++run_end;

    const bool has_left = i >= 2;
    const bool has_right = run_end + 2 < n;
    if (has_left && has_right) {
      // Hermite segment from the last good sample before the run to the
      // first good sample after it; slopes from one-sided differences.
      const double x0 = static_cast<double>(i - 1);
      const double x1 = static_cast<double>(run_end + 1);
      const double p0 = x.samples[static_cast<size_t>(i - 1)];
      const double p1 = x.samples[static_cast<size_t>(run_end + 1)];
      const double m0 = p0 - x.samples[static_cast<size_t>(i - 2)];
      const double m1 = x.samples[static_cast<size_t>(run_end + 2)] - p1;
      const double span = x1 - x0;
      for (int64_t k = i; k <= run_end; ++k) {
        const double t = (static_cast<double>(k) - x0) / span;
        const double t2 = t * t, t3 = t2 * t;
        const double h00 = 2 * t3 - 3 * t2 + 1;
        const double h10 = t3 - 2 * t2 + t;
        const double h01 = -2 * t3 + 3 * t2;
        const double h11 = t3 - t2;
        out.samples[static_cast<size_t>(k)] = static_cast<float>(
            h00 * p0 + h10 * span * m0 + h01 * p1 + h11 * span * m1);
      }
    } else {
      // run touches an edge (or lacks two-sample anchors): hold at threshold
      for (int64_t k = i; k <= run_end; ++k) {
        const float s = x.samples[static_cast<size_t>(k)] < 0.0f ? -1.0f : 1.0f;
        out.samples[static_cast<size_t>(k)] = s * threshold;
      }
    }
    i = run_end + 1;
  }
  return out;
}

AudioBuffer spectral_subtract(const AudioBuffer& x,
                              size_t noise_floor_estimate_frames) {
  constexpr double kAlpha = 1.0;
  constexpr double kBeta = 0.02;
  const size_t frame = stft_frame_len(x.sample_rate);
  const size_t window_needed = frame + (frame / 2) * noise_floor_estimate_frames;
  if (x.size() < window_needed)
    throw std::runtime_error(
        "spectral_subtract: buffer shorter than estimate window");
  if (peak_abs(x) == 0.0f) return x;  // silence in, silence out

  return masked_resynthesis(
      x, [&](const AudioBuffer& padded, size_t flen, size_t hop) {
        Spectrogram spec = stft(padded, flen, hop, Window::kHann);
        const size_t bins = spec.bins();

        // frames ranked by energy; mean magnitude of the quietest ones
        std::vector<double> energy(spec.num_frames, 0.0);
        for (size_t m = 0; m < spec.num_frames; ++m)
          for (size_t k = 0; k < bins; ++k)
            energy[m] += std::norm(spec.at(m, k));
        std::vector<size_t> order(spec.num_frames);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t a, size_t b) { return energy[a] < energy[b]; });
        const size_t take = std::min<size_t>(noise_floor_estimate_frames,
                                             spec.num_frames);
        std::vector<double> noise_mag(bins, 0.0);
        for (size_t i = 0; i < take; ++i)
          for (size_t k = 0; k < bins; ++k)
            noise_mag[k] += std::abs(spec.at(order[i], k));
        for (auto& v : noise_mag) v /= static_cast<double>(take);

        for (size_t m = 0; m < spec.num_frames; ++m) {
          for (size_t k = 0; k < bins; ++k) {
            auto& c = spec.at(m, k);
            const double mag = std::abs(c);
            const double target =
                std::max(mag - kAlpha * noise_mag[k], kBeta * mag);
            c *= mag > 0.0 ? target / mag : 0.0;
          }
        }
        return spec;
      });
}

}  // namespace restobench
