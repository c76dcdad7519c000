// include/restobench/dsp.h

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
#include <cstddef>
#include <string>
#include <vector>

#include "restobench/audio.h"

namespace restobench {

enum class Window { kRect, kHann };

Window window_from_string(const std::string& name);

// Complex STFT coefficients, frames x bins with bins = frame_len/2 + 1.
struct Spectrogram {
  std::vector<std::complex<double>> coef;  // frame-major
  size_t num_frames = 0;
  size_t frame_len = 0;
  size_t hop = 0;
  Window window = Window::kHann;
  int sample_rate = 0;

  size_t bins() const { return frame_len / 2 + 1; }
  std::complex<double>& at(size_t frame, size_t bin) {
    return coef[frame * bins() + bin];
  }
  const std::complex<double>& at(size_t frame, size_t bin) const {
    return coef[frame * bins() + bin];
  }
};

// Linear-phase (type I) FIR: odd tap count, taps symmetric about the center.
struct FirFilter {
  std::vector<double> taps;
  size_t group_delay() const { return (taps.size() - 1) / 2; }
};

// Analysis STFT. Frame count = floor((len - frame_len)/hop) + 1; the tail
// shorter than one frame is dropped (no implicit zero padding).
Spectrogram stft(const AudioBuffer& buf, size_t frame_len, size_t hop,
                 Window window);

// Weighted overlap-add synthesis with window-square normalization.
// Output length = (frames - 1)*hop + frame_len. Requires a window/hop pair
// whose squared-window overlap never vanishes in the interior (Hann at 50%
// overlap, rectangular at hop == frame_len).
AudioBuffer istft(const Spectrogram& spec);

// Windowed-sinc polyphase resampler. Identity (bit-exact copy) when the
// rates already match. Output length = round(len * target / source).
AudioBuffer resample(const AudioBuffer& buf, int target_rate);

// Windowed-sinc low-pass, 511 taps, Blackman window, unity DC gain.
FirFilter design_lowpass(double cutoff_hz, int sample_rate);

// Zero-phase application: convolves and shifts by the group delay so the
// output stays aligned with the input. Same length; zero-padded edges.
AudioBuffer apply_fir(const AudioBuffer& buf, const FirFilter& filt);

// 20*log10(RMS) over all samples. All-zero input returns the -120 dB floor.
double level_db(const AudioBuffer& buf);

constexpr double kSilenceFloorDb = -120.0;

}  // namespace restobench
