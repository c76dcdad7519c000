// include/restobench/audio.h

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
#include <string>
#include <vector>

namespace restobench {

// Mono sampled signal. Samples are 32-bit float regardless of the on-disk
// bit depth; nominal range [-1, 1] but values outside are legal (degraded
// mixtures are not renormalized).
struct AudioBuffer {
  std::vector<float> samples;
  int sample_rate = 0;

  size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
};

// RMS over all samples (computed in double).
double rms(const AudioBuffer& buf);

// Largest absolute sample value.
float peak_abs(const AudioBuffer& buf);

// True if every sample is finite.
bool all_finite(const AudioBuffer& buf);

// Reads a mono RIFF WAV file. Accepts PCM 16-bit and IEEE float 32-bit;
// rejects multi-channel and other encodings with an explicit error.
AudioBuffer read_wav(const std::string& path);

// Writes a mono IEEE float 32-bit WAV file. Sample rate preserved verbatim.
void write_wav(const std::string& path, const AudioBuffer& buf);

}  // namespace restobench
