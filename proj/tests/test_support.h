// tests/test_support.h

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

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "restobench/audio.h"
#include "restobench/fft.h"
#include "restobench/synth.h"

namespace restobench::test {

// Scratch directory under the system temp root, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    dir_ = std::filesystem::temp_directory_path() /
           ("restobench-" + tag + "-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(dir_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  std::string path() const { return dir_.string(); }
  std::string sub(const std::string& name) const {
    const auto p = dir_ / name;
    std::filesystem::create_directories(p.parent_path());
    return p.string();
  }

 private:
  std::filesystem::path dir_;
};

// Frequency (Hz) of the largest FFT magnitude over the whole buffer.
inline double dominant_frequency(const AudioBuffer& buf) {
  std::vector<std::complex<double>> a(buf.size());
  for (size_t i = 0; i < buf.size(); ++i)
    a[i] = {static_cast<double>(buf.samples[i]), 0.0};
  fft(&a, false);
  size_t best = 0;
  double best_mag = 0.0;
  for (size_t k = 1; k < a.size() / 2; ++k) {
    const double m = std::abs(a[k]);
    if (m > best_mag) {
      best_mag = m;
      best = k;
    }
  }
  return static_cast<double>(best) * buf.sample_rate /
         static_cast<double>(buf.size());
}

inline double max_abs_diff(const std::vector<float>& a,
                           const std::vector<float>& b, size_t lo = 0,
                           size_t hi = SIZE_MAX) {
  double m = 0.0;
  const size_t end = std::min({a.size(), b.size(), hi});
  for (size_t i = lo; i < end; ++i)
    m = std::max(m, std::fabs(static_cast<double>(a[i]) - b[i]));
  return m;
}

inline AudioBuffer add_noise_snapshot(const AudioBuffer& speech,
                                      const AudioBuffer& noise, double scale) {
  AudioBuffer out = speech;
  for (size_t i = 0; i < out.size(); ++i)
    out.samples[i] = static_cast<float>(
        static_cast<double>(speech.samples[i]) +
        scale * static_cast<double>(noise.samples[i % noise.size()]));
  return out;
}

}  // namespace restobench::test
