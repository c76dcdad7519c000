// src/dsp.cc

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

#include "restobench/dsp.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "restobench/fft.h"

namespace restobench {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> make_window(Window window, size_t n) {
  std::vector<double> w(n, 1.0);
  if (window == Window::kHann) {
    // periodic Hann: exact overlap-add partition at 50% overlap
    for (size_t i = 0; i < n; ++i)
      w[i] = 0.5 - 0.5 * std::cos(2.0 * kPi * static_cast<double>(i) / n);
  }
  return w;
}

double sinc(double x) {
  if (std::fabs(x) < 1e-12) return 1.0;
  return std::sin(kPi * x) / (kPi * x);
}

// Zeroth-order modified Bessel function, power series.
double bessel_i0(double x) {
  double sum = 1.0, term = 1.0;
  const double half_x = 0.5 * x;
  for (int k = 1; k < 64; ++k) {
    term *= (half_x / k) * (half_x / k);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

}  // namespace

Window window_from_string(const std::string& name) {
  if (name == "hann") return Window::kHann;
  if (name == "rect") return Window::kRect;
  throw std::runtime_error("unknown window: " + name);
}

Spectrogram stft(const AudioBuffer& buf, size_t frame_len, size_t hop,
                 Window window) {
  if (frame_len < 16) throw std::runtime_error("frame length too small");
  if (hop < 1 || hop > frame_len)
    throw std::runtime_error("hop must be in [1, frame_len]");
  if (buf.empty() || buf.size() < frame_len)
    throw std::runtime_error("signal too short");

  Spectrogram spec;
  spec.frame_len = frame_len;
  spec.hop = hop;
  spec.window = window;
  spec.sample_rate = buf.sample_rate;
  spec.num_frames = (buf.size() - frame_len) / hop + 1;

  const std::vector<double> w = make_window(window, frame_len);
  const size_t bins = spec.bins();
  spec.coef.resize(spec.num_frames * bins);

  std::vector<std::complex<double>> frame(frame_len);
  for (size_t m = 0; m < spec.num_frames; ++m) {
    const float* x = buf.samples.data() + m * hop;
    for (size_t i = 0; i < frame_len; ++i)
      frame[i] = {w[i] * static_cast<double>(x[i]), 0.0};
    fft(&frame, false);
    for (size_t k = 0; k < bins; ++k) spec.coef[m * bins + k] = frame[k];
  }
  return spec;
}

AudioBuffer istft(const Spectrogram& spec) {
  const size_t n = spec.frame_len;
  const size_t hop = spec.hop;
  if (spec.num_frames == 0 || n == 0)
    throw std::runtime_error("empty spectrogram");
  const std::vector<double> w = make_window(spec.window, n);

  // Reconstruction needs the squared-window overlap to cover every interior
  // position; a hop larger than the frame, or a tapered window stepped by a
  // full frame, leaves holes.
  if (hop > n)
    throw std::runtime_error("window/hop violates reconstruction condition");
  for (size_t p = 0; p < std::min(hop, n); ++p) {
    double s = 0.0;
    for (size_t q = p; q < n; q += hop) s += w[q] * w[q];
    if (s < 1e-6)
      throw std::runtime_error("window/hop violates reconstruction condition");
  }

  const size_t out_len = (spec.num_frames - 1) * hop + n;
  std::vector<double> num(out_len, 0.0), den(out_len, 0.0);
  const size_t bins = spec.bins();

  std::vector<std::complex<double>> full(n);
  for (size_t m = 0; m < spec.num_frames; ++m) {
    for (size_t k = 0; k < bins; ++k) full[k] = spec.coef[m * bins + k];
    for (size_t k = 1; k + bins <= n; ++k)
      full[n - k] = std::conj(spec.coef[m * bins + k]);
    fft(&full, true);
    const size_t base = m * hop;
    for (size_t i = 0; i < n; ++i) {
      num[base + i] += w[i] * full[i].real();
      den[base + i] += w[i] * w[i];
    }
  }

  AudioBuffer out;
  out.sample_rate = spec.sample_rate;
  out.samples.resize(out_len);
  for (size_t i = 0; i < out_len; ++i)
    out.samples[i] =
        den[i] > 1e-12 ? static_cast<float>(num[i] / den[i]) : 0.0f;
  return out;
}

AudioBuffer resample(const AudioBuffer& buf, int target_rate) {
  if (target_rate <= 0) throw std::runtime_error("invalid target rate");
  if (buf.sample_rate <= 0) throw std::runtime_error("invalid sample rate");
  if (target_rate == buf.sample_rate) return buf;  // bit-exact identity

  const int64_t g = std::gcd(buf.sample_rate, target_rate);
  const int64_t up = target_rate / g;    // L
  const int64_t down = buf.sample_rate / g;  // M

  const int64_t in_len = static_cast<int64_t>(buf.size());
  const int64_t out_len = static_cast<int64_t>(std::llround(
      static_cast<double>(in_len) * target_rate / buf.sample_rate));

  AudioBuffer out;
  out.sample_rate = target_rate;
  out.samples.assign(static_cast<size_t>(out_len), 0.0f);
  if (in_len == 0 || out_len == 0) return out;

  // Kaiser-windowed sinc, cutoff just under the lower Nyquist.
  constexpr double kRolloff = 0.945;
  constexpr double kBeta = 10.0;
  constexpr double kZeroCrossings = 32.0;
  const double fc = 0.5 * std::min(1.0, static_cast<double>(up) / down) * kRolloff;
  const double support = kZeroCrossings / (2.0 * fc);  // in source samples
  const int64_t half = static_cast<int64_t>(std::ceil(support));
  const double i0_beta = bessel_i0(kBeta);

  // One tap set per fractional phase r/up, normalized to unity DC gain.
  std::vector<std::vector<double>> phases(static_cast<size_t>(up));
  for (int64_t r = 0; r < up; ++r) {
    auto& taps = phases[static_cast<size_t>(r)];
    taps.resize(static_cast<size_t>(2 * half + 1));
    const double frac = static_cast<double>(r) / up;
    double sum = 0.0;
    for (int64_t j = -half; j <= half; ++j) {
      const double u = static_cast<double>(j) - frac;
      double v = 0.0;
      if (std::fabs(u) <= support) {
        const double t = u / support;
        v = 2.0 * fc * sinc(2.0 * fc * u) *
            bessel_i0(kBeta * std::sqrt(std::max(0.0, 1.0 - t * t))) / i0_beta;
      }
      taps[static_cast<size_t>(j + half)] = v;
      sum += v;
    }
    for (auto& t : taps) t /= sum;
  }

  for (int64_t n = 0; n < out_len; ++n) {
    const int64_t num = n * down;
    const int64_t q = num / up;
    const int64_t r = num % up;
    const auto& taps = phases[static_cast<size_t>(r)];
    double acc = 0.0;
    const int64_t j0 = std::max<int64_t>(-half, -q);
    const int64_t j1 = std::min<int64_t>(half, in_len - 1 - q);
    for (int64_t j = j0; j <= j1; ++j)
      acc += taps[static_cast<size_t>(j + half)] *
             static_cast<double>(buf.samples[static_cast<size_t>(q + j)]);
    out.samples[static_cast<size_t>(n)] = static_cast<float>(acc);
  }
  return out;
}

FirFilter design_lowpass(double cutoff_hz, int sample_rate) {
  if (sample_rate <= 0) throw std::runtime_error("invalid cutoff");
  if (!(cutoff_hz > 0.0) || !(cutoff_hz < 0.5 * sample_rate))
    throw std::runtime_error("invalid cutoff");

  // 511 taps meet the -50 dB @ 1.2*cutoff / -1 dB @ 0.8*cutoff template for
  // every cutoff >= 0.025*fs (measured), which covers the whole degradation
  // range. Below that the Blackman transition band outgrows the template, so
  // the filter is lengthened proportionally.
  constexpr size_t kBaseTaps = 511;
  constexpr size_t kMaxTaps = 65535;
  size_t taps = kBaseTaps;
  if (cutoff_hz < 0.025 * sample_rate) {
    const double need = std::ceil(14.0 * sample_rate / cutoff_hz);
    taps = std::min<size_t>(kMaxTaps, static_cast<size_t>(need) | 1ULL);
  }

  const double fc = cutoff_hz / sample_rate;
  const size_t center = (taps - 1) / 2;

  FirFilter filt;
  filt.taps.resize(taps);
  double sum = 0.0;
  for (size_t i = 0; i < taps; ++i) {
    const double m = static_cast<double>(i) - static_cast<double>(center);
    const double blackman = 0.42 -
        0.5 * std::cos(2.0 * kPi * static_cast<double>(i) / (taps - 1)) +
        0.08 * std::cos(4.0 * kPi * static_cast<double>(i) / (taps - 1));
    filt.taps[i] = 2.0 * fc * sinc(2.0 * fc * m) * blackman;
    sum += filt.taps[i];
  }
  for (auto& t : filt.taps) t /= sum;  // unity DC gain
  return filt;
}

AudioBuffer apply_fir(const AudioBuffer& buf, const FirFilter& filt) {
  const int64_t n = static_cast<int64_t>(buf.size());
  const int64_t t = static_cast<int64_t>(filt.taps.size());
  const int64_t delay = static_cast<int64_t>(filt.group_delay());

  AudioBuffer out;
  out.sample_rate = buf.sample_rate;
  out.samples.assign(buf.size(), 0.0f);
  for (int64_t i = 0; i < n; ++i) {
    // y[i] = sum_k taps[k] * x[i + delay - k], zero outside the buffer
    const int64_t k0 = std::max<int64_t>(0, i + delay - (n - 1));
    const int64_t k1 = std::min<int64_t>(t - 1, i + delay);
    double acc = 0.0;
    const double* taps = filt.taps.data();
    const float* x = buf.samples.data();
    for (int64_t k = k0; k <= k1; ++k)
      acc += taps[k] * static_cast<double>(x[i + delay - k]);
    out.samples[static_cast<size_t>(i)] = static_cast<float>(acc);
  }
  return out;
}

double level_db(const AudioBuffer& buf) {
  if (buf.empty()) throw std::runtime_error("level_db: empty buffer");
  const double r = rms(buf);
  if (r <= 0.0) return kSilenceFloorDb;
  return 20.0 * std::log10(r);
}

}  // namespace restobench
