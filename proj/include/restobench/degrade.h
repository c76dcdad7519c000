// include/restobench/degrade.h

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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "restobench/audio.h"

namespace restobench {

// Complete parameterization of the degradation chain and noise mixing.
// Defaults are the protocol values: clip ratio [0.06, 0.9] with probability
// 0.25, low-pass cutoff [2000, 8000] Hz with probability 0.5, attenuation
// gains [0, 0.01] over [10, 50] ms regions (at most 20) with probability 0.8.
struct DegradationSpec {
  struct Clip {
    double enabled_prob = 0.25;
    double ratio_lo = 0.06;
    double ratio_hi = 0.9;
  } clip;

  struct Lpf {
    double enabled_prob = 0.5;
    double cutoff_lo_hz = 2000.0;
    double cutoff_hi_hz = 8000.0;
  } lpf;

  struct Attenuation {
    double enabled_prob = 0.8;
    double gain_lo = 0.0;
    double gain_hi = 0.01;
    double duration_lo_ms = 10.0;
    double duration_hi_ms = 50.0;
    int max_regions = 20;
  } attenuation;

  struct Noise {
    // Either a discrete SNR set or a continuous range; the set wins if both
    // are present. Defaults to the evaluation grid.
    std::vector<double> snr_set_db = {2.5, 7.5, 12.5, 17.5};
    std::optional<std::pair<double, double>> snr_range_db;
  } noise;

  uint64_t seed = 1234;

  void validate() const;  // throws on out-of-range probabilities or ranges
};

struct Region {
  int64_t start_sample = 0;
  int64_t length_samples = 0;
  double gain = 0.0;
};

// Ground-truth record of the degradation sampled for one corpus item.
struct AppliedDegradation {
  std::optional<double> clip_ratio;
  std::optional<double> lpf_cutoff_hz;
  std::vector<Region> attenuation_regions;  // sorted, non-overlapping
  std::string noise_source;
  double snr_db = 0.0;
  uint64_t seed_used = 0;
};

enum class ClipMode { kRelativePeak, kAbsolute };

enum class ChainStage { kAttenuate, kClip, kLowpass };

// Conventional order: attenuation, clipping, low-pass; noise is always last.
std::vector<ChainStage> default_chain_order();
std::vector<ChainStage> chain_order_from_string(const std::string& csv);

// Scales noise so that 20*log10(rms(reference)/rms(scaled_noise)) == snr_db,
// then adds it to speech. If noise is longer than speech it is read starting
// at noise_offset. The sum is not renormalized. Default reference is speech.
std::pair<AudioBuffer, AudioBuffer> mix_noise_at_snr(
    const AudioBuffer& speech, const AudioBuffer& noise, double snr_db,
    size_t noise_offset = 0, const AudioBuffer* snr_reference = nullptr);

// Clamps every sample to [-c, +c]. In relative mode c = ratio * max|buf|
// (silent input passes through, no threshold definable); in absolute mode
//c = ratio.
AudioBuffer clip_signal(const AudioBuffer& buf, double ratio,
                        ClipMode mode = ClipMode::kRelativePeak);

// design_lowpass + apply_fir; cutoffs at or above 0.45*fs are clamped to
// 0.45*fs so the protocol's upper bound stays valid at any rate.
AudioBuffer lowpass_degrade(const AudioBuffer& buf, double cutoff_hz);

// Multiplies samples inside each region by that region's gain.
AudioBuffer attenuate_regions(const AudioBuffer& buf,
                              const std::vector<Region>& regions);

// Draws the per-item degradation. Deterministic: the stream is derived from
// spec.seed and item_index alone, with independent sub-streams per factor so
// pinning one factor's range (sweeps) leaves the other draws untouched.
AppliedDegradation sample_applied(const DegradationSpec& spec,
                                  uint64_t item_index, size_t buf_len,
                                  int sample_rate);

// Applies the sampled degradation: staged factors on speech, then noise at
// the recorded SNR referenced to the clean input.
AudioBuffer apply_chain(const AudioBuffer& speech, const AudioBuffer& noise,
                        const AppliedDegradation& applied,
                        const std::vector<ChainStage>& order =
                            default_chain_order(),
                        ClipMode clip_mode = ClipMode::kRelativePeak);

// JSON <-> spec. Field names match the schema exactly; unknown fields are
// rejected. See configs/ for the shipped documents.
std::string spec_to_json(const DegradationSpec& spec);
DegradationSpec spec_from_json(const std::string& json_text);

std::string applied_to_json(const AppliedDegradation& applied);
AppliedDegradation applied_from_json(const std::string& json_text);

}  // namespace restobench
