// src/degrade.cc

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

#include "restobench/degrade.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "restobench/dsp.h"
#include "restobench/rng.h"

namespace restobench {

namespace {

using nlohmann::json;

// Sub-stream purposes. Each factor draws from its own stream derived from
// (seed, item_index, purpose), so sweeping one factor's range cannot shift
// any other factor's draws.
constexpr uint64_t kPurposeClip = 0x636c6970ULL;       // "clip"
constexpr uint64_t kPurposeLpf = 0x6c7066ULL;          // "lpf"
constexpr uint64_t kPurposeAtt = 0x617474ULL;          // "att"
constexpr uint64_t kPurposeRegion = 0x726567696f6eULL; // "region"
constexpr uint64_t kPurposeSnr = 0x736e72ULL;          // "snr"
constexpr uint64_t kPurposeCrop = 0x63726f70ULL;       // "crop"

constexpr int kRegionRetries = 1000;

void require_prob(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::runtime_error(std::string("probability out of [0,1]: ") + name);
}

void require_range(double lo, double hi, const char* name) {
  if (!(lo <= hi))
    throw std::runtime_error(std::string("range lo > hi: ") + name);
}

void check_known_fields(const json& j, const std::set<std::string>& known,
                        const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (known.find(it.key()) == known.end())
      throw std::runtime_error("unknown field \"" + it.key() + "\" in " +
                               where);
  }
}

std::pair<double, double> read_range(const json& j, const std::string& name) {
  const auto& a = j.at(name);
  if (!a.is_array() || a.size() != 2)
    throw std::runtime_error(name + " must be a [lo, hi] pair");
  return {a[0].get<double>(), a[1].get<double>()};
}

bool regions_overlap(const Region& a, const Region& b) {
  return a.start_sample < b.start_sample + b.length_samples &&
         b.start_sample < a.start_sample + a.length_samples;
}

}  // namespace

void DegradationSpec::validate() const {
  require_prob(clip.enabled_prob, "clip.enabled_prob");
  require_prob(lpf.enabled_prob, "lpf.enabled_prob");
  require_prob(attenuation.enabled_prob, "attenuation.enabled_prob");
  require_range(clip.ratio_lo, clip.ratio_hi, "clip.ratio_range");
  if (!(clip.ratio_lo > 0.0 && clip.ratio_hi <= 1.0))
    throw std::runtime_error("clip.ratio_range must lie in (0, 1]");
  require_range(lpf.cutoff_lo_hz, lpf.cutoff_hi_hz, "lpf.cutoff_range_hz");
  if (!(lpf.cutoff_lo_hz > 0.0))
    throw std::runtime_error("lpf.cutoff_range_hz must be positive");
  require_range(attenuation.gain_lo, attenuation.gain_hi,
                "attenuation.gain_range");
  if (!(attenuation.gain_lo >= 0.0 && attenuation.gain_hi < 1.0))
    throw std::runtime_error("attenuation.gain_range must lie in [0, 1)");
  require_range(attenuation.duration_lo_ms, attenuation.duration_hi_ms,
                "attenuation.duration_range_ms");
  if (attenuation.duration_lo_ms < 0.0)
    throw std::runtime_error("attenuation durations must be non-negative");
  if (attenuation.max_regions < 1)
    throw std::runtime_error("attenuation.max_regions must be positive");
  if (noise.snr_set_db.empty() && !noise.snr_range_db.has_value())
    throw std::runtime_error("noise needs snr_set_db or snr_range_db");
  if (noise.snr_range_db)
    require_range(noise.snr_range_db->first, noise.snr_range_db->second,
                  "noise.snr_range_db");
}

std::vector<ChainStage> default_chain_order() {
  return {ChainStage::kAttenuate, ChainStage::kClip, ChainStage::kLowpass};
}

std::vector<ChainStage> chain_order_from_string(const std::string& csv) {
  std::vector<ChainStage> order;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "attenuate") order.push_back(ChainStage::kAttenuate);
    else if (tok == "clip") order.push_back(ChainStage::kClip);
    else if (tok == "lowpass") order.push_back(ChainStage::kLowpass);
    else throw std::runtime_error("unknown chain stage: " + tok);
  }
  if (order.size() != 3)
    throw std::runtime_error("chain order must list attenuate, clip, lowpass");
  std::set<ChainStage> uniq(order.begin(), order.end());
  if (uniq.size() != 3)
    throw std::runtime_error("chain order must not repeat stages");
  return order;
}

std::pair<AudioBuffer, AudioBuffer> mix_noise_at_snr(
    const AudioBuffer& speech, const AudioBuffer& noise, double snr_db,
    size_t noise_offset, const AudioBuffer* snr_reference) {
  if (speech.sample_rate != noise.sample_rate)
    throw std::runtime_error("mix_noise_at_snr: sample rate mismatch");
  if (noise.size() < speech.size())
    throw std::runtime_error("mix_noise_at_snr: noise shorter than speech");

  const size_t n = speech.size();
  const size_t max_offset = noise.size() - n;
  const size_t offset = std::min(noise_offset, max_offset);

  AudioBuffer segment;
  segment.sample_rate = noise.sample_rate;
  segment.samples.assign(noise.samples.begin() + offset,
                         noise.samples.begin() + offset + n);

  const AudioBuffer& ref = snr_reference ? *snr_reference : speech;
  const double ref_rms = rms(ref);
  const double noise_rms = rms(segment);
  if (ref_rms <= 0.0 || noise_rms <= 0.0)
    throw std::runtime_error("degenerate SNR reference");

  const double scale = ref_rms / noise_rms * std::pow(10.0, -snr_db / 20.0);

  AudioBuffer scaled = segment, mixture = speech;
  for (size_t i = 0; i < n; ++i) {
    const double v = scale * static_cast<double>(segment.samples[i]);
    scaled.samples[i] = static_cast<float>(v);
    mixture.samples[i] =
        static_cast<float>(static_cast<double>(speech.samples[i]) + v);
  }
  return {std::move(mixture), std::move(scaled)};
}

AudioBuffer clip_signal(const AudioBuffer& buf, double ratio, ClipMode mode) {
  if (!(ratio > 0.0) || (mode == ClipMode::kRelativePeak && ratio > 1.0))
    throw std::runtime_error("invalid clip ratio");
  float threshold;
  if (mode == ClipMode::kRelativePeak) {
    const float peak = peak_abs(buf);
    if (peak == 0.0f) return buf;  // silent input, no threshold definable
    threshold = static_cast<float>(ratio) * peak;
  } else {
    threshold = static_cast<float>(ratio);
  }
  AudioBuffer out = buf;
  for (auto& s : out.samples) s = std::clamp(s, -threshold, threshold);
  return out;
}

AudioBuffer lowpass_degrade(const AudioBuffer& buf, double cutoff_hz) {
  if (!(cutoff_hz > 0.0)) throw std::runtime_error("invalid cutoff");
  const double max_cutoff = 0.45 * buf.sample_rate;
  const double cutoff = std::min(cutoff_hz, max_cutoff);
  return apply_fir(buf, design_lowpass(cutoff, buf.sample_rate));
}

AudioBuffer attenuate_regions(const AudioBuffer& buf,
                              const std::vector<Region>& regions) {
  const int64_t n = static_cast<int64_t>(buf.size());
  std::vector<Region> sorted = regions;
  std::sort(sorted.begin(), sorted.end(),
            [](const Region& a, const Region& b) {
              return a.start_sample < b.start_sample;
            });
  for (size_t i = 0; i < sorted.size(); ++i) {
    const Region& r = sorted[i];
    if (r.start_sample < 0 || r.length_samples < 0 ||
        r.start_sample + r.length_samples > n)
      throw std::runtime_error("invalid region list");
    if (i > 0 && regions_overlap(sorted[i - 1], r))
      throw std::runtime_error("invalid region list");
  }
  AudioBuffer out = buf;
  for (const Region& r : sorted) {
    const float g = static_cast<float>(r.gain);
    for (int64_t i = r.start_sample; i < r.start_sample + r.length_samples; ++i)
      out.samples[static_cast<size_t>(i)] *= g;
  }
  return out;
}

AppliedDegradation sample_applied(const DegradationSpec& spec,
                                  uint64_t item_index, size_t buf_len,
                                  int sample_rate) {
  spec.validate();
  if (sample_rate <= 0)
    throw std::runtime_error("sample_applied: invalid sample rate");

  AppliedDegradation applied;
  const uint64_t stream = spec.seed ^ splitmix64(item_index);
  applied.seed_used = stream;

  {
    Rng rng(stream ^ splitmix64(kPurposeClip));
    if (rng.uniform() < spec.clip.enabled_prob)
      applied.clip_ratio = rng.uniform(spec.clip.ratio_lo, spec.clip.ratio_hi);
  }
  {
    Rng rng(stream ^ splitmix64(kPurposeLpf));
    if (rng.uniform() < spec.lpf.enabled_prob)
      applied.lpf_cutoff_hz =
          rng.uniform(spec.lpf.cutoff_lo_hz, spec.lpf.cutoff_hi_hz);
  }
  {
    Rng rng(stream ^ splitmix64(kPurposeAtt));
    const bool enabled = rng.uniform() < spec.attenuation.enabled_prob;
    const int64_t min_dur = static_cast<int64_t>(std::llround(
        spec.attenuation.duration_lo_ms * 1e-3 * sample_rate));
    // A buffer too short for even the minimum duration disables attenuation
    // for this item; the empty region list records that.
    if (enabled && min_dur <= static_cast<int64_t>(buf_len)) {
      const uint64_t count =
          1 + rng.uniform_int(static_cast<uint64_t>(spec.attenuation.max_regions));
      for (uint64_t k = 0; k < count; ++k) {
        Rng region_rng(stream ^ splitmix64(kPurposeRegion) ^ splitmix64(k));
        const double dur_ms = region_rng.uniform(
            spec.attenuation.duration_lo_ms, spec.attenuation.duration_hi_ms);
        const int64_t dur =
            static_cast<int64_t>(std::llround(dur_ms * 1e-3 * sample_rate));
        if (dur <= 0 || dur > static_cast<int64_t>(buf_len)) continue;
        const uint64_t span = buf_len - static_cast<size_t>(dur) + 1;
        Region candidate{0, dur, 0.0};
        bool placed = false;
        for (int attempt = 0; attempt < kRegionRetries && !placed; ++attempt) {
          candidate.start_sample =
              static_cast<int64_t>(region_rng.uniform_int(span));
          placed = std::none_of(applied.attenuation_regions.begin(),
                                applied.attenuation_regions.end(),
                                [&](const Region& r) {
                                  return regions_overlap(r, candidate);
                                });
        }
        if (!placed) continue;  // accept fewer regions
        candidate.gain = region_rng.uniform(spec.attenuation.gain_lo,
                                            spec.attenuation.gain_hi);
        applied.attenuation_regions.push_back(candidate);
      }
      std::sort(applied.attenuation_regions.begin(),
                applied.attenuation_regions.end(),
                [](const Region& a, const Region& b) {
                  return a.start_sample < b.start_sample;
                });
    }
  }
  {
    Rng rng(stream ^ splitmix64(kPurposeSnr));
    if (!spec.noise.snr_set_db.empty()) {
      applied.snr_db =
          spec.noise.snr_set_db[rng.uniform_int(spec.noise.snr_set_db.size())];
    } else {
      applied.snr_db = rng.uniform(spec.noise.snr_range_db->first,
                                   spec.noise.snr_range_db->second);
    }
  }
  return applied;
}

AudioBuffer apply_chain(const AudioBuffer& speech, const AudioBuffer& noise,
                        const AppliedDegradation& applied,
                        const std::vector<ChainStage>& order,
                        ClipMode clip_mode) {
  if (speech.sample_rate != noise.sample_rate)
    throw std::runtime_error("apply_chain: sample rate mismatch");

  AudioBuffer x = speech;
  for (ChainStage stage : order) {
    switch (stage) {
      case ChainStage::kAttenuate:
        if (!applied.attenuation_regions.empty())
          x = attenuate_regions(x, applied.attenuation_regions);
        break;
      case ChainStage::kClip:
        if (applied.clip_ratio)
          x = clip_signal(x, *applied.clip_ratio, clip_mode);
        break;
      case ChainStage::kLowpass:
        if (applied.lpf_cutoff_hz)
          x = lowpass_degrade(x, *applied.lpf_cutoff_hz);
        break;
    }
  }

  size_t offset = 0;
  if (noise.size() > speech.size()) {
    Rng rng(applied.seed_used ^ splitmix64(kPurposeCrop));
    offset = rng.uniform_int(noise.size() - speech.size() + 1);
  }
  // SNR is referenced to the clean pre-degradation speech, recorded per item
  // so the f(s)-referenced convention can be recomputed from the sidecar.
  auto [mixture, scaled] =
      mix_noise_at_snr(x, noise, applied.snr_db, offset, &speech);
  if (!all_finite(mixture))
    throw std::runtime_error("apply_chain produced non-finite samples");
  return mixture;
}

std::string spec_to_json(const DegradationSpec& spec) {
  json j;
  j["clip"] = {{"enabled_prob", spec.clip.enabled_prob},
               {"ratio_range", {spec.clip.ratio_lo, spec.clip.ratio_hi}}};
  j["lpf"] = {{"enabled_prob", spec.lpf.enabled_prob},
              {"cutoff_range_hz",
               {spec.lpf.cutoff_lo_hz, spec.lpf.cutoff_hi_hz}}};
  j["attenuation"] = {
      {"enabled_prob", spec.attenuation.enabled_prob},
      {"gain_range", {spec.attenuation.gain_lo, spec.attenuation.gain_hi}},
      {"duration_range_ms",
       {spec.attenuation.duration_lo_ms, spec.attenuation.duration_hi_ms}},
      {"max_regions", spec.attenuation.max_regions}};
  if (!spec.noise.snr_set_db.empty()) {
    j["noise"] = {{"snr_set_db", spec.noise.snr_set_db}};
  } else {
    j["noise"] = {{"snr_range_db", {spec.noise.snr_range_db->first,
                                    spec.noise.snr_range_db->second}}};
  }
  j["seed"] = spec.seed;
  return j.dump(2) + "\n";
}

DegradationSpec spec_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("invalid spec JSON: ") + e.what());
  }
  check_known_fields(j, {"clip", "lpf", "attenuation", "noise", "seed"},
                     "DegradationSpec");
  DegradationSpec spec;
  if (j.contains("clip")) {
    const auto& c = j["clip"];
    check_known_fields(c, {"enabled_prob", "ratio_range"}, "clip");
    if (c.contains("enabled_prob"))
      spec.clip.enabled_prob = c["enabled_prob"].get<double>();
    if (c.contains("ratio_range"))
      std::tie(spec.clip.ratio_lo, spec.clip.ratio_hi) =
          read_range(c, "ratio_range");
  }
  if (j.contains("lpf")) {
    const auto& c = j["lpf"];
    check_known_fields(c, {"enabled_prob", "cutoff_range_hz"}, "lpf");
    if (c.contains("enabled_prob"))
      spec.lpf.enabled_prob = c["enabled_prob"].get<double>();
    if (c.contains("cutoff_range_hz"))
      std::tie(spec.lpf.cutoff_lo_hz, spec.lpf.cutoff_hi_hz) =
          read_range(c, "cutoff_range_hz");
  }
  if (j.contains("attenuation")) {
    const auto& c = j["attenuation"];
    check_known_fields(
        c, {"enabled_prob", "gain_range", "duration_range_ms", "max_regions"},
        "attenuation");
    if (c.contains("enabled_prob"))
      spec.attenuation.enabled_prob = c["enabled_prob"].get<double>();
    if (c.contains("gain_range"))
      std::tie(spec.attenuation.gain_lo, spec.attenuation.gain_hi) =
          read_range(c, "gain_range");
    if (c.contains("duration_range_ms"))
      std::tie(spec.attenuation.duration_lo_ms, spec.attenuation.duration_hi_ms) =
          read_range(c, "duration_range_ms");
    if (c.contains("max_regions"))
      spec.attenuation.max_regions = c["max_regions"].get<int>();
  }
  if (j.contains("noise")) {
    const auto& c = j["noise"];
    check_known_fields(c, {"snr_set_db", "snr_range_db"}, "noise");
    if (c.contains("snr_set_db")) {
      spec.noise.snr_set_db = c["snr_set_db"].get<std::vector<double>>();
    } else {
      spec.noise.snr_set_db.clear();
    }
    if (c.contains("snr_range_db")) {
      auto [lo, hi] = read_range(c, "snr_range_db");
      spec.noise.snr_range_db = {lo, hi};
    }
  }
  if (j.contains("seed")) spec.seed = j["seed"].get<uint64_t>();
  spec.validate();
  return spec;
}

std::string applied_to_json(const AppliedDegradation& applied) {
  json j;
  j["clip_ratio"] =
      applied.clip_ratio ? json(*applied.clip_ratio) : json(nullptr);
  j["lpf_cutoff_hz"] =
      applied.lpf_cutoff_hz ? json(*applied.lpf_cutoff_hz) : json(nullptr);
  json regions = json::array();
  for (const Region& r : applied.attenuation_regions)
    regions.push_back({{"start_sample", r.start_sample},
                       {"length_samples", r.length_samples},
                       {"gain", r.gain}});
  j["attenuation_regions"] = regions;
  j["noise_source"] = applied.noise_source;
  j["snr_db"] = applied.snr_db;
  j["seed_used"] = applied.seed_used;
  return j.dump(2) + "\n";
}

AppliedDegradation applied_from_json(const std::string& json_text) {
  json j = json::parse(json_text);
  AppliedDegradation applied;
  if (j.contains("clip_ratio") && !j["clip_ratio"].is_null())
    applied.clip_ratio = j["clip_ratio"].get<double>();
  if (j.contains("lpf_cutoff_hz") && !j["lpf_cutoff_hz"].is_null())
    applied.lpf_cutoff_hz = j["lpf_cutoff_hz"].get<double>();
  for (const auto& r : j.at("attenuation_regions"))
    applied.attenuation_regions.push_back({r.at("start_sample").get<int64_t>(),
                                           r.at("length_samples").get<int64_t>(),
                                           r.at("gain").get<double>()});
  applied.noise_source = j.at("noise_source").get<std::string>();
  applied.snr_db = j.at("snr_db").get<double>();
  applied.seed_used = j.at("seed_used").get<uint64_t>();
  return applied;
}

}  // namespace restobench
