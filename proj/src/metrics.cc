// src/metrics.cc

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

#include "restobench/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "restobench/dsp.h"
#include "restobench/fft.h"

namespace restobench {

namespace {

using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// STOI
// ---------------------------------------------------------------------------

constexpr int kStoiRate = 10000;
constexpr size_t kStoiFrame = 256;
constexpr size_t kStoiHop = 128;
constexpr size_t kStoiFft = 512;
constexpr int kStoiBands = 15;
constexpr double kStoiBandLowHz = 150.0;
constexpr size_t kStoiSegment = 30;     // frames per 384 ms segment
constexpr double kStoiBetaDb = -15.0;   // lower SDR clipping bound
constexpr double kStoiDynRangeDb = 40.0;

// Symmetric Hann without the zero endpoints (the convention the canonical
// description uses for both the frame mask and the analysis window).
std::vector<double> stoi_hann(size_t n) {
  std::vector<double> w(n);
  for (size_t i = 0; i < n; ++i)
    w[i] = 0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(i + 1) /
                                 static_cast<double>(n + 1)));
  return w;
}

// Frame starts at 0, hop, 2*hop, ... with start + frame < len.
size_t stoi_frame_count(size_t len, size_t frame, size_t hop) {
  if (len <= frame) return 0;
  return (len - frame - 1) / hop + 1;
}

// Excise frames whose clean-signal energy is more than 40 dB below the
// loudest frame, from both signals at the same indices, and re-stitch the
// kept frames by windowed overlap-add.
void remove_silent_frames(std::vector<float>* clean,
                          std::vector<float>* processed) {
  const size_t len = clean->size();
  const size_t count = stoi_frame_count(len, kStoiFrame, kStoiHop);
  if (count == 0) throw std::runtime_error("insufficient speech for STOI");

  const std::vector<double> w = stoi_hann(kStoiFrame);
  std::vector<double> energy_db(count);
  double max_db = -std::numeric_limits<double>::infinity();
  for (size_t m = 0; m < count; ++m) {
    double e = 0.0;
    for (size_t i = 0; i < kStoiFrame; ++i) {
      const double v = w[i] * static_cast<double>((*clean)[m * kStoiHop + i]);
      e += v * v;
    }
    energy_db[m] = e > 0.0
        ? 20.0 * std::log10(std::sqrt(e / static_cast<double>(kStoiFrame)))
        : -std::numeric_limits<double>::infinity();
    max_db = std::max(max_db, energy_db[m]);
  }
  if (!std::isfinite(max_db))
    throw std::runtime_error("insufficient speech for STOI");

  size_t kept = 0;
  std::vector<double> out_c(len, 0.0), out_p(len, 0.0);
  for (size_t m = 0; m < count; ++m) {
    if (!(energy_db[m] > max_db - kStoiDynRangeDb)) continue;
    const size_t src = m * kStoiHop;
    const size_t dst = kept * kStoiHop;
    for (size_t i = 0; i < kStoiFrame; ++i) {
      out_c[dst + i] += w[i] * static_cast<double>((*clean)[src + i]);
      out_p[dst + i] += w[i] * static_cast<double>((*processed)[src + i]);
    }
    ++kept;
  }
  if (kept == 0) throw std::runtime_error("insufficient speech for STOI");

  const size_t out_len = (kept - 1) * kStoiHop + kStoiFrame;
  clean->assign(out_len, 0.0f);
  processed->assign(out_len, 0.0f);
  for (size_t i = 0; i < out_len; ++i) {
    (*clean)[i] = static_cast<float>(out_c[i]);
    (*processed)[i] = static_cast<float>(out_p[i]);
  }
}

// One-third octave band energies: rows = bands, values = sqrt of summed
// FFT power over the band's bins. Band edges are cf/2^(1/6) .. cf*2^(1/6)
// snapped to the nearest FFT bin.
std::vector<std::pair<size_t, size_t>> third_octave_bands() {
  const size_t bins = kStoiFft / 2 + 1;
  std::vector<double> f(bins);
  for (size_t i = 0; i < bins; ++i)
    f[i] = static_cast<double>(i) * kStoiRate / static_cast<double>(kStoiFft);

  auto nearest_bin = [&](double target) {
    size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < bins; ++i) {
      const double d = (f[i] - target) * (f[i] - target);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    return best;
  };

  std::vector<std::pair<size_t, size_t>> bands(kStoiBands);
  for (int k = 0; k < kStoiBands; ++k) {
    const double cf = kStoiBandLowHz * std::pow(2.0, k / 3.0);
    const double fl = cf * std::pow(2.0, -1.0 / 6.0);
    const double fr = cf * std::pow(2.0, 1.0 / 6.0);
    bands[static_cast<size_t>(k)] = {nearest_bin(fl), nearest_bin(fr)};
  }
  return bands;
}

// Band envelope matrix [band][frame] from 256-sample Hann frames zero-padded
// to a 512-point FFT.
std::vector<std::vector<double>> band_envelopes(const std::vector<float>& x) {
  const size_t count = stoi_frame_count(x.size(), kStoiFrame, kStoiHop);
  const std::vector<double> w = stoi_hann(kStoiFrame);
  const auto bands = third_octave_bands();
  const size_t bins = kStoiFft / 2 + 1;

  std::vector<std::vector<double>> env(
      kStoiBands, std::vector<double>(count, 0.0));
  std::vector<std::complex<double>> frame(kStoiFft);
  for (size_t m = 0; m < count; ++m) {
    std::fill(frame.begin(), frame.end(), std::complex<double>(0.0, 0.0));
    for (size_t i = 0; i < kStoiFrame; ++i)
      frame[i] = {w[i] * static_cast<double>(x[m * kStoiHop + i]), 0.0};
    fft(&frame, false);
    std::vector<double> power(bins);
    for (size_t k = 0; k < bins; ++k) power[k] = std::norm(frame[k]);
    for (int j = 0; j < kStoiBands; ++j) {
      const auto [lo, hi] = bands[static_cast<size_t>(j)];
      double acc = 0.0;
      for (size_t k = lo; k < hi; ++k) acc += power[k];
      env[static_cast<size_t>(j)][m] = std::sqrt(acc);
    }
  }
  return env;
}

double correlation(const double* a, const double* b, size_t n) {
  double ma = 0.0, mb = 0.0;
  for (size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= static_cast<double>(n);
  mb /= static_cast<double>(n);
  double num = 0.0, da = 0.0, db = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double xa = a[i] - ma;
    const double xb = b[i] - mb;
    num += xa * xb;
    da += xa * xa;
    db += xb * xb;
  }
  const double denom = std::sqrt(da) * std::sqrt(db);
  if (denom <= 0.0) return 0.0;  // degenerate constant envelope
  return num / denom;
}

// ---------------------------------------------------------------------------

double frame_energy(const float* x, size_t n) {
  double e = 0.0;
  for (size_t i = 0; i < n; ++i) e += static_cast<double>(x[i]) * x[i];
  return e;
}

std::string format_value(double v) {
  std::ostringstream os;
  os.precision(9);
  os << v;
  return os.str();
}

json block_to_json(const MetricBlock& block) {
  json per_item = json::array();
  for (const auto& it : block.per_item)
    per_item.push_back({{"item_id", it.item_id},
                        {"stoi", it.stoi},
                        {"seg_snr_db", it.seg_snr_db},
                        {"lsd_db", it.lsd_db}});
  return {{"per_item", per_item},
          {"aggregate",
           {{"stoi", {{"mean", block.stoi.mean}, {"std", block.stoi.stddev}}},
            {"seg_snr_db",
             {{"mean", block.seg_snr_db.mean}, {"std", block.seg_snr_db.stddev}}},
            {"lsd_db",
             {{"mean", block.lsd_db.mean}, {"std", block.lsd_db.stddev}}}}}};
}

MetricBlock block_from_json(const json& j) {
  MetricBlock block;
  for (const auto& it : j.at("per_item"))
    block.per_item.push_back({it.at("item_id").get<std::string>(),
                              it.at("stoi").get<double>(),
                              it.at("seg_snr_db").get<double>(),
                              it.at("lsd_db").get<double>()});
  const auto& agg = j.at("aggregate");
  block.stoi = {agg.at("stoi").at("mean").get<double>(),
                agg.at("stoi").at("std").get<double>()};
  block.seg_snr_db = {agg.at("seg_snr_db").at("mean").get<double>(),
                      agg.at("seg_snr_db").at("std").get<double>()};
  block.lsd_db = {agg.at("lsd_db").at("mean").get<double>(),
                  agg.at("lsd_db").at("std").get<double>()};
  return block;
}

}  // namespace

void MetricBlock::recompute_aggregates() {
  auto aggregate = [&](auto field) {
    MetricAggregate a;
    if (per_item.empty()) return a;
    double sum = 0.0;
    for (const auto& it : per_item) sum += field(it);
    a.mean = sum / static_cast<double>(per_item.size());
    double var = 0.0;
    for (const auto& it : per_item) {
      const double d = field(it) - a.mean;
      var += d * d;
    }
    a.stddev = std::sqrt(var / static_cast<double>(per_item.size()));
    return a;
  };
  stoi = aggregate([](const ItemMetrics& m) { return m.stoi; });
  seg_snr_db = aggregate([](const ItemMetrics& m) { return m.seg_snr_db; });
  lsd_db = aggregate([](const ItemMetrics& m) { return m.lsd_db; });
}

double stoi(const AudioBuffer& clean, const AudioBuffer& processed) {
  if (clean.sample_rate != processed.sample_rate)
    throw std::runtime_error("stoi: sample rate mismatch");
  if (clean.size() != processed.size())
    throw std::runtime_error("stoi: length mismatch");
  if (clean.empty()) throw std::runtime_error("insufficient speech for STOI");

  AudioBuffer c10 = resample(clean, kStoiRate);
  AudioBuffer p10 = resample(processed, kStoiRate);

  remove_silent_frames(&c10.samples, &p10.samples);

  const auto env_c = band_envelopes(c10.samples);
  const auto env_p = band_envelopes(p10.samples);
  const size_t frames = env_c.empty() ? 0 : env_c[0].size();
  if (frames < kStoiSegment)
    throw std::runtime_error("insufficient speech for STOI");

  const double clip_gain = 1.0 + std::pow(10.0, -kStoiBetaDb / 20.0);
  double sum = 0.0;
  size_t cells = 0;
  std::vector<double> y_prime(kStoiSegment);
  for (size_t m = kStoiSegment - 1; m < frames; ++m) {
    const size_t seg0 = m + 1 - kStoiSegment;
    for (int j = 0; j < kStoiBands; ++j) {
      const double* x = env_c[static_cast<size_t>(j)].data() + seg0;
      const double* y = env_p[static_cast<size_t>(j)].data() + seg0;
      double ex = 0.0, ey = 0.0;
      for (size_t i = 0; i < kStoiSegment; ++i) {
        ex += x[i] * x[i];
        ey += y[i] * y[i];
      }
      const double alpha = ey > 0.0 ? std::sqrt(ex / ey) : 0.0;
      for (size_t i = 0; i < kStoiSegment; ++i)
        y_prime[i] = std::min(alpha * y[i], x[i] * clip_gain);
      sum += correlation(x, y_prime.data(), kStoiSegment);
      ++cells;
    }
  }
  return sum / static_cast<double>(cells);
}

double seg_snr(const AudioBuffer& clean, const AudioBuffer& processed) {
  if (clean.sample_rate != processed.sample_rate)
    throw std::runtime_error("seg_snr: sample rate mismatch");
  if (clean.size() != processed.size())
    throw std::runtime_error("seg_snr: length mismatch");

  const size_t frame =
      static_cast<size_t>(std::llround(0.03 * clean.sample_rate));
  const size_t count = frame > 0 ? clean.size() / frame : 0;
  if (count == 0) throw std::runtime_error("silent reference");

  std::vector<double> energy(count);
  double max_e = 0.0;
  for (size_t m = 0; m < count; ++m) {
    energy[m] = frame_energy(clean.samples.data() + m * frame, frame);
    max_e = std::max(max_e, energy[m]);
  }
  if (max_e <= 0.0) throw std::runtime_error("silent reference");

  const double active_floor = max_e * 1e-6;  // -60 dB relative to peak frame
  double sum = 0.0;
  size_t active = 0;
  for (size_t m = 0; m < count; ++m) {
    if (energy[m] < active_floor) continue;
    double err = 0.0;
    const float* c = clean.samples.data() + m * frame;
    const float* p = processed.samples.data() + m * frame;
    for (size_t i = 0; i < frame; ++i) {
      const double d = static_cast<double>(c[i]) - p[i];
      err += d * d;
    }
    double snr_db;
    if (err <= 0.0) {
      snr_db = kSegSnrCapDb;
    } else {
      snr_db = std::clamp(10.0 * std::log10(energy[m] / err), kSegSnrFloorDb,
                          kSegSnrCapDb);
    }
    sum += snr_db;
    ++active;
  }
  if (active == 0) throw std::runtime_error("silent reference");
  return sum / static_cast<double>(active);
}

double lsd(const AudioBuffer& clean, const AudioBuffer& processed) {
  if (clean.sample_rate != processed.sample_rate)
    throw std::runtime_error("lsd: sample rate mismatch");
  if (clean.size() != processed.size())
    throw std::runtime_error("lsd: length mismatch");

  constexpr double kEps = 1e-10;
  const size_t frame =
      static_cast<size_t>(std::llround(0.032 * clean.sample_rate));
  const size_t hop =
      static_cast<size_t>(std::llround(0.016 * clean.sample_rate));
  const Spectrogram sc = stft(clean, frame, hop, Window::kHann);
  const Spectrogram sp = stft(processed, frame, hop, Window::kHann);

  const size_t bins = sc.bins();
  double acc = 0.0;
  for (size_t m = 0; m < sc.num_frames; ++m) {
    for (size_t k = 0; k < bins; ++k) {
      const double a = 10.0 * std::log10(std::norm(sc.at(m, k)) + kEps);
      const double b = 10.0 * std::log10(std::norm(sp.at(m, k)) + kEps);
      acc += (a - b) * (a - b);
    }
  }
  return std::sqrt(acc / static_cast<double>(sc.num_frames * bins));
}

MetricReport improvement_delta(const MetricReport& report,
                               const MetricReport& baseline) {
  std::map<std::string, const ItemMetrics*> base_items;
  for (const auto& it : baseline.values.per_item)
    base_items[it.item_id] = &it;
  if (base_items.size() != report.values.per_item.size())
    throw std::runtime_error("incomparable reports");

  MetricReport out = report;
  MetricBlock deltas;
  for (const auto& it : report.values.per_item) {
    auto found = base_items.find(it.item_id);
    if (found == base_items.end())
      throw std::runtime_error("incomparable reports");
    const ItemMetrics& b = *found->second;
    deltas.per_item.push_back({it.item_id, it.stoi - b.stoi,
                               it.seg_snr_db - b.seg_snr_db,
                               it.lsd_db - b.lsd_db});
  }
  deltas.recompute_aggregates();
  out.deltas = std::move(deltas);
  return out;
}

std::string report_to_json(const MetricReport& report) {
  json j;
  j["schema_version"] = 1;
  j["metrics"] = {"stoi", "seg_snr_db", "lsd_db"};
  j["notes"] = report.notes;
  j["values"] = block_to_json(report.values);
  if (report.deltas) j["deltas"] = block_to_json(*report.deltas);
  json failed = json::array();
  for (const auto& f : report.failed_items)
    failed.push_back({{"item_id", f.item_id}, {"reason", f.reason}});
  j["failed_items"] = failed;
  j["failed_count"] = report.failed_items.size();
  return j.dump(2) + "\n";
}

MetricReport report_from_json(const std::string& json_text) {
  json j = json::parse(json_text);
  MetricReport report;
  report.notes = j.value("notes", "");
  report.values = block_from_json(j.at("values"));
  if (j.contains("deltas")) report.deltas = block_from_json(j["deltas"]);
  if (j.contains("failed_items"))
    for (const auto& f : j["failed_items"])
      report.failed_items.push_back({f.at("item_id").get<std::string>(),
                                     f.at("reason").get<std::string>()});
  return report;
}

std::string report_to_csv(const MetricReport& report) {
  std::ostringstream os;
  os << "item_id,stoi,seg_snr_db,lsd_db\n";
  for (const auto& it : report.values.per_item)
    os << it.item_id << ',' << format_value(it.stoi) << ','
       << format_value(it.seg_snr_db) << ',' << format_value(it.lsd_db)
       << '\n';
  os << "aggregate," << format_value(report.values.stoi.mean) << ','
     << format_value(report.values.seg_snr_db.mean) << ','
     << format_value(report.values.lsd_db.mean) << '\n';
  return os.str();
}

}  // namespace restobench
