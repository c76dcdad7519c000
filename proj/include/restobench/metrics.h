// include/restobench/metrics.h

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

#include <optional>
#include <string>
#include <vector>

#include "restobench/audio.h"

namespace restobench {

struct ItemMetrics {
  std::string item_id;
  double stoi = 0.0;
  double seg_snr_db = 0.0;
  double lsd_db = 0.0;
};

struct MetricAggregate {
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
};

struct MetricBlock {
  std::vector<ItemMetrics> per_item;
  MetricAggregate stoi;
  MetricAggregate seg_snr_db;
  MetricAggregate lsd_db;

  void recompute_aggregates();
};

struct FailedItem {
  std::string item_id;
  std::string reason;
};

// Per-item and aggregate metric values, with optional improvement deltas
// over a reference condition. notes records that seg_snr_db and lsd_db stand
// in for the PESQ/NISQA columns of the usual benchmark tables.
struct MetricReport {
  MetricBlock values;
  std::optional<MetricBlock> deltas;
  std::vector<FailedItem> failed_items;
  std::string notes;
};

// Short-time objective intelligibility, canonical parameterization: 10 kHz
// analysis rate, 40 dB silent-frame removal at clean-derived indices,
// 256-sample Hann frames at 50% overlap with a 512-point FFT, 15 one-third
// octave bands from 150 Hz, 384 ms (30-frame) segments, -15 dB lower SDR
// clipping bound, uniform average of band/segment correlations.
double stoi(const AudioBuffer& clean, const AudioBuffer& processed);

// Frame-wise SNR over non-overlapping 30 ms frames, each frame clamped to
// [-10, 35] dB, averaged over frames with clean energy within 60 dB of the
// loudest frame.
double seg_snr(const AudioBuffer& clean, const AudioBuffer& processed);

constexpr double kSegSnrFloorDb = -10.0;
constexpr double kSegSnrCapDb = 35.0;

// Log-spectral distance: RMS over all frames and bins of the difference of
// 10*log10(power + 1e-10), 32 ms / 16 ms Hann STFT.
double lsd(const AudioBuffer& clean, const AudioBuffer& processed);

// Fills report.deltas with (report - baseline), per item and aggregate.
// Item id sets must match exactly.
MetricReport improvement_delta(const MetricReport& report,
                               const MetricReport& baseline);

std::string report_to_json(const MetricReport& report);
MetricReport report_from_json(const std::string& json_text);

// Flat CSV: header item_id,stoi,seg_snr_db,lsd_db then one row per item and
// one trailing aggregate row of means.
std::string report_to_csv(const MetricReport& report);

}  // namespace restobench
