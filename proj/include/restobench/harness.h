// include/restobench/harness.h

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
#include <utility>
#include <vector>

#include "restobench/degrade.h"
#include "restobench/metrics.h"

namespace restobench {

// SNR at which the scaled noise is negligible; used by single-distortion
// configurations that exclude the noise factor.
constexpr double kNoiselessSnrDb = 120.0;

struct ManifestItem {
  std::string item_id;
  std::string clean_path;
  std::string noise_path;
  std::string degraded_path;
  std::optional<std::string> restored_path;
  std::optional<std::string> failed_reason;  // enhancement failure, if any
  AppliedDegradation applied;
};

struct SkippedInput {
  std::string path;
  std::string reason;
};

struct Manifest {
  std::vector<ManifestItem> items;
  std::vector<SkippedInput> skipped;
  DegradationSpec spec;
  std::string created_utc;
  std::string tool_version;
};

enum class Builtin { kPassthrough, kOracleMask, kDeclip, kSpectralSubtract };

// Either an in-process baseline or an external adapter command. The adapter
// is invoked once per corpus as `<cmd> <manifest.json> <out_dir>` and must
// write `<out_dir>/<item_id>.wav` (mono float-32 at the input rate) for every
// item, then exit 0.
struct EnhancerSpec {
  std::optional<Builtin> builtin;
  std::string adapter_cmd;
  double per_item_timeout_s = 60.0;
};

EnhancerSpec builtin_enhancer(const std::string& name);
std::string builtin_name(Builtin b);

enum class ExperimentKind { kMatrix, kAttenuationSweep, kSnrSweep };

std::vector<double> default_snr_grid();            // 9 points, -2.5..17.5
std::vector<double> default_attenuation_lengths(); // 0..200 ms, step 25

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kSnrSweep;
  std::vector<std::string> matrix_columns = {"noise", "clip", "lpf", "att",
                                             "all"};
  std::vector<double> attenuation_lengths_ms = default_attenuation_lengths();
  std::vector<double> snr_grid_db = default_snr_grid();
  EnhancerSpec enhancer;

  void validate() const;  // sweep lists non-empty, strictly increasing
};

struct SweepPoint {
  double value = 0.0;
  MetricReport report;
};

struct SweepResult {
  std::string kind;  // "attenuation_length_ms" or "snr_db"
  std::vector<SweepPoint> points;
};

// Degrades every clean WAV against round-robin shuffled noise, writing one
// degraded WAV plus an `<item>.applied.json` sidecar per item and a
// manifest.json into out_dir. Deterministic for a fixed spec.seed.
Manifest build_corpus(const std::string& clean_dir,
                      const std::string& noise_dir,
                      const DegradationSpec& spec, const std::string& out_dir,
                      int jobs = 1,
                      const std::vector<ChainStage>& order =
                          default_chain_order(),
                      ClipMode clip_mode = ClipMode::kRelativePeak);

// Runs the enhancer over the manifest, writing restored WAVs into out_dir
// and returning the manifest with restored_path / failed_reason filled.
// manifest_path is handed to external adapters verbatim.
Manifest run_enhancer(const Manifest& manifest,
                      const std::string& manifest_path,
                      const EnhancerSpec& enhancer, const std::string& out_dir,
                      int jobs = 1);

// Scores restored (or, when absent, degraded) audio against clean. When
// restored paths are present, deltas against the degraded condition are
// included. Items that failed enhancement are excluded and counted.
MetricReport evaluate_corpus(const Manifest& manifest, int jobs = 1);

SweepResult sweep_attenuation(const std::string& clean_dir,
                              const std::string& noise_dir,
                              const DegradationSpec& base_spec,
                              const std::vector<double>& lengths_ms,
                              const std::optional<EnhancerSpec>& enhancer,
                              const std::string& out_dir, int jobs = 1);

SweepResult sweep_snr(const std::string& clean_dir,
                      const std::string& noise_dir,
                      const DegradationSpec& base_spec,
                      const std::vector<double>& grid_db,
                      const std::optional<EnhancerSpec>& enhancer,
                      const std::string& out_dir, int jobs = 1);

// Table-style single-distortion matrix: one corpus per column, evaluated
// with the given enhancer. Columns: noise, clip, lpf, att, all.
std::vector<std::pair<std::string, MetricReport>> run_matrix(
    const std::string& clean_dir, const std::string& noise_dir,
    const DegradationSpec& base_spec,
    const std::vector<std::string>& columns,
    const std::optional<EnhancerSpec>& enhancer, const std::string& out_dir,
    int jobs = 1);

// Derives the single-distortion spec for one matrix column from a base spec.
DegradationSpec matrix_column_spec(const DegradationSpec& base,
                                   const std::string& column);

std::string manifest_to_json(const Manifest& manifest);
Manifest manifest_from_json(const std::string& json_text);
void save_manifest(const Manifest& manifest, const std::string& path);
Manifest load_manifest(const std::string& path);

// One row per sweep point per metric:
// sweep_kind,value,metric,mean,std,delta_mean,delta_std
std::string sweep_to_csv(const SweepResult& result);
std::string sweep_to_json(const SweepResult& result);
std::string matrix_to_csv(
    const std::vector<std::pair<std::string, MetricReport>>& columns);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace restobench
