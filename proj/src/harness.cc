// src/harness.cc

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

#include "restobench/harness.h"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "restobench/baselines.h"
#include "restobench/dsp.h"
#include "restobench/log.h"
#include "restobench/parallel.h"
#include "restobench/rng.h"
#include "restobench/subprocess.h"
#include "restobench/version.h"

namespace restobench {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr uint64_t kPurposeNoiseOrder = 0x6e6f726472ULL;  // "nordr"
constexpr uint64_t kPurposeTilePhase = 0x74696c65ULL;     // "tile"

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

std::vector<std::string> list_wavs(const std::string& dir) {
  if (!fs::is_directory(dir))
    throw std::runtime_error("not a directory: " + dir);
  std::vector<std::string> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (ext == ".wav") out.push_back(entry.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// item ids are the clean-file stems, disambiguated by index on collision
std::vector<std::string> assign_item_ids(const std::vector<std::string>& paths) {
  std::vector<std::string> ids(paths.size());
  std::set<std::string> seen;
  for (size_t i = 0; i < paths.size(); ++i) {
    std::string id = fs::path(paths[i]).stem().string();
    if (!seen.insert(id).second) {
      id += "__" + std::to_string(i);
      seen.insert(id);
    }
    ids[i] = id;
  }
  return ids;
}

// Noise assignment and preparation: resampled to the speech rate and, when
// shorter than the speech, tiled cyclically from a seeded phase.
AudioBuffer prepare_noise(const AudioBuffer& noise, int target_rate,
                          size_t min_len, uint64_t item_stream) {
  AudioBuffer n = noise.sample_rate == target_rate
                      ? noise
                      : resample(noise, target_rate);
  if (n.size() >= min_len) return n;
  if (n.empty()) throw std::runtime_error("empty noise file");
  Rng rng(item_stream ^ splitmix64(kPurposeTilePhase));
  const size_t phase = rng.uniform_int(n.size());
  AudioBuffer tiled;
  tiled.sample_rate = target_rate;
  tiled.samples.resize(min_len);
  for (size_t i = 0; i < min_len; ++i)
    tiled.samples[i] = n.samples[(phase + i) % n.size()];
  return tiled;
}

AudioBuffer run_builtin(Builtin builtin, const AudioBuffer& degraded,
                        const ManifestItem& item) {
  switch (builtin) {
    case Builtin::kPassthrough:
      return passthrough(degraded);
    case Builtin::kOracleMask:
      return oracle_mask(degraded, read_wav(item.clean_path));
    case Builtin::kDeclip: {
      const float peak = peak_abs(degraded);
      if (peak == 0.0f) return degraded;
      return declip_interpolate(degraded, peak);
    }
    case Builtin::kSpectralSubtract:
      return spectral_subtract(degraded);
  }
  throw std::runtime_error("unknown builtin enhancer");
}

json item_to_json(const ManifestItem& item) {
  json j;
  j["item_id"] = item.item_id;
  j["clean_path"] = item.clean_path;
  j["noise_path"] = item.noise_path;
  j["degraded_path"] = item.degraded_path;
  j["restored_path"] =
      item.restored_path ? json(*item.restored_path) : json(nullptr);
  j["failed_reason"] =
      item.failed_reason ? json(*item.failed_reason) : json(nullptr);
  j["applied"] = json::parse(applied_to_json(item.applied));
  return j;
}

ManifestItem item_from_json(const json& j) {
  ManifestItem item;
  item.item_id = j.at("item_id").get<std::string>();
  item.clean_path = j.at("clean_path").get<std::string>();
  item.noise_path = j.at("noise_path").get<std::string>();
  item.degraded_path = j.at("degraded_path").get<std::string>();
  if (j.contains("restored_path") && !j["restored_path"].is_null())
    item.restored_path = j["restored_path"].get<std::string>();
  if (j.contains("failed_reason") && !j["failed_reason"].is_null())
    item.failed_reason = j["failed_reason"].get<std::string>();
  item.applied = applied_from_json(j.at("applied").dump());
  return item;
}

std::string format_sweep_value(double v) {
  std::ostringstream os;
  if (v == std::floor(v) && std::fabs(v) < 1e9) {
    os << static_cast<long long>(v);
  } else {
    os << v;
  }
  return os.str();
}

const char* kMetricNotes =
    "stoi follows the canonical definition; seg_snr_db and lsd_db are "
    "deterministic substitutes for the PESQ and NISQA columns, which this "
    "toolkit does not compute";

}  // namespace

EnhancerSpec builtin_enhancer(const std::string& name) {
  EnhancerSpec spec;
  if (name == "passthrough") spec.builtin = Builtin::kPassthrough;
  else if (name == "oracle_mask") spec.builtin = Builtin::kOracleMask;
  else if (name == "declip") spec.builtin = Builtin::kDeclip;
  else if (name == "spectral_subtract") spec.builtin = Builtin::kSpectralSubtract;
  else throw std::runtime_error("unknown builtin enhancer: " + name);
  return spec;
}

std::string builtin_name(Builtin b) {
  switch (b) {
    case Builtin::kPassthrough: return "passthrough";
    case Builtin::kOracleMask: return "oracle_mask";
    case Builtin::kDeclip: return "declip";
    case Builtin::kSpectralSubtract: return "spectral_subtract";
  }
  return "?";
}

std::vector<double> default_snr_grid() {
  std::vector<double> grid(9);
  for (int i = 0; i < 9; ++i) grid[static_cast<size_t>(i)] = -2.5 + 2.5 * i;
  return grid;
}

std::vector<double> default_attenuation_lengths() {
  std::vector<double> lengths(9);
  for (int i = 0; i < 9; ++i) lengths[static_cast<size_t>(i)] = 25.0 * i;
  return lengths;
}

void ExperimentConfig::validate() const {
  auto check_increasing = [](const std::vector<double>& v, const char* name) {
    if (v.empty())
      throw std::runtime_error(std::string(name) + " must be non-empty");
    for (size_t i = 1; i < v.size(); ++i)
      if (!(v[i] > v[i - 1]))
        throw std::runtime_error(std::string(name) +
                                 " must be strictly increasing");
  };
  if (kind == ExperimentKind::kAttenuationSweep)
    check_increasing(attenuation_lengths_ms, "attenuation_lengths_ms");
  if (kind == ExperimentKind::kSnrSweep)
    check_increasing(snr_grid_db, "snr_grid_db");
  if (kind == ExperimentKind::kMatrix && matrix_columns.empty())
    throw std::runtime_error("matrix_columns must be non-empty");
}

Manifest build_corpus(const std::string& clean_dir,
                      const std::string& noise_dir,
                      const DegradationSpec& spec, const std::string& out_dir,
                      int jobs, const std::vector<ChainStage>& order,
                      ClipMode clip_mode) {
  spec.validate();
  const std::vector<std::string> clean_paths = list_wavs(clean_dir);
  if (clean_paths.empty()) throw std::runtime_error("no input items");
  const std::vector<std::string> noise_paths = list_wavs(noise_dir);
  if (noise_paths.empty()) throw std::runtime_error("no noise files");

  fs::create_directories(out_dir);
  const std::vector<std::string> ids = assign_item_ids(clean_paths);

  // round-robin over a seeded shuffle of the noise list
  std::vector<size_t> noise_order(noise_paths.size());
  for (size_t i = 0; i < noise_order.size(); ++i) noise_order[i] = i;
  Rng shuffle_rng(spec.seed ^ splitmix64(kPurposeNoiseOrder));
  for (size_t i = noise_order.size(); i > 1; --i)
    std::swap(noise_order[i - 1], noise_order[shuffle_rng.uniform_int(i)]);

  struct Slot {
    std::optional<ManifestItem> item;
    std::optional<SkippedInput> skipped;
  };
  std::vector<Slot> slots(clean_paths.size());

  parallel_for(clean_paths.size(), jobs, [&](size_t i) {
    const std::string& clean_path = clean_paths[i];
    try {
      AudioBuffer clean = read_wav(clean_path);
      if (clean.empty()) throw std::runtime_error("empty audio");
      const std::string& noise_path =
          noise_paths[noise_order[i % noise_order.size()]];
      AudioBuffer noise = read_wav(noise_path);

      AppliedDegradation applied =
          sample_applied(spec, i, clean.size(), clean.sample_rate);
      applied.noise_source = fs::path(noise_path).filename().string();
      noise = prepare_noise(noise, clean.sample_rate, clean.size(),
                            applied.seed_used);

      AudioBuffer degraded = apply_chain(clean, noise, applied, order, clip_mode);
      const std::string degraded_path =
          (fs::path(out_dir) / (ids[i] + ".wav")).string();
      write_wav(degraded_path, degraded);
      write_text_file((fs::path(out_dir) / (ids[i] + ".applied.json")).string(),
                      applied_to_json(applied));

      ManifestItem item;
      item.item_id = ids[i];
      item.clean_path = clean_path;
      item.noise_path = noise_path;
      item.degraded_path = degraded_path;
      item.applied = std::move(applied);
      slots[i].item = std::move(item);
    } catch (const std::exception& e) {
      log_message(LogLevel::kWarn,
                  "skipping " + clean_path + ": " + e.what());
      slots[i].skipped = SkippedInput{clean_path, e.what()};
    }
  });

  Manifest manifest;
  manifest.spec = spec;
  manifest.created_utc = utc_timestamp();
  manifest.tool_version = kToolVersion;
  for (auto& slot : slots) {
    if (slot.item) manifest.items.push_back(std::move(*slot.item));
    if (slot.skipped) manifest.skipped.push_back(std::move(*slot.skipped));
  }
  if (manifest.items.empty())
    throw std::runtime_error("no input items could be processed");
  save_manifest(manifest, (fs::path(out_dir) / "manifest.json").string());
  return manifest;
}

Manifest run_enhancer(const Manifest& manifest,
                      const std::string& manifest_path,
                      const EnhancerSpec& enhancer, const std::string& out_dir,
                      int jobs) {
  Manifest out = manifest;
  fs::create_directories(out_dir);

  if (enhancer.builtin) {
    parallel_for(out.items.size(), jobs, [&](size_t i) {
      ManifestItem& item = out.items[i];
      if (item.failed_reason) return;
      try {
        const AudioBuffer degraded = read_wav(item.degraded_path);
        const AudioBuffer restored =
            run_builtin(*enhancer.builtin, degraded, item);
        const std::string path =
            (fs::path(out_dir) / (item.item_id + ".wav")).string();
        write_wav(path, restored);
        item.restored_path = path;
      } catch (const std::exception& e) {
        item.failed_reason = e.what();
      }
    });
    return out;
  }

  // external adapter: one process per corpus
  std::vector<std::string> argv = split_command(enhancer.adapter_cmd);
  if (argv.empty()) throw std::runtime_error("empty adapter command");
  argv.push_back(manifest_path);
  argv.push_back(out_dir);
  const double timeout =
      enhancer.per_item_timeout_s * std::max<size_t>(1, out.items.size());
  const SubprocessResult run = run_subprocess(argv, timeout);

  std::string corpus_failure;
  if (run.spawn_failed) {
    corpus_failure = "adapter could not be started: " + argv[0];
  } else if (run.timed_out) {
    corpus_failure = "adapter timeout";
  } else if (run.exit_code != 0) {
    corpus_failure = "adapter exited with code " + std::to_string(run.exit_code);
  }

  for (ManifestItem& item : out.items) {
    if (item.failed_reason) continue;
    if (!corpus_failure.empty()) {
      item.failed_reason = corpus_failure;
      continue;
    }
    const std::string path =
        (fs::path(out_dir) / (item.item_id + ".wav")).string();
    if (!fs::exists(path)) {
      item.failed_reason = "missing output";
      continue;
    }
    try {
      const AudioBuffer restored = read_wav(path);
      const AudioBuffer degraded = read_wav(item.degraded_path);
      if (restored.sample_rate != degraded.sample_rate) {
        item.failed_reason = "sample rate mismatch";
      } else if (restored.size() != degraded.size()) {
        item.failed_reason = "length mismatch";
      } else {
        item.restored_path = path;
      }
    } catch (const std::exception& e) {
      item.failed_reason = e.what();
    }
  }
  return out;
}

MetricReport evaluate_corpus(const Manifest& manifest, int jobs) {
  struct Slot {
    std::optional<ItemMetrics> values;
    std::optional<ItemMetrics> deltas;
    std::optional<FailedItem> failed;
  };
  std::vector<Slot> slots(manifest.items.size());

  parallel_for(manifest.items.size(), jobs, [&](size_t i) {
    const ManifestItem& item = manifest.items[i];
    if (item.failed_reason) {
      slots[i].failed = FailedItem{item.item_id, *item.failed_reason};
      return;
    }
    try {
      const AudioBuffer clean = read_wav(item.clean_path);
      const AudioBuffer degraded = read_wav(item.degraded_path);
      const AudioBuffer target =
          item.restored_path ? read_wav(*item.restored_path) : degraded;
      if (target.size() != clean.size())
        throw std::runtime_error("length mismatch");

      ItemMetrics values{item.item_id, stoi(clean, target),
                         seg_snr(clean, target), lsd(clean, target)};
      slots[i].values = values;
      if (item.restored_path) {
        ItemMetrics base{item.item_id, stoi(clean, degraded),
                         seg_snr(clean, degraded), lsd(clean, degraded)};
        slots[i].deltas =
            ItemMetrics{item.item_id, values.stoi - base.stoi,
                        values.seg_snr_db - base.seg_snr_db,
                        values.lsd_db - base.lsd_db};
      }
    } catch (const std::exception& e) {
      slots[i].failed = FailedItem{item.item_id, e.what()};
    }
  });

  MetricReport report;
  report.notes = kMetricNotes;
  bool all_have_deltas = true;
  for (const auto& slot : slots) {
    if (slot.failed) {
      report.failed_items.push_back(*slot.failed);
      continue;
    }
    report.values.per_item.push_back(*slot.values);
    if (slot.deltas) {
      if (!report.deltas) report.deltas = MetricBlock{};
      report.deltas->per_item.push_back(*slot.deltas);
    } else {
      all_have_deltas = false;
    }
  }
  if (!all_have_deltas) report.deltas.reset();
  if (report.values.per_item.empty() && report.failed_items.empty())
    throw std::runtime_error("manifest has no items to evaluate");
  report.values.recompute_aggregates();
  if (report.deltas) report.deltas->recompute_aggregates();
  return report;
}

namespace {

SweepResult run_sweep(const std::string& kind,
                      const std::string& clean_dir,
                      const std::string& noise_dir,
                      const DegradationSpec& base_spec,
                      const std::vector<double>& values,
                      const std::optional<EnhancerSpec>& enhancer,
                      const std::string& out_dir, int jobs,
                      const std::function<void(DegradationSpec&, double)>& pin) {
  if (values.empty()) throw std::runtime_error("sweep values must be non-empty");
  for (size_t i = 1; i < values.size(); ++i)
    if (!(values[i] > values[i - 1]))
      throw std::runtime_error("sweep values must be strictly increasing");

  SweepResult result;
  result.kind = kind;
  for (double v : values) {
    DegradationSpec spec = base_spec;  // same master seed across points
    pin(spec, v);
    const std::string point_dir =
        (fs::path(out_dir) / (kind + "_" + format_sweep_value(v))).string();
    Manifest manifest = build_corpus(clean_dir, noise_dir, spec, point_dir, jobs);
    if (enhancer) {
      const std::string manifest_path =
          (fs::path(point_dir) / "manifest.json").string();
      manifest = run_enhancer(manifest, manifest_path, *enhancer,
                              (fs::path(point_dir) / "restored").string(), jobs);
      save_manifest(manifest, manifest_path);
    }
    result.points.push_back({v, evaluate_corpus(manifest, jobs)});
  }
  return result;
}

}  // namespace

SweepResult sweep_attenuation(const std::string& clean_dir,
                              const std::string& noise_dir,
                              const DegradationSpec& base_spec,
                              const std::vector<double>& lengths_ms,
                              const std::optional<EnhancerSpec>& enhancer,
                              const std::string& out_dir, int jobs) {
  return run_sweep("attenuation_length_ms", clean_dir, noise_dir, base_spec,
                   lengths_ms, enhancer, out_dir, jobs,
                   [](DegradationSpec& spec, double len) {
                     if (len <= 0.0) {
                       spec.attenuation.enabled_prob = 0.0;  // disabled entry
                       return;
                     }
                     spec.attenuation.duration_lo_ms = len;
                     spec.attenuation.duration_hi_ms = len;
                   });
}

SweepResult sweep_snr(const std::string& clean_dir,
                      const std::string& noise_dir,
                      const DegradationSpec& base_spec,
                      const std::vector<double>& grid_db,
                      const std::optional<EnhancerSpec>& enhancer,
                      const std::string& out_dir, int jobs) {
  return run_sweep("snr_db", clean_dir, noise_dir, base_spec, grid_db,
                   enhancer, out_dir, jobs,
                   [](DegradationSpec& spec, double snr) {
                     spec.noise.snr_set_db = {snr};
                     spec.noise.snr_range_db.reset();
                   });
}

DegradationSpec matrix_column_spec(const DegradationSpec& base,
                                   const std::string& column) {
  DegradationSpec spec = base;
  spec.clip.enabled_prob = 0.0;
  spec.lpf.enabled_prob = 0.0;
  spec.attenuation.enabled_prob = 0.0;
  const auto noiseless = [&spec] {
    spec.noise.snr_set_db = {kNoiselessSnrDb};
    spec.noise.snr_range_db.reset();
  };
  if (column == "noise") {
    // noise settings inherited from base
  } else if (column == "clip") {
    spec.clip.enabled_prob = 1.0;
    noiseless();
  } else if (column == "lpf") {
    spec.lpf.enabled_prob = 1.0;
    noiseless();
  } else if (column == "att") {
    spec.attenuation.enabled_prob = 1.0;
    noiseless();
  } else if (column == "all") {
    spec.clip.enabled_prob = 1.0;
    spec.lpf.enabled_prob = 1.0;
    spec.attenuation.enabled_prob = 1.0;
  } else {
    throw std::runtime_error("unknown matrix column: " + column);
  }
  return spec;
}

std::vector<std::pair<std::string, MetricReport>> run_matrix(
    const std::string& clean_dir, const std::string& noise_dir,
    const DegradationSpec& base_spec,
    const std::vector<std::string>& columns,
    const std::optional<EnhancerSpec>& enhancer, const std::string& out_dir,
    int jobs) {
  if (columns.empty()) throw std::runtime_error("matrix columns must be non-empty");
  std::vector<std::pair<std::string, MetricReport>> result;
  for (const std::string& column : columns) {
    const DegradationSpec spec = matrix_column_spec(base_spec, column);
    const std::string point_dir = (fs::path(out_dir) / column).string();
    Manifest manifest = build_corpus(clean_dir, noise_dir, spec, point_dir, jobs);
    if (enhancer) {
      const std::string manifest_path =
          (fs::path(point_dir) / "manifest.json").string();
      manifest = run_enhancer(manifest, manifest_path, *enhancer,
                              (fs::path(point_dir) / "restored").string(), jobs);
      save_manifest(manifest, manifest_path);
    }
    result.emplace_back(column, evaluate_corpus(manifest, jobs));
  }
  return result;
}

std::string manifest_to_json(const Manifest& manifest) {
  json j;
  j["schema_version"] = kManifestSchemaVersion;
  j["tool_version"] = manifest.tool_version;
  j["created_utc"] = manifest.created_utc;
  j["spec"] = json::parse(spec_to_json(manifest.spec));
  json items = json::array();
  for (const auto& item : manifest.items) items.push_back(item_to_json(item));
  j["items"] = items;
  json skipped = json::array();
  for (const auto& s : manifest.skipped)
    skipped.push_back({{"path", s.path}, {"reason", s.reason}});
  j["skipped"] = skipped;
  return j.dump(2) + "\n";
}

Manifest manifest_from_json(const std::string& json_text) {
  json j = json::parse(json_text);
  Manifest manifest;
  manifest.tool_version = j.value("tool_version", "");
  manifest.created_utc = j.value("created_utc", "");
  manifest.spec = spec_from_json(j.at("spec").dump());
  std::set<std::string> ids;
  for (const auto& item : j.at("items")) {
    manifest.items.push_back(item_from_json(item));
    if (!ids.insert(manifest.items.back().item_id).second)
      throw std::runtime_error("duplicate item_id in manifest: " +
                               manifest.items.back().item_id);
  }
  if (j.contains("skipped"))
    for (const auto& s : j["skipped"])
      manifest.skipped.push_back({s.at("path").get<std::string>(),
                                  s.at("reason").get<std::string>()});
  return manifest;
}

void save_manifest(const Manifest& manifest, const std::string& path) {
  write_text_file(path, manifest_to_json(manifest));
}

Manifest load_manifest(const std::string& path) {
  return manifest_from_json(read_text_file(path));
}

namespace {

void append_sweep_rows(std::ostringstream& os, const std::string& kind,
                       double value, const MetricReport& report) {
  struct Row {
    const char* metric;
    const MetricAggregate* agg;
    const MetricAggregate* delta;
  };
  const MetricBlock& v = report.values;
  const MetricBlock* d = report.deltas ? &*report.deltas : nullptr;
  const Row rows[] = {
      {"stoi", &v.stoi, d ? &d->stoi : nullptr},
      {"seg_snr_db", &v.seg_snr_db, d ? &d->seg_snr_db : nullptr},
      {"lsd_db", &v.lsd_db, d ? &d->lsd_db : nullptr},
  };
  for (const Row& row : rows) {
    os << kind << ',' << format_sweep_value(value) << ',' << row.metric << ','
       << row.agg->mean << ',' << row.agg->stddev << ',';
    if (row.delta) os << row.delta->mean << ',' << row.delta->stddev;
    else os << ',';
    os << '\n';
  }
}

}  // namespace

std::string sweep_to_csv(const SweepResult& result) {
  std::ostringstream os;
  os.precision(9);
  os << "sweep_kind,value,metric,mean,std,delta_mean,delta_std\n";
  for (const auto& point : result.points)
    append_sweep_rows(os, result.kind, point.value, point.report);
  return os.str();
}

std::string sweep_to_json(const SweepResult& result) {
  json j;
  j["kind"] = result.kind;
  json points = json::array();
  for (const auto& point : result.points)
    points.push_back({{"value", point.value},
                      {"report", json::parse(report_to_json(point.report))}});
  j["points"] = points;
  return j.dump(2) + "\n";
}

std::string matrix_to_csv(
    const std::vector<std::pair<std::string, MetricReport>>& columns) {
  std::ostringstream os;
  os.precision(9);
  os << "column,metric,mean,std,delta_mean,delta_std\n";
  for (const auto& [name, report] : columns) {
    std::ostringstream rows;
    rows.precision(9);
    append_sweep_rows(rows, name, 0.0, report);
    // reuse the sweep row shape, dropping the numeric value column
    std::istringstream is(rows.str());
    std::string line;
    while (std::getline(is, line)) {
      const size_t first = line.find(',');
      const size_t second = line.find(',', first + 1);
      os << name << line.substr(second) << '\n';
    }
  }
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot create file: " + path);
  os << text;
  if (!os) throw std::runtime_error("failed writing file: " + path);
}

}  // namespace restobench
