// tools/restobench.cc

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

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "restobench/baselines.h"
#include "restobench/conditioning.h"
#include "restobench/degrade.h"
#include "restobench/dsp.h"
#include "restobench/harness.h"
#include "restobench/log.h"
#include "restobench/metrics.h"
#include "restobench/synth.h"
#include "restobench/version.h"

namespace fs = std::filesystem;
using namespace restobench;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitAdapter = 3;

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stod(tok));
  }
  if (out.empty()) throw std::runtime_error("empty list: " + csv);
  return out;
}

std::vector<std::string> parse_string_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

DegradationSpec load_spec(const std::string& path,
                          const std::optional<uint64_t>& seed_override) {
  DegradationSpec spec = spec_from_json(read_text_file(path));
  if (seed_override) spec.seed = *seed_override;
  return spec;
}

std::optional<EnhancerSpec> make_enhancer(const std::string& builtin,
                                          const std::string& adapter,
                                          double timeout_s) {
  if (!builtin.empty() && !adapter.empty())
    throw std::runtime_error("--enhancer and --adapter are mutually exclusive");
  if (builtin.empty() && adapter.empty()) return std::nullopt;
  EnhancerSpec e;
  if (!builtin.empty()) {
    e = builtin_enhancer(builtin);
  } else {
    e.adapter_cmd = adapter;
  }
  e.per_item_timeout_s = timeout_s;
  return e;
}

void print_report_summary(const MetricReport& report) {
  std::printf("items evaluated: %zu, failed: %zu\n",
              report.values.per_item.size(), report.failed_items.size());
  std::printf("  stoi       mean %.4f  std %.4f\n", report.values.stoi.mean,
              report.values.stoi.stddev);
  std::printf("  seg_snr_db mean %.3f  std %.3f\n",
              report.values.seg_snr_db.mean, report.values.seg_snr_db.stddev);
  std::printf("  lsd_db     mean %.3f  std %.3f\n", report.values.lsd_db.mean,
              report.values.lsd_db.stddev);
  if (report.deltas) {
    std::printf("  delta stoi %.4f  delta seg_snr %.3f  delta lsd %.3f\n",
                report.deltas->stoi.mean, report.deltas->seg_snr_db.mean,
                report.deltas->lsd_db.mean);
  }
}

// ---------------------------------------------------------------------------
// selftest: invariants on synthesized audio, no external data required
// ---------------------------------------------------------------------------

struct SelfTest {
  int failures = 0;

  void check(bool ok, const std::string& name) {
    std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", name.c_str());
    if (!ok) ++failures;
  }
};

bool files_identical(const std::string& a, const std::string& b) {
  return read_text_file(a) == read_text_file(b);
}

bool reports_identical(const MetricReport& a, const MetricReport& b) {
  if (a.values.per_item.size() != b.values.per_item.size()) return false;
  for (size_t i = 0; i < a.values.per_item.size(); ++i) {
    const auto& x = a.values.per_item[i];
    const auto& y = b.values.per_item[i];
    if (x.item_id != y.item_id || x.stoi != y.stoi ||
        x.seg_snr_db != y.seg_snr_db || x.lsd_db != y.lsd_db)
      return false;
  }
  return true;
}

int run_selftest(const std::string& workdir_arg, bool keep) {
  const std::string workdir =
      workdir_arg.empty()
          ? (fs::temp_directory_path() /
             ("restobench-selftest-" + std::to_string(::getpid())))
                .string()
          : workdir_arg;
  const std::string clean_dir = (fs::path(workdir) / "clean").string();
  const std::string noise_dir = (fs::path(workdir) / "noise").string();
  fs::create_directories(clean_dir);
  fs::create_directories(noise_dir);

  SelfTest t;
  const int rate = 16000;
  for (int i = 0; i < 6; ++i)
    write_wav((fs::path(clean_dir) / ("utt" + std::to_string(i) + ".wav")).string(),
              synth_vowel_sequence(2.0, rate, 1000 + static_cast<uint64_t>(i)));
  write_wav((fs::path(noise_dir) / "white.wav").string(),
            synth_white_noise(3.0, rate, 77, 0.3));
  write_wav((fs::path(noise_dir) / "hum.wav").string(),
            lowpass_degrade(synth_white_noise(3.0, rate, 78, 0.3), 2500.0));

  DegradationSpec noise_only;
  noise_only.clip.enabled_prob = 0.0;
  noise_only.lpf.enabled_prob = 0.0;
  noise_only.attenuation.enabled_prob = 0.0;
  noise_only.seed = 42;

  // determinism across runs and worker counts
  const std::string c1 = (fs::path(workdir) / "corpus1").string();
  const std::string c2 = (fs::path(workdir) / "corpus2").string();
  Manifest m1 = build_corpus(clean_dir, noise_dir, noise_only, c1, 1);
  Manifest m2 = build_corpus(clean_dir, noise_dir, noise_only, c2, 4);
  bool wavs_equal = m1.items.size() == m2.items.size();
  for (size_t i = 0; wavs_equal && i < m1.items.size(); ++i)
    wavs_equal = files_identical(m1.items[i].degraded_path,
                                 m2.items[i].degraded_path);
  t.check(wavs_equal, "determinism: degraded WAVs identical across job counts");
  t.check(reports_identical(evaluate_corpus(m1, 1), evaluate_corpus(m2, 4)),
          "determinism: reports identical across job counts");

  // baseline ordering on the noise-only corpus
  auto enhance_and_eval = [&](const Manifest& m, const std::string& dir,
                              const std::string& name) {
    const EnhancerSpec e = builtin_enhancer(name);
    Manifest em = run_enhancer(m, (fs::path(dir) / "manifest.json").string(),
                               e, (fs::path(dir) / ("restored_" + name)).string(), 2);
    return evaluate_corpus(em, 2);
  };
  const MetricReport r_pass = enhance_and_eval(m1, c1, "passthrough");
  const MetricReport r_sub = enhance_and_eval(m1, c1, "spectral_subtract");
  const MetricReport r_oracle = enhance_and_eval(m1, c1, "oracle_mask");
  t.check(r_oracle.values.stoi.mean >= r_sub.values.stoi.mean - 1e-6 &&
              r_sub.values.stoi.mean >= r_pass.values.stoi.mean - 1e-6,
          "ordering: oracle_mask >= spectral_subtract >= passthrough (mean STOI)");

  // masking cannot recover attenuated speech
  DegradationSpec att_only = noise_only;
  att_only.attenuation.enabled_prob = 1.0;
  att_only.noise.snr_set_db = {kNoiselessSnrDb};
  const std::string c3 = (fs::path(workdir) / "corpus_att").string();
  Manifest m3 = build_corpus(clean_dir, noise_dir, att_only, c3, 2);
  const MetricReport r_att = enhance_and_eval(m3, c3, "oracle_mask");
  const bool have_deltas = r_oracle.deltas && r_att.deltas;
  t.check(have_deltas &&
              r_oracle.deltas->stoi.mean > r_att.deltas->stoi.mean,
          "masking limitation: noise-only STOI delta exceeds attenuation-only");

  // conditioning mechanics
  {
    FeatureMatrix fm;
    fm.layers = 1;
    fm.frames = 3;
    fm.dim = 1;
    fm.frame_rate_hz = 50.0f;
    fm.values = {0.0f, 1.0f, 2.0f};
    const FeatureMatrix rep = repeat_frames_to(fm, 7, 100.0f);
    const std::vector<float> want = {0, 0, 0, 1, 1, 2, 2};
    bool map_ok = rep.frames == 7;
    for (size_t i = 0; map_ok && i < 7; ++i)
      map_ok = rep.values[i] == want[i];
    t.check(map_ok, "conditioning: frame repetition map");

    const std::string feat_path = (fs::path(workdir) / "t.feat").string();
    store_features(rep, feat_path);
    const FeatureMatrix back = load_features(feat_path);
    t.check(back.values == rep.values && back.frames == rep.frames,
            "conditioning: FEAT1 round trip");
  }

  // clip idempotence (absolute threshold; a peak-relative threshold shrinks
  // with the clipped peak, so only the absolute mode can be idempotent)
  {
    const AudioBuffer x = synth_vowel_sequence(1.0, rate, 5);
    const AudioBuffer once = clip_signal(x, 0.2, ClipMode::kAbsolute);
    const AudioBuffer twice = clip_signal(once, 0.2, ClipMode::kAbsolute);
    t.check(once.samples == twice.samples, "degrade: clip idempotence");
  }

  if (t.failures == 0 && !keep) {
    std::error_code ec;
    fs::remove_all(workdir, ec);
  } else if (t.failures != 0) {
    std::fprintf(stderr, "selftest artifacts kept in %s\n", workdir.c_str());
  }
  std::printf("selftest: %d failure(s)\n", t.failures);
  return t.failures == 0 ? kExitOk : kExitData;
}

// Adapter-protocol wrapper over the builtin baselines, so the external
// adapter path can be exercised without any third-party restorer:
//   restobench adapter-baseline <name> <manifest.json> <out_dir>
int run_adapter_baseline(const std::string& name, const std::string& manifest_path,
                         const std::string& out_dir) {
  const Manifest manifest = load_manifest(manifest_path);
  const EnhancerSpec e = builtin_enhancer(name);
  fs::create_directories(out_dir);
  for (const ManifestItem& item : manifest.items) {
    const AudioBuffer degraded = read_wav(item.degraded_path);
    AudioBuffer restored;
    switch (*e.builtin) {
      case Builtin::kPassthrough: restored = passthrough(degraded); break;
      case Builtin::kOracleMask:
        restored = oracle_mask(degraded, read_wav(item.clean_path));
        break;
      case Builtin::kDeclip: {
        const float peak = peak_abs(degraded);
        restored = peak > 0.0f ? declip_interpolate(degraded, peak) : degraded;
        break;
      }
      case Builtin::kSpectralSubtract:
        restored = spectral_subtract(degraded);
        break;
    }
    write_wav((fs::path(out_dir) / (item.item_id + ".wav")).string(), restored);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"restobench: degraded-speech corpus synthesis and restoration "
               "benchmarking"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  int exit_code = kExitOk;
  int jobs = 0;
  const auto add_jobs = [&jobs](CLI::App* cmd) {
    cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  };

  // ---- degrade ----
  auto* degrade_cmd =
      app.add_subcommand("degrade", "synthesize a degraded corpus");
  std::string dg_clean, dg_noise, dg_spec, dg_out, dg_order;
  std::optional<uint64_t> dg_seed;
  bool dg_clip_absolute = false;
  degrade_cmd->add_option("--clean", dg_clean, "directory of clean WAVs")
      ->required();
  degrade_cmd->add_option("--noise", dg_noise, "directory of noise WAVs")
      ->required();
  degrade_cmd->add_option("--spec", dg_spec, "DegradationSpec JSON file")
      ->required();
  degrade_cmd->add_option("--out", dg_out, "output corpus directory")
      ->required();
  degrade_cmd->add_option("--seed", dg_seed,
                          "override the spec's RNG seed (default 1234)");
  degrade_cmd->add_option("--chain-order", dg_order,
                          "comma list of attenuate,clip,lowpass");
  degrade_cmd->add_flag("--clip-absolute", dg_clip_absolute,
                        "treat clip ratios as absolute amplitudes");
  add_jobs(degrade_cmd);
  degrade_cmd->callback([&] {
    const DegradationSpec spec = load_spec(dg_spec, dg_seed);
    const auto order = dg_order.empty() ? default_chain_order()
                                        : chain_order_from_string(dg_order);
    const ClipMode mode = dg_clip_absolute ? ClipMode::kAbsolute
                                           : ClipMode::kRelativePeak;
    const Manifest m =
        build_corpus(dg_clean, dg_noise, spec, dg_out, jobs, order, mode);
    std::printf("corpus: %zu item(s), %zu skipped -> %s\n", m.items.size(),
                m.skipped.size(), dg_out.c_str());
  });

  // ---- enhance ----
  auto* enhance_cmd =
      app.add_subcommand("enhance", "run a restorer over a corpus");
  std::string en_manifest, en_builtin, en_adapter, en_out;
  double en_timeout = 60.0;
  enhance_cmd->add_option("--manifest", en_manifest, "corpus manifest.json")
      ->required();
  enhance_cmd->add_option("--enhancer", en_builtin,
                          "builtin: passthrough|oracle_mask|declip|"
                          "spectral_subtract");
  enhance_cmd->add_option("--adapter", en_adapter,
                          "external adapter command (appended: manifest, out)");
  enhance_cmd->add_option("--out", en_out, "directory for restored WAVs")
      ->required();
  enhance_cmd->add_option("--timeout", en_timeout,
                          "per-item adapter timeout in seconds")
      ->capture_default_str();
  add_jobs(enhance_cmd);
  enhance_cmd->callback([&] {
    const auto enhancer = make_enhancer(en_builtin, en_adapter, en_timeout);
    if (!enhancer)
      throw std::runtime_error("enhance needs --enhancer or --adapter");
    const Manifest m = load_manifest(en_manifest);
    const Manifest out = run_enhancer(m, en_manifest, *enhancer, en_out, jobs);
    const std::string out_manifest =
        (fs::path(en_out) / "manifest.json").string();
    save_manifest(out, out_manifest);
    size_t failed = 0;
    for (const auto& item : out.items)
      if (item.failed_reason) ++failed;
    std::printf("enhanced: %zu item(s), %zu failed -> %s\n",
                out.items.size() - failed, failed, out_manifest.c_str());
    if (failed > 0) exit_code = kExitAdapter;
  });

  // ---- evaluate ----
  auto* eval_cmd = app.add_subcommand(
      "evaluate", "score restored (or degraded) audio against clean");
  std::string ev_manifest, ev_json, ev_csv;
  eval_cmd->add_option("--manifest", ev_manifest, "corpus manifest.json")
      ->required();
  eval_cmd->add_option("--out-json", ev_json, "report JSON path");
  eval_cmd->add_option("--out-csv", ev_csv, "report CSV path");
  add_jobs(eval_cmd);
  eval_cmd->callback([&] {
    const Manifest m = load_manifest(ev_manifest);
    const MetricReport report = evaluate_corpus(m, jobs);
    const fs::path base = fs::path(ev_manifest).parent_path();
    const std::string json_path =
        ev_json.empty() ? (base / "report.json").string() : ev_json;
    const std::string csv_path =
        ev_csv.empty() ? (base / "report.csv").string() : ev_csv;
    write_text_file(json_path, report_to_json(report));
    write_text_file(csv_path, report_to_csv(report));
    print_report_summary(report);
    std::printf("report -> %s, %s\n", json_path.c_str(), csv_path.c_str());
  });

  // ---- sweep-att / sweep-snr ----
  auto* att_cmd = app.add_subcommand(
      "sweep-att", "attenuation-length sweep, all else fixed");
  auto* snr_cmd = app.add_subcommand("sweep-snr", "SNR-grid sweep");
  std::string sw_clean, sw_noise, sw_spec, sw_out, sw_builtin, sw_adapter;
  std::string sw_lengths, sw_grid;
  double sw_timeout = 60.0;
  for (CLI::App* cmd : {att_cmd, snr_cmd}) {
    cmd->add_option("--clean", sw_clean, "directory of clean WAVs")->required();
    cmd->add_option("--noise", sw_noise, "directory of noise WAVs")->required();
    cmd->add_option("--spec", sw_spec, "base DegradationSpec JSON")->required();
    cmd->add_option("--out", sw_out, "output directory")->required();
    cmd->add_option("--enhancer", sw_builtin, "builtin restorer name");
    cmd->add_option("--adapter", sw_adapter, "external adapter command");
    cmd->add_option("--timeout", sw_timeout, "per-item adapter timeout (s)");
    add_jobs(cmd);
  }
  att_cmd->add_option("--lengths", sw_lengths,
                      "comma list of lengths in ms (default 0..200 step 25)");
  snr_cmd->add_option("--grid", sw_grid,
                      "comma list of SNRs in dB (default -2.5..17.5 step 2.5)");
  att_cmd->callback([&] {
    const DegradationSpec spec = load_spec(sw_spec, std::nullopt);
    const auto enhancer = make_enhancer(sw_builtin, sw_adapter, sw_timeout);
    const auto lengths = sw_lengths.empty() ? default_attenuation_lengths()
                                            : parse_double_list(sw_lengths);
    const SweepResult result = sweep_attenuation(
        sw_clean, sw_noise, spec, lengths, enhancer, sw_out, jobs);
    write_text_file((fs::path(sw_out) / "sweep_att.csv").string(),
                    sweep_to_csv(result));
    write_text_file((fs::path(sw_out) / "sweep_att.json").string(),
                    sweep_to_json(result));
    std::printf("%s", sweep_to_csv(result).c_str());
  });
  snr_cmd->callback([&] {
    const DegradationSpec spec = load_spec(sw_spec, std::nullopt);
    const auto enhancer = make_enhancer(sw_builtin, sw_adapter, sw_timeout);
    const auto grid =
        sw_grid.empty() ? default_snr_grid() : parse_double_list(sw_grid);
    const SweepResult result =
        sweep_snr(sw_clean, sw_noise, spec, grid, enhancer, sw_out, jobs);
    write_text_file((fs::path(sw_out) / "sweep_snr.csv").string(),
                    sweep_to_csv(result));
    write_text_file((fs::path(sw_out) / "sweep_snr.json").string(),
                    sweep_to_json(result));
    std::printf("%s", sweep_to_csv(result).c_str());
  });

  // ---- matrix ----
  auto* matrix_cmd = app.add_subcommand(
      "matrix", "single-distortion matrix (noise, clip, lpf, att, all)");
  std::string mx_clean, mx_noise, mx_spec, mx_out, mx_builtin, mx_adapter;
  std::string mx_columns;
  double mx_timeout = 60.0;
  matrix_cmd->add_option("--clean", mx_clean, "directory of clean WAVs")
      ->required();
  matrix_cmd->add_option("--noise", mx_noise, "directory of noise WAVs")
      ->required();
  matrix_cmd->add_option("--spec", mx_spec, "base DegradationSpec JSON")
      ->required();
  matrix_cmd->add_option("--out", mx_out, "output directory")->required();
  matrix_cmd->add_option("--columns", mx_columns,
                         "comma list from noise,clip,lpf,att,all");
  matrix_cmd->add_option("--enhancer", mx_builtin, "builtin restorer name");
  matrix_cmd->add_option("--adapter", mx_adapter, "external adapter command");
  matrix_cmd->add_option("--timeout", mx_timeout, "per-item adapter timeout (s)");
  add_jobs(matrix_cmd);
  matrix_cmd->callback([&] {
    const DegradationSpec spec = load_spec(mx_spec, std::nullopt);
    const auto enhancer = make_enhancer(mx_builtin, mx_adapter, mx_timeout);
    const auto columns = mx_columns.empty()
                             ? std::vector<std::string>{"noise", "clip", "lpf",
                                                        "att", "all"}
                             : parse_string_list(mx_columns);
    const auto result =
        run_matrix(mx_clean, mx_noise, spec, columns, enhancer, mx_out, jobs);
    write_text_file((fs::path(mx_out) / "matrix.csv").string(),
                    matrix_to_csv(result));
    std::printf("%s", matrix_to_csv(result).c_str());
  });

  // ---- features ----
  auto* feat_cmd =
      app.add_subcommand("features", "FEAT1 feature-file utilities");
  feat_cmd->require_subcommand(1);

  auto* fi = feat_cmd->add_subcommand("inspect", "print header and stats");
  std::string fi_path;
  fi->add_option("file", fi_path, "FEAT1 file")->required();
  fi->callback([&] {
    const FeatureMatrix fm = load_features(fi_path);
    double lo = fm.values[0], hi = fm.values[0], sum = 0.0;
    for (float v : fm.values) {
      lo = std::min(lo, static_cast<double>(v));
      hi = std::max(hi, static_cast<double>(v));
      sum += v;
    }
    std::printf("layers %zu, frames %zu, dim %zu, frame_rate %.3f Hz\n",
                fm.layers, fm.frames, fm.dim,
                static_cast<double>(fm.frame_rate_hz));
    std::printf("values: min %.6g, max %.6g, mean %.6g\n", lo, hi,
                sum / static_cast<double>(fm.values.size()));
  });

  auto* fa = feat_cmd->add_subcommand(
      "average", "softmax-weighted layer average (L -> 1)");
  std::string fa_in, fa_out, fa_logits;
  fa->add_option("--in", fa_in, "input FEAT1")->required();
  fa->add_option("--out", fa_out, "output FEAT1")->required();
  fa->add_option("--logits", fa_logits,
                 "comma list of layer logits (default uniform)");
  fa->callback([&] {
    const FeatureMatrix fm = load_features(fa_in);
    LayerWeights lw;
    lw.logits = fa_logits.empty() ? std::vector<double>(fm.layers, 0.0)
                                  : parse_double_list(fa_logits);
    store_features(weighted_layer_average(fm, lw), fa_out);
    std::printf("averaged %zu layer(s) -> %s\n", fm.layers, fa_out.c_str());
  });

  auto* fr = feat_cmd->add_subcommand("repeat",
                                      "repeat frames to a target count/rate");
  std::string fr_in, fr_out;
  uint64_t fr_frames = 0;
  double fr_rate = 0.0;
  fr->add_option("--in", fr_in, "input FEAT1")->required();
  fr->add_option("--out", fr_out, "output FEAT1")->required();
  fr->add_option("--frames", fr_frames, "target frame count")->required();
  fr->add_option("--rate", fr_rate, "target frame rate in Hz")->required();
  fr->callback([&] {
    const FeatureMatrix fm = load_features(fr_in);
    store_features(repeat_frames_to(fm, fr_frames, static_cast<float>(fr_rate)),
                   fr_out);
    std::printf("%zu -> %llu frame(s) -> %s\n", fm.frames,
                static_cast<unsigned long long>(fr_frames), fr_out.c_str());
  });

  auto* fc = feat_cmd->add_subcommand(
      "concat", "concatenate two aligned streams along the feature dim");
  std::string fc_a, fc_b, fc_out;
  fc->add_option("--a", fc_a, "first FEAT1 (dims first)")->required();
  fc->add_option("--b", fc_b, "second FEAT1")->required();
  fc->add_option("--out", fc_out, "output FEAT1")->required();
  fc->callback([&] {
    const FeatureMatrix a = load_features(fc_a);
    const FeatureMatrix b = load_features(fc_b);
    const FeatureMatrix out = concat_features(a, b);
    store_features(out, fc_out);
    std::printf("concat: %zu + %zu -> %zu dims -> %s\n", a.dim, b.dim, out.dim,
                fc_out.c_str());
  });

  // ---- selftest ----
  auto* self_cmd = app.add_subcommand(
      "selftest", "run invariant checks on synthesized audio");
  std::string st_workdir;
  bool st_keep = false;
  self_cmd->add_option("--workdir", st_workdir, "working directory");
  self_cmd->add_flag("--keep", st_keep, "keep generated files");
  self_cmd->callback([&] { exit_code = run_selftest(st_workdir, st_keep); });

  // ---- adapter-baseline ----
  auto* ab_cmd = app.add_subcommand(
      "adapter-baseline",
      "builtin baselines behind the external adapter protocol");
  std::string ab_name, ab_manifest, ab_out;
  ab_cmd->add_option("name", ab_name, "baseline name")->required();
  ab_cmd->add_option("manifest", ab_manifest, "manifest.json")->required();
  ab_cmd->add_option("out_dir", ab_out, "output directory")->required();
  ab_cmd->callback(
      [&] { exit_code = run_adapter_baseline(ab_name, ab_manifest, ab_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitData;
  }
  return exit_code;
}
