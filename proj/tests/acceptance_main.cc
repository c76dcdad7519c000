// tests/acceptance_main.cc

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

// Acceptance suite: one line per criterion, non-zero exit on any failure.
// Runs entirely on synthesized audio; needs only the restobench and
// fake_adapter binaries plus the shipped config files.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "restobench/baselines.h"
#include "restobench/conditioning.h"
#include "restobench/degrade.h"
#include "restobench/dsp.h"
#include "restobench/harness.h"
#include "restobench/metrics.h"
#include "restobench/rng.h"
#include "restobench/synth.h"
#include "stoi_reference.h"

using namespace restobench;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what,
            const std::string& detail = "") {
  std::printf("[%s] AC%d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion,
              what.c_str(), detail.empty() ? "" : " — ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(RESTOBENCH_BIN) + " " + args + " >/dev/null 2>&1";
  return WEXITSTATUS(std::system(cmd.c_str()));
}

struct Workspace {
  fs::path root;
  Workspace() {
    root = fs::temp_directory_path() /
           ("restobench-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(root);
    fs::create_directories(root);
  }
  ~Workspace() {
    std::error_code ec;
    fs::remove_all(root, ec);
  }
  std::string sub(const std::string& name) const {
    const fs::path p = root / name;
    fs::create_directories(p.parent_path());
    return p.string();
  }
};

void synth_corpus(const Workspace& ws, const std::string& clean_dir,
                  const std::string& noise_dir, int items, double seconds,
                  int rate, uint64_t seed0) {
  fs::create_directories(ws.root / clean_dir);
  fs::create_directories(ws.root / noise_dir);
  for (int i = 0; i < items; ++i) {
    char name[64];
    std::snprintf(name, sizeof(name), "%s/utt%02d.wav", clean_dir.c_str(), i);
    write_wav(ws.sub(name),
              synth_vowel_sequence(seconds, rate, seed0 + static_cast<uint64_t>(i)));
  }
  write_wav(ws.sub(noise_dir + "/white.wav"),
            synth_white_noise(seconds + 1.0, rate, seed0 + 1000, 0.3));
  write_wav(ws.sub(noise_dir + "/band.wav"),
            lowpass_degrade(
                synth_white_noise(seconds + 1.0, rate, seed0 + 1001, 0.3),
                3000.0));
}

// ---------------------------------------------------------------------------

void ac1_reproducibility_statement(const Workspace& ws) {
  // Absolute benchmark-table scores need trained restoration networks and an
  // external SSL model, which are out of scope here; the suite below checks
  // the reproducible properties instead. Verified shard: every report
  // declares the metric substitution in its notes header.
  synth_corpus(ws, "ac1/clean", "ac1/noise", 2, 1.5, 16000, 11000);
  const Manifest m =
      build_corpus(ws.sub("ac1/clean"), ws.sub("ac1/noise"),
                   spec_from_json(read_text_file(
                       std::string(CONFIG_DIR) + "/table2-noise.json")),
                   ws.sub("ac1/out"), 2);
  const MetricReport r = evaluate_corpus(m, 2);
  const bool notes_ok = r.notes.find("PESQ") != std::string::npos &&
                        r.notes.find("NISQA") != std::string::npos;
  report(1, notes_ok,
         "absolute benchmark scores are declared non-reproducible",
         "reports carry the PESQ/NISQA substitution note; property-based "
         "criteria below stand in");
}

void ac2_protocol_fidelity() {
  const auto t0 = std::chrono::steady_clock::now();
  const DegradationSpec spec = spec_from_json(
      read_text_file(std::string(CONFIG_DIR) + "/paper-default.json"));
  const int fs = 16000;
  const size_t len = 48000;  // 3 s

  int n_clip = 0, n_lpf = 0, n_att = 0;
  bool ranges_ok = true;
  for (uint64_t i = 0; i < 1000; ++i) {
    const AppliedDegradation a = sample_applied(spec, i, len, fs);
    if (a.clip_ratio) {
      ++n_clip;
      ranges_ok &= *a.clip_ratio >= 0.06 && *a.clip_ratio <= 0.9;
    }
    if (a.lpf_cutoff_hz) {
      ++n_lpf;
      ranges_ok &= *a.lpf_cutoff_hz >= 2000.0 && *a.lpf_cutoff_hz <= 8000.0;
    }
    if (!a.attenuation_regions.empty()) ++n_att;
    ranges_ok &= a.attenuation_regions.size() <= 20;
    for (const Region& r : a.attenuation_regions) {
      ranges_ok &= r.gain >= 0.0 && r.gain <= 0.01;
      const double ms = 1000.0 * static_cast<double>(r.length_samples) / fs;
      ranges_ok &= ms >= 10.0 - 0.5 && ms <= 50.0 + 0.5;
    }
  }
  const double rc = n_clip / 1000.0, rl = n_lpf / 1000.0, ra = n_att / 1000.0;
  const bool rates_ok = std::fabs(rc - 0.25) <= 0.03 &&
                        std::fabs(rl - 0.5) <= 0.03 &&
                        std::fabs(ra - 0.8) <= 0.03;
  const double elapsed = seconds_since(t0);
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "rates clip %.3f / lpf %.3f / att %.3f, %.2f s", rc, rl, ra,
                elapsed);
  report(2, ranges_ok && rates_ok && elapsed < 5.0,
         "1000 draws honor all parameter ranges and enable rates +/-3%",
         detail);
}

void ac3_snr_exactness() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(33001);
  bool ok = true;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int rate = trial % 3 == 0 ? 16000 : (trial % 3 == 1 ? 8000 : 22050);
    const AudioBuffer speech = synth_vowel_sequence(
        rng.uniform(0.5, 1.5), rate, 12000 + static_cast<uint64_t>(trial));
    const AudioBuffer noise = synth_white_noise(
        speech.duration_s() + rng.uniform(0.1, 1.0), rate,
        13000 + static_cast<uint64_t>(trial), 0.25);
    const double target = rng.uniform(-10.0, 30.0);
    const size_t offset = rng.uniform_int(noise.size() - speech.size() + 1);
    auto [mix, scaled] = mix_noise_at_snr(speech, noise, target, offset);
    const double measured = 20.0 * std::log10(rms(speech) / rms(scaled));
    worst = std::max(worst, std::fabs(measured - target));
    ok &= std::fabs(measured - target) <= 0.01;
  }
  const double elapsed = seconds_since(t0);
  char detail[120];
  std::snprintf(detail, sizeof(detail), "worst |error| %.5f dB, %.2f s", worst,
                elapsed);
  report(3, ok && elapsed < 10.0,
         "100 re-measured component SNRs within 0.01 dB", detail);
}

void ac4_determinism(const Workspace& ws) {
  const auto t0 = std::chrono::steady_clock::now();
  synth_corpus(ws, "ac4/clean", "ac4/noise", 20, 3.0, 16000, 14000);
  const std::string spec_path = std::string(CONFIG_DIR) + "/paper-default.json";

  auto pipeline = [&](const std::string& tag, int jobs) {
    const std::string corpus = ws.sub("ac4/corpus_" + tag);
    const std::string restored = ws.sub("ac4/restored_" + tag);
    int rc = run_cli("degrade --clean " + ws.sub("ac4/clean") + " --noise " +
                     ws.sub("ac4/noise") + " --spec " + spec_path +
                     " --seed 7 --jobs " + std::to_string(jobs) + " --out " +
                     corpus);
    rc |= run_cli("enhance --manifest " + corpus +
                  "/manifest.json --enhancer oracle_mask --jobs " +
                  std::to_string(jobs) + " --out " + restored);
    rc |= run_cli("evaluate --manifest " + restored +
                  "/manifest.json --jobs " + std::to_string(jobs));
    return rc;
  };

  int rc = pipeline("a1", 1);
  rc |= pipeline("a2", 1);
  rc |= pipeline("b1", 8);
  rc |= pipeline("b2", 8);

  bool bytes_ok = rc == 0;
  const std::vector<std::string> runs = {"a1", "a2", "b1", "b2"};
  const Manifest ref = load_manifest(ws.sub("ac4/corpus_a1/manifest.json"));
  for (const auto& run : runs) {
    if (!bytes_ok) break;
    const Manifest m = load_manifest(ws.sub("ac4/corpus_" + run + "/manifest.json"));
    bytes_ok &= m.items.size() == ref.items.size() && m.items.size() == 20;
    for (size_t i = 0; bytes_ok && i < m.items.size(); ++i) {
      bytes_ok &= read_text_file(m.items[i].degraded_path) ==
                  read_text_file(ref.items[i].degraded_path);
      bytes_ok &= read_text_file(ws.sub("ac4/restored_" + run + "/" +
                                        m.items[i].item_id + ".wav")) ==
                  read_text_file(ws.sub("ac4/restored_a1/" +
                                        ref.items[i].item_id + ".wav"));
    }
  }

  bool reports_ok = rc == 0;
  const std::string ref_report =
      read_text_file(ws.sub("ac4/restored_a1/report.json"));
  for (const auto& run : runs) {
    if (!reports_ok) break;
    reports_ok &= read_text_file(ws.sub("ac4/restored_" + run + "/report.json")) ==
                  ref_report;
  }

  const double elapsed = seconds_since(t0);
  char detail[120];
  std::snprintf(detail, sizeof(detail),
                "4 pipeline runs (jobs 1 and 8), %.1f s", elapsed);
  report(4, rc == 0 && bytes_ok && reports_ok && elapsed < 60.0,
         "degrade+enhance+evaluate byte-identical across runs and job counts",
         detail);
}

void ac5_stoi_oracle() {
  Rng rng(55001);
  bool match_ok = true;
  double worst = 0.0;
  for (int pair = 0; pair < 20; ++pair) {
    const AudioBuffer clean =
        synth_vowel_sequence(3.0, 10000, 15000 + static_cast<uint64_t>(pair));
    const AudioBuffer noise = synth_white_noise(
        3.5, 10000, 16000 + static_cast<uint64_t>(pair), 0.25);
    const double snr = rng.uniform(-5.0, 20.0);
    auto [noisy, scaled] = mix_noise_at_snr(clean, noise, snr);
    const double fast = stoi(clean, noisy);
    const double slow =
        test::reference_stoi(clean.samples, noisy.samples, 10000);
    worst = std::max(worst, std::fabs(fast - slow));
    match_ok &= std::fabs(fast - slow) <= 1e-4;
  }

  const AudioBuffer x = synth_vowel_sequence(3.0, 16000, 17000);
  const bool self_ok = std::fabs(stoi(x, x) - 1.0) <= 1e-9;

  const AudioBuffer noise = synth_white_noise(3.5, 16000, 17001, 0.25);
  bool mono_ok = true;
  double prev = -1.0;
  for (double snr : {-5.0, 0.0, 5.0, 10.0, 15.0, 20.0}) {
    auto [noisy, scaled] = mix_noise_at_snr(x, noise, snr);
    const double v = stoi(x, noisy);
    mono_ok &= v >= prev - 1e-3;
    prev = v;
  }

  char detail[120];
  std::snprintf(detail, sizeof(detail),
                "worst |impl-ref| %.2e, stoi(x,x)-1 within 1e-9, grid "
                "non-decreasing",
                worst);
  report(5, match_ok && self_ok && mono_ok,
         "STOI matches the independent reference within 1e-4", detail);
}

void ac6_metric_analytics() {
  const AudioBuffer x = synth_vowel_sequence(3.0, 16000, 18000);
  AudioBuffer half = x;
  for (auto& s : half.samples) s *= 0.5f;
  const double snr_half = seg_snr(x, half);
  const bool half_ok = std::fabs(snr_half - 6.02) <= 0.05;

  const AudioBuffer w = synth_white_noise(2.0, 16000, 18001, 0.25);
  AudioBuffer ten = w;
  for (auto& s : ten.samples) s *= 10.0f;
  const double lsd_ten = lsd(w, ten);
  const bool lsd_ok = std::fabs(lsd_ten - 20.0) <= 0.01;

  const double snr_self = seg_snr(x, x);
  const bool cap_ok = snr_self == 35.0;

  char detail[120];
  std::snprintf(detail, sizeof(detail),
                "seg_snr(x,0.5x)=%.3f, lsd(x,10x)=%.4f, seg_snr(x,x)=%.1f",
                snr_half, lsd_ten, snr_self);
  report(6, half_ok && lsd_ok && cap_ok, "metric analytic values", detail);
}

void ac7_baseline_ordering(const Workspace& ws) {
  synth_corpus(ws, "ac7/clean", "ac7/noise", 12, 2.5, 16000, 19000);

  auto evaluate_with = [&](const std::string& corpus, const std::string& name) {
    const Manifest m = load_manifest(ws.sub(corpus + "/manifest.json"));
    const Manifest em =
        run_enhancer(m, ws.sub(corpus + "/manifest.json"),
                     builtin_enhancer(name), ws.sub(corpus + "_" + name), 2);
    return evaluate_corpus(em, 2);
  };

  build_corpus(ws.sub("ac7/clean"), ws.sub("ac7/noise"),
               spec_from_json(read_text_file(std::string(CONFIG_DIR) +
                                             "/table2-noise.json")),
               ws.sub("ac7/noisy"), 2);
  const MetricReport r_oracle = evaluate_with("ac7/noisy", "oracle_mask");
  const MetricReport r_sub = evaluate_with("ac7/noisy", "spectral_subtract");
  const MetricReport r_pass = evaluate_with("ac7/noisy", "passthrough");
  const bool order_ok =
      r_oracle.values.stoi.mean >= r_sub.values.stoi.mean &&
      r_sub.values.stoi.mean >= r_pass.values.stoi.mean;

  build_corpus(ws.sub("ac7/clean"), ws.sub("ac7/noise"),
               spec_from_json(read_text_file(std::string(CONFIG_DIR) +
                                             "/table2-att.json")),
               ws.sub("ac7/att"), 2);
  const MetricReport r_att = evaluate_with("ac7/att", "oracle_mask");
  const bool masking_ok = r_att.deltas && r_oracle.deltas &&
                          r_att.deltas->stoi.mean < r_oracle.deltas->stoi.mean;

  char detail[200];
  std::snprintf(detail, sizeof(detail),
                "mean STOI oracle %.4f >= specsub %.4f >= passthrough %.4f; "
                "oracle delta att %.4f < noise %.4f",
                r_oracle.values.stoi.mean, r_sub.values.stoi.mean,
                r_pass.values.stoi.mean, r_att.deltas->stoi.mean,
                r_oracle.deltas->stoi.mean);
  report(7, order_ok && masking_ok,
         "baseline ordering and masking limitation", detail);
}

void ac8_sweep_shape(const Workspace& ws) {
  const auto t0 = std::chrono::steady_clock::now();

  const auto grid = default_snr_grid();
  bool grid_ok = grid.size() == 9;
  for (size_t i = 0; grid_ok && i < grid.size(); ++i)
    grid_ok = std::fabs(grid[i] - (-2.5 + 2.5 * static_cast<double>(i))) < 1e-12;

  synth_corpus(ws, "ac8/clean", "ac8/noise", 20, 3.0, 16000, 20000);
  DegradationSpec base;
  base.clip.enabled_prob = 0.0;
  base.lpf.enabled_prob = 0.0;
  base.attenuation.enabled_prob = 1.0;
  base.attenuation.max_regions = 3;  // keeps every length placeable
  base.noise.snr_set_db = {10.0};
  base.seed = 77;

  const SweepResult sweep = sweep_attenuation(
      ws.sub("ac8/clean"), ws.sub("ac8/noise"), base,
      default_attenuation_lengths(),
      std::optional<EnhancerSpec>(builtin_enhancer("passthrough")),
      ws.sub("ac8/sweep"), 2);

  bool shape_ok = sweep.points.size() == 9;
  bool mono_ok = true;
  std::ostringstream curve;
  double prev = 2.0;
  for (const auto& point : sweep.points) {
    const double v = point.report.values.stoi.mean;
    curve << (curve.tellp() > 0 ? " " : "") << std::fixed << v;
    mono_ok &= v <= prev + 1e-9;
    prev = v;
  }
  const double elapsed = seconds_since(t0);
  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "grid 9 pts -2.5..17.5; degraded STOI by length: %s; %.1f s",
                curve.str().c_str(), elapsed);
  report(8, grid_ok && shape_ok && mono_ok && elapsed < 120.0,
         "sweep grids and non-increasing degraded STOI over attenuation length",
         detail);
}

void ac9_conditioning_mechanics(const Workspace& ws) {
  Rng rng(99001);

  FeatureMatrix fm;
  fm.layers = 6;
  fm.frames = 20;
  fm.dim = 16;
  fm.frame_rate_hz = 50.0f;
  fm.values.resize(6 * 20 * 16);
  for (auto& v : fm.values) v = static_cast<float>(rng.uniform(-2.0, 2.0));
  LayerWeights uniform;
  uniform.logits.assign(6, 0.0);
  const FeatureMatrix avg = weighted_layer_average(fm, uniform);
  bool avg_ok = true;
  for (size_t t = 0; t < 20 && avg_ok; ++t) {
    for (size_t d = 0; d < 16 && avg_ok; ++d) {
      double mean = 0.0;
      for (size_t l = 0; l < 6; ++l) mean += fm.at(l, t, d);
      mean /= 6.0;
      avg_ok = std::fabs(avg.at(0, t, d) - mean) <= 1e-6;
    }
  }

  FeatureMatrix three;
  three.layers = 1;
  three.frames = 3;
  three.dim = 1;
  three.frame_rate_hz = 50.0f;
  three.values = {5.0f, 6.0f, 7.0f};
  const FeatureMatrix seven = repeat_frames_to(three, 7, 117.0f);
  const std::vector<float> want = {5, 5, 5, 6, 6, 7, 7};
  const bool map_ok = seven.values == want;

  bool roundtrip_ok = true;
  for (int trial = 0; trial < 100 && roundtrip_ok; ++trial) {
    FeatureMatrix t;
    t.layers = 1 + rng.uniform_int(6);
    t.frames = 1 + rng.uniform_int(40);
    t.dim = 1 + rng.uniform_int(24);
    t.frame_rate_hz = static_cast<float>(rng.uniform(1.0, 200.0));
    t.values.resize(t.layers * t.frames * t.dim);
    for (auto& v : t.values) v = static_cast<float>(rng.gaussian());
    const std::string path =
        ws.sub("ac9/t" + std::to_string(trial) + ".feat");
    store_features(t, path);
    const FeatureMatrix back = load_features(path);
    roundtrip_ok = back.values == t.values && back.layers == t.layers &&
                   back.frames == t.frames && back.dim == t.dim &&
                   back.frame_rate_hz == t.frame_rate_hz;
  }

  report(9, avg_ok && map_ok && roundtrip_ok,
         "conditioning mechanics (uniform average, repeat map, FEAT1 round "
         "trip x100)");
}

void ac10_adapter_robustness(const Workspace& ws) {
  synth_corpus(ws, "ac10/clean", "ac10/noise", 4, 1.5, 16000, 21000);
  const int rc_build =
      run_cli("degrade --clean " + ws.sub("ac10/clean") + " --noise " +
              ws.sub("ac10/noise") + " --spec " + std::string(CONFIG_DIR) +
              "/table2-noise.json --out " + ws.sub("ac10/corpus"));

  auto failed_count = [&](const std::string& out_dir) {
    const Manifest m = load_manifest(ws.sub(out_dir + "/manifest.json"));
    size_t failed = 0;
    for (const auto& item : m.items)
      if (item.failed_reason) ++failed;
    const MetricReport r = evaluate_corpus(m, 2);
    // failed-item accounting must close
    if (r.values.per_item.size() + r.failed_items.size() != m.items.size())
      return static_cast<size_t>(9999);
    return failed;
  };

  auto enhance_with = [&](const std::string& mode, const std::string& out) {
    return run_cli("enhance --manifest " + ws.sub("ac10/corpus/manifest.json") +
                   " --adapter \"" + FAKE_ADAPTER_BIN + " " + mode +
                   "\" --out " + ws.sub(out));
  };

  const int rc_crash = enhance_with("crash", "ac10/r_crash");
  const int rc_omit = enhance_with("omit", "ac10/r_omit");
  const int rc_short = enhance_with("short", "ac10/r_short");

  const size_t f_crash = failed_count("ac10/r_crash");
  const size_t f_omit = failed_count("ac10/r_omit");
  const size_t f_short = failed_count("ac10/r_short");

  const bool ok = rc_build == 0 && rc_crash == 3 && rc_omit == 3 &&
                  rc_short == 3 && f_crash == 4 && f_omit == 1 && f_short == 1;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "exit codes 3/3/3; failed items crash %zu/4, omit %zu/4, "
                "short %zu/4",
                f_crash, f_omit, f_short);
  report(10, ok, "adapter failure modes yield exit 3 and exact failed counts",
         detail);
}

}  // namespace

int main() {
  Workspace ws;
  std::printf("acceptance suite (workdir %s)\n", ws.root.string().c_str());

  ac1_reproducibility_statement(ws);
  ac2_protocol_fidelity();
  ac3_snr_exactness();
  ac4_determinism(ws);
  ac5_stoi_oracle();
  ac6_metric_analytics();
  ac7_baseline_ordering(ws);
  ac8_sweep_shape(ws);
  ac9_conditioning_mechanics(ws);
  ac10_adapter_robustness(ws);

  std::printf("acceptance: %d criterion failure(s)\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
