// tests/test_cli.cc

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

#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "restobench/conditioning.h"
#include "restobench/harness.h"
#include "restobench/synth.h"
#include "test_support.h"

using namespace restobench;
using namespace restobench::test;
namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(RESTOBENCH_BIN) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

void make_data(const TempDir& dir) {
  fs::create_directories(dir.sub("clean"));
  fs::create_directories(dir.sub("noise"));
  for (int i = 0; i < 3; ++i)
    write_wav(dir.sub("clean/utt" + std::to_string(i) + ".wav"),
              synth_vowel_sequence(1.5, 16000, 500 + static_cast<uint64_t>(i)));
  write_wav(dir.sub("noise/white.wav"),
            synth_white_noise(2.0, 16000, 600, 0.3));
}

const std::string kNoiseOnlySpec = std::string(CONFIG_DIR) + "/table2-noise.json";

}  // namespace

TEST_CASE("cli: unknown flags exit 1 with usage semantics") {
  CHECK(run_cli("degrade --no-such-flag") == 1);
  CHECK(run_cli("") == 1);
  CHECK(run_cli("bogus-subcommand") == 1);
}

TEST_CASE("cli: missing data exits 2") {
  TempDir dir("clino");
  CHECK(run_cli("degrade --clean " + dir.sub("nope") + " --noise " +
                dir.sub("nope") + " --spec " + kNoiseOnlySpec + " --out " +
                dir.sub("out")) == 2);
}

TEST_CASE("cli: degrade twice with the same seed is byte-identical") {
  TempDir dir("clidet");
  make_data(dir);
  const std::string base = "degrade --clean " + dir.sub("clean") + " --noise " +
                           dir.sub("noise") + " --spec " + kNoiseOnlySpec +
                           " --seed 7 --jobs 2";
  REQUIRE(run_cli(base + " --out " + dir.sub("c1")) == 0);
  REQUIRE(run_cli(base + " --out " + dir.sub("c2")) == 0);
  const Manifest m1 = load_manifest(dir.sub("c1/manifest.json"));
  const Manifest m2 = load_manifest(dir.sub("c2/manifest.json"));
  REQUIRE(m1.items.size() == 3);
  for (size_t i = 0; i < m1.items.size(); ++i)
    CHECK(read_text_file(m1.items[i].degraded_path) ==
          read_text_file(m2.items[i].degraded_path));
  CHECK(m1.spec.seed == 7);
}

TEST_CASE("cli: evaluate without restored paths scores the noisy condition") {
  TempDir dir("clieval");
  make_data(dir);
  REQUIRE(run_cli("degrade --clean " + dir.sub("clean") + " --noise " +
                  dir.sub("noise") + " --spec " + kNoiseOnlySpec + " --out " +
                  dir.sub("c")) == 0);
  REQUIRE(run_cli("evaluate --manifest " + dir.sub("c/manifest.json")) == 0);
  CHECK(fs::exists(dir.sub("c/report.json")));
  CHECK(fs::exists(dir.sub("c/report.csv")));
  const MetricReport report =
      report_from_json(read_text_file(dir.sub("c/report.json")));
  CHECK(report.values.per_item.size() == 3);
  CHECK_FALSE(report.deltas.has_value());  // nothing restored yet
}

TEST_CASE("cli: enhance via a crashing adapter exits 3") {
  TempDir dir("cliadapter");
  make_data(dir);
  REQUIRE(run_cli("degrade --clean " + dir.sub("clean") + " --noise " +
                  dir.sub("noise") + " --spec " + kNoiseOnlySpec + " --out " +
                  dir.sub("c")) == 0);
  CHECK(run_cli("enhance --manifest " + dir.sub("c/manifest.json") +
                " --adapter \"" + FAKE_ADAPTER_BIN + " crash\" --out " +
                dir.sub("r")) == 3);
}

TEST_CASE("cli: adapter-baseline output matches in-process builtin") {
  TempDir dir("cliab");
  make_data(dir);
  REQUIRE(run_cli("degrade --clean " + dir.sub("clean") + " --noise " +
                  dir.sub("noise") + " --spec " + kNoiseOnlySpec + " --out " +
                  dir.sub("c")) == 0);
  // in-process builtin
  REQUIRE(run_cli("enhance --manifest " + dir.sub("c/manifest.json") +
                  " --enhancer spectral_subtract --out " + dir.sub("rb")) == 0);
  // the same baseline behind the adapter protocol
  REQUIRE(run_cli("enhance --manifest " + dir.sub("c/manifest.json") +
                  " --adapter \"" + RESTOBENCH_BIN +
                  " adapter-baseline spectral_subtract\" --out " +
                  dir.sub("ra")) == 0);
  const Manifest mb = load_manifest(dir.sub("rb/manifest.json"));
  const Manifest ma = load_manifest(dir.sub("ra/manifest.json"));
  for (size_t i = 0; i < mb.items.size(); ++i)
    CHECK(read_text_file(*mb.items[i].restored_path) ==
          read_text_file(*ma.items[i].restored_path));
}

TEST_CASE("cli: features utilities round trip") {
  TempDir dir("clifeat");
  FeatureMatrix fm;
  fm.layers = 2;
  fm.frames = 5;
  fm.dim = 3;
  fm.frame_rate_hz = 50.0f;
  fm.values.resize(30);
  for (size_t i = 0; i < 30; ++i) fm.values[i] = static_cast<float>(i) * 0.25f;
  store_features(fm, dir.sub("in.feat"));

  REQUIRE(run_cli("features inspect " + dir.sub("in.feat")) == 0);
  REQUIRE(run_cli("features average --in " + dir.sub("in.feat") + " --out " +
                  dir.sub("avg.feat")) == 0);
  const FeatureMatrix avg = load_features(dir.sub("avg.feat"));
  CHECK(avg.layers == 1);
  CHECK(avg.dim == 3);

  REQUIRE(run_cli("features repeat --in " + dir.sub("avg.feat") +
                  " --frames 10 --rate 100 --out " + dir.sub("rep.feat")) == 0);
  const FeatureMatrix rep = load_features(dir.sub("rep.feat"));
  CHECK(rep.frames == 10);

  REQUIRE(run_cli("features concat --a " + dir.sub("avg.feat") + " --b " +
                  dir.sub("avg.feat") + " --out " + dir.sub("cat.feat")) == 0);
  const FeatureMatrix cat = load_features(dir.sub("cat.feat"));
  CHECK(cat.dim == 6);
  CHECK(run_cli("features inspect " + dir.sub("missing.feat")) == 2);
}
