// src/conditioning.cc

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

#include "restobench/conditioning.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace restobench {

namespace {

constexpr char kMagic[6] = {'F', 'E', 'A', 'T', '1', '\0'};
constexpr uint64_t kMaxValues = 1ULL << 32;  // 16 GiB of f32, sanity bound

void put_u32_le(std::string* out, uint32_t v) {
  out->push_back(static_cast<char>(v & 0xFF));
  out->push_back(static_cast<char>((v >> 8) & 0xFF));
  out->push_back(static_cast<char>((v >> 16) & 0xFF));
  out->push_back(static_cast<char>((v >> 24) & 0xFF));
}

uint32_t get_u32_le(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

float get_f32_le(const uint8_t* p) {
  uint32_t bits = get_u32_le(p);
  float v;
  std::memcpy(&v, &bits, 4);
  return v;
}

}  // namespace

void FeatureMatrix::validate() const {
  if (layers == 0 || frames == 0 || dim == 0)
    throw std::runtime_error("invalid FEAT1 dimensions");
  if (values.size() != layers * frames * dim)
    throw std::runtime_error("feature value count does not match dimensions");
  if (!(frame_rate_hz > 0.0f))
    throw std::runtime_error("feature frame rate must be positive");
  for (float v : values)
    if (!std::isfinite(v))
      throw std::runtime_error("feature values must be finite");
}

std::vector<double> LayerWeights::weights() const {
  if (logits.empty()) throw std::runtime_error("empty layer weights");
  const double max_logit = *std::max_element(logits.begin(), logits.end());
  std::vector<double> w(logits.size());
  double sum = 0.0;
  for (size_t i = 0; i < logits.size(); ++i) {
    w[i] = std::exp(logits[i] - max_logit);
    sum += w[i];
  }
  for (auto& v : w) v /= sum;
  return w;
}

FeatureMatrix weighted_layer_average(const FeatureMatrix& fm,
                                     const LayerWeights& lw) {
  fm.validate();
  if (lw.logits.size() != fm.layers)
    throw std::runtime_error("weight/layer count mismatch");
  const std::vector<double> w = lw.weights();

  FeatureMatrix out;
  out.layers = 1;
  out.frames = fm.frames;
  out.dim = fm.dim;
  out.frame_rate_hz = fm.frame_rate_hz;
  const size_t plane = fm.frames * fm.dim;
  std::vector<double> acc(plane, 0.0);
  for (size_t l = 0; l < fm.layers; ++l) {
    const double wl = w[l];
    const float* src = fm.values.data() + l * plane;
    for (size_t i = 0; i < plane; ++i) acc[i] += wl * static_cast<double>(src[i]);
  }
  out.values.resize(plane);
  for (size_t i = 0; i < plane; ++i)
    out.values[i] = static_cast<float>(acc[i]);
  return out;
}

FeatureMatrix repeat_frames_to(const FeatureMatrix& fm, size_t target_frames,
                               float target_rate_hz) {
  fm.validate();
  if (target_frames < 1)
    throw std::runtime_error("target frame count must be positive");
  if (target_frames == fm.frames) {
    FeatureMatrix out = fm;  // bit-identical copy
    out.frame_rate_hz = target_rate_hz;
    return out;
  }

  FeatureMatrix out;
  out.layers = fm.layers;
  out.frames = target_frames;
  out.dim = fm.dim;
  out.frame_rate_hz = target_rate_hz;
  out.values.resize(fm.layers * target_frames * fm.dim);
  for (size_t l = 0; l < fm.layers; ++l) {
    for (size_t t = 0; t < target_frames; ++t) {
      const size_t src_t =
          std::min(fm.frames - 1, t * fm.frames / target_frames);
      std::memcpy(&out.at(l, t, 0), &fm.at(l, src_t, 0),
                  fm.dim * sizeof(float));
    }
  }
  return out;
}

FeatureMatrix concat_features(const FeatureMatrix& a, const FeatureMatrix& b) {
  a.validate();
  b.validate();
  if (a.layers != 1 || b.layers != 1)
    throw std::runtime_error("concat_features requires single-layer inputs");
  if (a.frames != b.frames)
    throw std::runtime_error("unaligned feature streams");

  FeatureMatrix out;
  out.layers = 1;
  out.frames = a.frames;
  out.dim = a.dim + b.dim;
  out.frame_rate_hz = a.frame_rate_hz;
  out.values.resize(out.frames * out.dim);
  for (size_t t = 0; t < out.frames; ++t) {
    std::memcpy(&out.at(0, t, 0), &a.at(0, t, 0), a.dim * sizeof(float));
    std::memcpy(&out.at(0, t, a.dim), &b.at(0, t, 0), b.dim * sizeof(float));
  }
  return out;
}

FeatureMatrix load_features(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open feature file: " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  const uint8_t* data = reinterpret_cast<const uint8_t*>(bytes.data());

  if (bytes.size() < sizeof(kMagic) + 16 ||
      std::memcmp(data, kMagic, sizeof(kMagic)) != 0)
    throw std::runtime_error("not a FEAT1 file: " + path);

  const uint8_t* p = data + sizeof(kMagic);
  FeatureMatrix fm;
  fm.layers = get_u32_le(p);
  fm.frames = get_u32_le(p + 4);
  fm.dim = get_u32_le(p + 8);
  fm.frame_rate_hz = get_f32_le(p + 12);

  if (fm.layers == 0 || fm.frames == 0 || fm.dim == 0)
    throw std::runtime_error("invalid FEAT1 dimensions: " + path);
  const uint64_t total = static_cast<uint64_t>(fm.layers) * fm.frames * fm.dim;
  if (total > kMaxValues)
    throw std::runtime_error("FEAT1 dimension overflow: " + path);

  const uint64_t payload = total * 4;
  const uint64_t expected = sizeof(kMagic) + 16 + payload;
  if (bytes.size() < expected)
    throw std::runtime_error("truncated feature file: " + path);

  fm.values.resize(static_cast<size_t>(total));
  const uint8_t* body = p + 16;
  for (uint64_t i = 0; i < total; ++i)
    fm.values[static_cast<size_t>(i)] = get_f32_le(body + 4 * i);
  fm.validate();
  return fm;
}

void store_features(const FeatureMatrix& fm, const std::string& path) {
  fm.validate();
  if (fm.layers > 0xFFFFFFFFULL || fm.frames > 0xFFFFFFFFULL ||
      fm.dim > 0xFFFFFFFFULL)
    throw std::runtime_error("FEAT1 dimension overflow");

  std::string out;
  out.reserve(sizeof(kMagic) + 16 + fm.values.size() * 4);
  out.append(kMagic, sizeof(kMagic));
  put_u32_le(&out, static_cast<uint32_t>(fm.layers));
  put_u32_le(&out, static_cast<uint32_t>(fm.frames));
  put_u32_le(&out, static_cast<uint32_t>(fm.dim));
  uint32_t rate_bits;
  std::memcpy(&rate_bits, &fm.frame_rate_hz, 4);
  put_u32_le(&out, rate_bits);
  for (float v : fm.values) {
    uint32_t bits;
    std::memcpy(&bits, &v, 4);
    put_u32_le(&out, bits);
  }

  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot create feature file: " + path);
  os.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!os) throw std::runtime_error("failed writing feature file: " + path);
}

}  // namespace restobench
