// include/restobench/conditioning.h

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

#include <cstddef>
#include <string>
#include <vector>

namespace restobench {

// L layers x T frames x D dims of an externally computed representation.
// Values are stored layer-major, frame-major (the FEAT1 on-disk order).
struct FeatureMatrix {
  size_t layers = 0;
  size_t frames = 0;
  size_t dim = 0;
  float frame_rate_hz = 0.0f;
  std::vector<float> values;

  float& at(size_t l, size_t t, size_t d) {
    return values[(l * frames + t) * dim + d];
  }
  const float& at(size_t l, size_t t, size_t d) const {
    return values[(l * frames + t) * dim + d];
  }
  void validate() const;  // throws on zero dims, size mismatch, non-finite
};

// Softmax-normalized layer combination weights, supplied as logits so the
// sum-to-one invariant is structural.
struct LayerWeights {
  std::vector<double> logits;
  std::vector<double> weights() const;  // softmax(logits)
};

// out[t,d] = sum_l weights[l] * fm[l,t,d]; collapses to a single layer.
FeatureMatrix weighted_layer_average(const FeatureMatrix& fm,
                                     const LayerWeights& lw);

// Nearest-lower-index frame repetition: out[t] = fm[floor(t*T/target)].
FeatureMatrix repeat_frames_to(const FeatureMatrix& fm, size_t target_frames,
                               float target_rate_hz);

// Concatenates two single-layer, frame-aligned streams along the feature
// dimension: a occupies dims [0, D_a), b occupies [D_a, D_a + D_b).
FeatureMatrix concat_features(const FeatureMatrix& a, const FeatureMatrix& b);

// FEAT1 binary format: magic "FEAT1\0", little-endian u32 L, T, D,
// f32 frame_rate_hz, then L*T*D little-endian f32 values in layer-major,
// frame-major order. No padding.
FeatureMatrix load_features(const std::string& path);
void store_features(const FeatureMatrix& fm, const std::string& path);

}  // namespace restobench
