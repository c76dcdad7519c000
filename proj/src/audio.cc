// src/audio.cc

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

#include "restobench/audio.h"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace restobench {

double rms(const AudioBuffer& buf) {
  if (buf.samples.empty()) return 0.0;
  double acc = 0.0;
  for (float s : buf.samples) acc += static_cast<double>(s) * s;
  return std::sqrt(acc / static_cast<double>(buf.samples.size()));
}

float peak_abs(const AudioBuffer& buf) {
  float p = 0.0f;
  for (float s : buf.samples) p = std::max(p, std::fabs(s));
  return p;
}

bool all_finite(const AudioBuffer& buf) {
  for (float s : buf.samples)
    if (!std::isfinite(s)) return false;
  return true;
}

namespace {

constexpr uint16_t kFormatPcm = 0x0001;
constexpr uint16_t kFormatIeeeFloat = 0x0003;
constexpr uint16_t kFormatExtensible = 0xFFFE;

uint32_t read_u32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t read_u16(const uint8_t* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::string* out, uint32_t v) {
  out->push_back(static_cast<char>(v & 0xFF));
  out->push_back(static_cast<char>((v >> 8) & 0xFF));
  out->push_back(static_cast<char>((v >> 16) & 0xFF));
  out->push_back(static_cast<char>((v >> 24) & 0xFF));
}

void put_u16(std::string* out, uint16_t v) {
  out->push_back(static_cast<char>(v & 0xFF));
  out->push_back(static_cast<char>((v >> 8) & 0xFF));
}

}  // namespace

AudioBuffer read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open WAV file: " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  const uint8_t* data = reinterpret_cast<const uint8_t*>(bytes.data());
  const size_t size = bytes.size();

  if (size < 12 || std::memcmp(data, "RIFF", 4) != 0 ||
      std::memcmp(data + 8, "WAVE", 4) != 0)
    throw std::runtime_error("not a RIFF/WAVE file: " + path);

  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  bool have_fmt = false;
  AudioBuffer buf;

  size_t pos = 12;
  while (pos + 8 <= size) {
    const char* id = reinterpret_cast<const char*>(data + pos);
    uint32_t chunk_size = read_u32(data + pos + 4);
    size_t body = pos + 8;
    if (body + chunk_size > size)
      throw std::runtime_error("truncated WAV chunk in " + path);

    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (chunk_size < 16) throw std::runtime_error("bad fmt chunk: " + path);
      format = read_u16(data + body);
      channels = read_u16(data + body + 2);
      rate = read_u32(data + body + 4);
      bits = read_u16(data + body + 14);
      if (format == kFormatExtensible && chunk_size >= 40) {
        // sub-format GUID starts with the effective format tag
        format = read_u16(data + body + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      if (!have_fmt)
        throw std::runtime_error("WAV data chunk before fmt: " + path);
      if (channels != 1)
        throw std::runtime_error("multi-channel WAV not supported (" +
                                 std::to_string(channels) +
                                 " channels): " + path);
      if (rate == 0) throw std::runtime_error("zero sample rate: " + path);
      buf.sample_rate = static_cast<int>(rate);
      if (format == kFormatPcm && bits == 16) {
        size_t n = chunk_size / 2;
        buf.samples.resize(n);
        for (size_t i = 0; i < n; ++i) {
          int16_t v;
          std::memcpy(&v, data + body + 2 * i, 2);
          buf.samples[i] = static_cast<float>(v) / 32768.0f;
        }
      } else if (format == kFormatIeeeFloat && bits == 32) {
        size_t n = chunk_size / 4;
        buf.samples.resize(n);
        std::memcpy(buf.samples.data(), data + body, n * 4);
      } else {
        throw std::runtime_error(
            "unsupported WAV encoding (format " + std::to_string(format) +
            ", " + std::to_string(bits) + " bit): " + path);
      }
      if (!all_finite(buf))
        throw std::runtime_error("WAV contains non-finite samples: " + path);
      return buf;
    }
    // chunks are word-aligned
    pos = body + chunk_size + (chunk_size & 1);
  }
  throw std::runtime_error("WAV has no data chunk: " + path);
}

void write_wav(const std::string& path, const AudioBuffer& buf) {
  if (buf.sample_rate <= 0)
    throw std::runtime_error("write_wav: invalid sample rate");
  const uint32_t data_bytes = static_cast<uint32_t>(buf.samples.size() * 4);

  std::string out;
  out.reserve(58 + data_bytes);
  out.append("RIFF");
  put_u32(&out, 4 + 8 + 16 + 8 + 4 + 8 + data_bytes);  // fmt + fact + data
  out.append("WAVE");
  out.append("fmt ");
  put_u32(&out, 16);
  put_u16(&out, kFormatIeeeFloat);
  put_u16(&out, 1);  // mono
  put_u32(&out, static_cast<uint32_t>(buf.sample_rate));
  put_u32(&out, static_cast<uint32_t>(buf.sample_rate) * 4);
  put_u16(&out, 4);   // block align
  put_u16(&out, 32);  // bits per sample
  // fact chunk is required for non-PCM formats
  out.append("fact");
  put_u32(&out, 4);
  put_u32(&out, static_cast<uint32_t>(buf.samples.size()));
  out.append("data");
  put_u32(&out, data_bytes);
  const size_t head = out.size();
  out.resize(head + data_bytes);
  if (data_bytes > 0)
    std::memcpy(out.data() + head, buf.samples.data(), data_bytes);

  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot create WAV file: " + path);
  os.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!os) throw std::runtime_error("failed writing WAV file: " + path);
}

}  // namespace restobench
