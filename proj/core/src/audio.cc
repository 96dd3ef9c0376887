/*
 * Copyright 2026 The blendaug Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "blendaug/audio.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>

#include "blendaug/error.h"

namespace blendaug {
namespace {

constexpr std::uint16_t kFormatPcm = 1;

std::uint32_t ReadU32(std::span<const unsigned char> b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) |
         (static_cast<std::uint32_t>(b[at + 1]) << 8) |
         (static_cast<std::uint32_t>(b[at + 2]) << 16) |
         (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

std::uint16_t ReadU16(std::span<const unsigned char> b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] | (b[at + 1] << 8));
}

void PutU32(std::vector<unsigned char>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

void PutU16(std::vector<unsigned char>& out, std::uint16_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xff));
  out.push_back(static_cast<unsigned char>(v >> 8));
}

void PutTag(std::vector<unsigned char>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

bool TagIs(std::span<const unsigned char> b, std::size_t at, const char* tag) {
  return std::memcmp(b.data() + at, tag, 4) == 0;
}

}  // namespace

AudioBuffer DecodeWav(std::span<const unsigned char> bytes) {
  if (bytes.size() < 12 || !TagIs(bytes, 0, "RIFF") || !TagIs(bytes, 8, "WAVE")) {
    throw FormatError("not a RIFF/WAVE file");
  }
  bool have_fmt = false;
  int sample_rate = 0;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint32_t chunk_size = ReadU32(bytes, pos + 4);
    const std::size_t body = pos + 8;
    if (chunk_size > bytes.size() - body) {
      throw FormatError("truncated WAV chunk");
    }
    if (TagIs(bytes, pos, "fmt ")) {
      if (chunk_size < 16) throw FormatError("fmt chunk too short");
      const std::uint16_t format = ReadU16(bytes, body);
      const std::uint16_t channels = ReadU16(bytes, body + 2);
      const std::uint32_t rate = ReadU32(bytes, body + 4);
      const std::uint16_t bits = ReadU16(bytes, body + 14);
      if (format != kFormatPcm) {
        throw FormatError("unsupported encoding: format tag " +
                          std::to_string(format) + " (only PCM is accepted)");
      }
      if (channels != 1) {
        throw FormatError("unsupported channel count: " +
                          std::to_string(channels));
      }
      if (bits != 16) {
        throw FormatError("unsupported bit depth: " + std::to_string(bits));
      }
      if (rate == 0) throw FormatError("sample rate is zero");
      sample_rate = static_cast<int>(rate);
      have_fmt = true;
    } else if (TagIs(bytes, pos, "data")) {
      if (!have_fmt) throw FormatError("data chunk before fmt chunk");
      if (chunk_size % 2 != 0) throw FormatError("odd data chunk size");
      AudioBuffer buffer;
      buffer.sample_rate = sample_rate;
      buffer.samples.resize(chunk_size / 2);
      for (std::size_t i = 0; i < buffer.samples.size(); ++i) {
        const auto v = static_cast<std::int16_t>(ReadU16(bytes, body + 2 * i));
        buffer.samples[i] = v / 32768.0;
      }
      return buffer;
    }
    // Chunks are word aligned.
    pos = body + chunk_size + (chunk_size & 1);
  }
  throw FormatError(have_fmt ? "missing data chunk" : "missing fmt chunk");
}

AudioBuffer ReadWav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open WAV file: " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  try {
    return DecodeWav(bytes);
  } catch (const FormatError& e) {
    throw e.WithPrefix(path);
  }
}

short QuantizeSample(double value) {
  const double clamped = std::clamp(value, -1.0, 1.0);
  const double scaled = std::round(clamped * 32768.0);
  return static_cast<short>(std::clamp(scaled, -32768.0, 32767.0));
}

std::vector<unsigned char> EncodeWav(const AudioBuffer& buffer) {
  if (buffer.empty()) throw InvalidArgument("cannot write an empty buffer");
  if (buffer.sample_rate <= 0) throw InvalidArgument("sample rate must be positive");
  const std::uint32_t data_bytes = static_cast<std::uint32_t>(buffer.size() * 2);
  std::vector<unsigned char> out;
  out.reserve(44 + data_bytes);
  PutTag(out, "RIFF");
  PutU32(out, 36 + data_bytes);
  PutTag(out, "WAVE");
  PutTag(out, "fmt ");
  PutU32(out, 16);
  PutU16(out, kFormatPcm);
  PutU16(out, 1);
  PutU32(out, static_cast<std::uint32_t>(buffer.sample_rate));
  PutU32(out, static_cast<std::uint32_t>(buffer.sample_rate) * 2);
  PutU16(out, 2);
  PutU16(out, 16);
  PutTag(out, "data");
  PutU32(out, data_bytes);
  for (double s : buffer.samples) {
    PutU16(out, static_cast<std::uint16_t>(QuantizeSample(s)));
  }
  return out;
}

void WriteWav(const AudioBuffer& buffer, const std::string& path) {
  const std::vector<unsigned char> bytes = EncodeWav(buffer);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path);
}

double Rms(std::span<const double> samples) {
  if (samples.empty()) throw InvalidArgument("rms of empty signal");
  double sum = 0.0;
  for (double s : samples) sum += s * s;
  return std::sqrt(sum / static_cast<double>(samples.size()));
}

double EnergyGain(const AudioBuffer& donor, double target_rms) {
  if (!(target_rms >= 0.0)) throw InvalidArgument("target rms must be >= 0");
  const double current = Rms(donor);
  if (current == 0.0) throw SilentDonorError();
  return target_rms / current;
}

AudioBuffer NormalizeEnergy(const AudioBuffer& donor, double target_rms) {
  const double gain = EnergyGain(donor, target_rms);
  AudioBuffer out = donor;
  for (double& s : out.samples) s *= gain;
  return out;
}

AudioBuffer Slice(const AudioBuffer& buffer, const SampleSpan& span) {
  if (span.start >= span.end || span.end > buffer.size()) {
    throw InvalidArgument("span [" + std::to_string(span.start) + ", " +
                          std::to_string(span.end) + ") out of bounds for " +
                          std::to_string(buffer.size()) + " samples");
  }
  AudioBuffer out;
  out.sample_rate = buffer.sample_rate;
  out.samples.assign(buffer.samples.begin() + static_cast<long>(span.start),
                     buffer.samples.begin() + static_cast<long>(span.end));
  return out;
}

SpliceResult Splice(const AudioBuffer& utterance, const SampleSpan& span,
                    const AudioBuffer& replacement) {
  if (span.start >= span.end || span.end > utterance.size()) {
    throw InvalidArgument("splice span out of bounds");
  }
  if (replacement.sample_rate != utterance.sample_rate) {
    throw InvalidArgument("sample rate mismatch: " +
                          std::to_string(replacement.sample_rate) + " vs " +
                          std::to_string(utterance.sample_rate));
  }
  SpliceResult result;
  result.audio.sample_rate = utterance.sample_rate;
  auto& out = result.audio.samples;
  out.reserve(utterance.size() - span.length() + replacement.size());
  const auto begin = utterance.samples.begin();
  out.insert(out.end(), begin, begin + static_cast<long>(span.start));
  out.insert(out.end(), replacement.samples.begin(), replacement.samples.end());
  out.insert(out.end(), begin + static_cast<long>(span.end), utterance.samples.end());
  result.shift = static_cast<long>(replacement.size()) - static_cast<long>(span.length());
  return result;
}

}  // namespace blendaug
