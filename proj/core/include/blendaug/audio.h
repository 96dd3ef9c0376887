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

#ifndef BLENDAUG_AUDIO_H_
#define BLENDAUG_AUDIO_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace blendaug {

// Mono PCM audio with samples as doubles, nominally in [-1, 1]. Samples are
// kept in double precision from decode to encode; quantization to int16
// happens only in WriteWav.
struct AudioBuffer {
  std::vector<double> samples;
  int sample_rate = 16000;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  double duration_seconds() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
  std::span<const double> view() const { return samples; }
};

// Half-open sample range [start, end).
struct SampleSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  bool operator==(const SampleSpan&) const = default;
};

// Reads a RIFF/WAVE file holding 16-bit signed PCM mono audio. Samples are
// decoded as value / 32768. Throws IoError if the file cannot be opened and
// FormatError for anything other than 16-bit PCM mono (non-PCM encoding,
// channel count and bit depth are reported distinctly).
AudioBuffer ReadWav(const std::string& path);

// Decodes WAV bytes already in memory. Same contract as ReadWav.
AudioBuffer DecodeWav(std::span<const unsigned char> bytes);

// Writes 16-bit PCM mono. Samples are clamped to [-1, 1] before quantization,
// so out-of-range values saturate instead of wrapping.
void WriteWav(const AudioBuffer& buffer, const std::string& path);

std::vector<unsigned char> EncodeWav(const AudioBuffer& buffer);

// Single sample quantization used by the encoder.
short QuantizeSample(double value);

// Root mean square. Throws InvalidArgument on empty input.
double Rms(std::span<const double> samples);
inline double Rms(const AudioBuffer& buffer) { return Rms(buffer.view()); }

// Scales `donor` so its RMS equals `target_rms`. Throws SilentDonorError when
// the donor RMS is zero.
AudioBuffer NormalizeEnergy(const AudioBuffer& donor, double target_rms);

// Gain NormalizeEnergy would apply.
double EnergyGain(const AudioBuffer& donor, double target_rms);

struct SpliceResult {
  AudioBuffer audio;
  // len(replacement) - span.length(); added to every later sample position.
  long shift = 0;
};

// Replaces utterance[span] with `replacement`.
SpliceResult Splice(const AudioBuffer& utterance, const SampleSpan& span,
                    const AudioBuffer& replacement);

// Copy of buffer[span]. Throws InvalidArgument when span is out of bounds.
AudioBuffer Slice(const AudioBuffer& buffer, const SampleSpan& span);

}  // namespace blendaug

#endif  // BLENDAUG_AUDIO_H_
