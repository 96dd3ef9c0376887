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

#ifndef BLENDAUG_ALIGN_H_
#define BLENDAUG_ALIGN_H_

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blendaug/audio.h"

namespace blendaug {

// One aligned phone occurrence, as found in a CTM line plus an optional
// pronunciation score (0 = mispronounced, 1 = accented, 2 = good).
struct PhonemeInterval {
  std::string utt_id;
  std::string channel = "1";
  double start = 0.0;     // seconds
  double duration = 0.0;  // seconds, > 0
  std::string phone;
  std::optional<int> score;

  double end() const { return start + duration; }
  bool operator==(const PhonemeInterval&) const = default;
};

struct UtteranceRecord {
  std::string utt_id;
  std::string wav_path;
  std::vector<PhonemeInterval> phones;  // sorted by start, non-overlapping
};

// Overlap tolerance between consecutive intervals, in seconds.
inline constexpr double kOverlapTolerance = 1e-6;

// Parses CTM text: `utt_id channel start dur phone` per line, blank lines and
// lines starting with '#' ignored. Order is preserved. Errors carry the
// 1-based line number.
std::vector<PhonemeInterval> ParseCtm(std::istream& in);
std::vector<PhonemeInterval> ParseCtm(std::string_view text);
std::vector<PhonemeInterval> ReadCtm(const std::string& path);

// Writes intervals as CTM. Times use the shortest representation that reads
// back to the same double, with at least two decimals.
std::string SerializeCtm(const std::vector<PhonemeInterval>& intervals);

// Shortest round-trip decimal with at least `min_decimals` digits after the
// point ("1.00", "0.48", "0.123456789").
std::string FormatSeconds(double seconds, int min_decimals = 2);

// Seconds to samples, rounding each boundary half away from zero. Throws
// InvalidArgument if the span rounds to empty.
SampleSpan ToSpan(const PhonemeInterval& interval, int sample_rate);

// Slice of `utterance` covered by `interval`. Throws InvalidArgument
// ("alignment exceeds audio") when the span runs past the buffer.
AudioBuffer ExtractSegment(const AudioBuffer& utterance,
                           const PhonemeInterval& interval);

// Sorts intervals by start and rejects overlaps beyond kOverlapTolerance.
UtteranceRecord AssembleRecord(std::string utt_id, std::string wav_path,
                               std::vector<PhonemeInterval> phones);

}  // namespace blendaug

#endif  // BLENDAUG_ALIGN_H_
