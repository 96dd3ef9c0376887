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

#include "blendaug/align.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "blendaug/error.h"

namespace blendaug {
namespace {

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

bool ParseDouble(std::string_view text, double& value) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last && std::isfinite(value);
}

}  // namespace

std::vector<PhonemeInterval> ParseCtm(std::istream& in) {
  std::vector<PhonemeInterval> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = SplitFields(line);
    if (fields.empty() || fields[0].front() == '#') continue;
    if (fields.size() != 5) {
      throw FormatError(line_no, "expected 5 fields (utt channel start dur phone), got " +
                                     std::to_string(fields.size()));
    }
    PhonemeInterval interval;
    interval.utt_id = std::string(fields[0]);
    interval.channel = std::string(fields[1]);
    if (!ParseDouble(fields[2], interval.start)) {
      throw FormatError(line_no, "non-numeric start '" + std::string(fields[2]) + "'");
    }
    if (!ParseDouble(fields[3], interval.duration)) {
      throw FormatError(line_no, "non-numeric duration '" + std::string(fields[3]) + "'");
    }
    if (interval.start < 0.0) throw FormatError(line_no, "negative start time");
    if (interval.duration < 0.0) throw FormatError(line_no, "negative duration");
    if (interval.duration == 0.0) throw FormatError(line_no, "zero duration");
    interval.phone = std::string(fields[4]);
    out.push_back(std::move(interval));
  }
  return out;
}

std::vector<PhonemeInterval> ParseCtm(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseCtm(in);
}

std::vector<PhonemeInterval> ReadCtm(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open CTM file: " + path);
  try {
    return ParseCtm(in);
  } catch (const FormatError& e) {
    throw e.WithPrefix(path);
  }
}

std::string FormatSeconds(double seconds, int min_decimals) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), seconds,
                                 std::chars_format::fixed);
  std::string s(buf, ec == std::errc() ? ptr : buf);
  auto dot = s.find('.');
  int decimals = 0;
  if (dot == std::string::npos) {
    s += '.';
  } else {
    decimals = static_cast<int>(s.size() - dot - 1);
  }
  for (; decimals < min_decimals; ++decimals) s += '0';
  return s;
}

std::string SerializeCtm(const std::vector<PhonemeInterval>& intervals) {
  std::string out;
  for (const auto& iv : intervals) {
    out += iv.utt_id;
    out += ' ';
    out += iv.channel;
    out += ' ';
    out += FormatSeconds(iv.start);
    out += ' ';
    out += FormatSeconds(iv.duration);
    out += ' ';
    out += iv.phone;
    out += '\n';
  }
  return out;
}

SampleSpan ToSpan(const PhonemeInterval& interval, int sample_rate) {
  if (sample_rate <= 0) throw InvalidArgument("sample rate must be positive");
  // std::round is half away from zero.
  const double start = std::round(interval.start * sample_rate);
  const double end = std::round((interval.start + interval.duration) * sample_rate);
  if (!(end > start) || start < 0.0) {
    throw InvalidArgument("interval " + interval.phone + " at " +
                          FormatSeconds(interval.start) +
                          " s rounds to an empty sample span");
  }
  return {static_cast<std::size_t>(start), static_cast<std::size_t>(end)};
}

AudioBuffer ExtractSegment(const AudioBuffer& utterance,
                           const PhonemeInterval& interval) {
  const SampleSpan span = ToSpan(interval, utterance.sample_rate);
  if (span.end > utterance.size()) {
    throw InvalidArgument("alignment exceeds audio: " + interval.utt_id + " " +
                          interval.phone + " ends at sample " +
                          std::to_string(span.end) + " of " +
                          std::to_string(utterance.size()));
  }
  return Slice(utterance, span);
}

UtteranceRecord AssembleRecord(std::string utt_id, std::string wav_path,
                               std::vector<PhonemeInterval> phones) {
  std::stable_sort(phones.begin(), phones.end(),
                   [](const PhonemeInterval& a, const PhonemeInterval& b) {
                     return a.start < b.start;
                   });
  for (std::size_t i = 1; i < phones.size(); ++i) {
    if (phones[i].start < phones[i - 1].end() - kOverlapTolerance) {
      throw FormatError("utterance " + utt_id + ": interval " + phones[i].phone +
                        " at " + FormatSeconds(phones[i].start) +
                        " s overlaps preceding " + phones[i - 1].phone);
    }
  }
  return {std::move(utt_id), std::move(wav_path), std::move(phones)};
}

}  // namespace blendaug
