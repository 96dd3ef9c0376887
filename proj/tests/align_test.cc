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

#include <gtest/gtest.h>

#include "blendaug/error.h"
#include "blendaug/rng.h"

namespace blendaug {
namespace {

TEST(ParseCtmTest, SingleLine) {
  const auto ivs = ParseCtm("utt1 1 0.48 0.12 SH\n");
  ASSERT_EQ(ivs.size(), 1u);
  EXPECT_EQ(ivs[0].utt_id, "utt1");
  EXPECT_EQ(ivs[0].channel, "1");
  EXPECT_EQ(ivs[0].start, 0.48);
  EXPECT_EQ(ivs[0].duration, 0.12);
  EXPECT_EQ(ivs[0].phone, "SH");
  EXPECT_FALSE(ivs[0].score.has_value());
}

TEST(ParseCtmTest, CommentsAndBlankLinesSkipped) {
  const auto ivs = ParseCtm("# header\n\nu 1 0 0.1 A\n  \nu 1 0.1 0.1 B\n");
  ASSERT_EQ(ivs.size(), 2u);
  EXPECT_EQ(ivs[1].phone, "B");
}

TEST(ParseCtmTest, FieldCountErrorReportsLine) {
  try {
    ParseCtm("utt1 1 0.48 SH\n");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);
  }
}

TEST(ParseCtmTest, NumericAndSignErrors) {
  try {
    ParseCtm("# c\nu 1 0.1 0.1 A\nu 1 0.2 -0.1 B\n");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("negative duration"), std::string::npos);
  }
  EXPECT_THROW(ParseCtm("u 1 abc 0.1 A\n"), FormatError);
  EXPECT_THROW(ParseCtm("u 1 0.1 0.1x A\n"), FormatError);
}

TEST(ParseCtmTest, KeepsFileOrder) {
  const auto ivs = ParseCtm("u 1 0.5 0.1 B\nu 1 0.1 0.1 A\n");
  ASSERT_EQ(ivs.size(), 2u);
  EXPECT_EQ(ivs[0].phone, "B");
  const auto rec = AssembleRecord("u", "u.wav", ivs);
  EXPECT_EQ(rec.phones[0].phone, "A");
}

TEST(CtmRoundTripTest, ParseSerializeParseIsIdentity) {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<PhonemeInterval> ivs;
    double t = 0.0;
    for (int i = 0; i < 20; ++i) {
      PhonemeInterval iv;
      iv.utt_id = "utt" + std::to_string(trial);
      iv.channel = "A";
      iv.start = t + rng.Uniform01() * 0.05;
      iv.duration = 1e-4 + rng.Uniform01() * 0.3;
      iv.phone = "P" + std::to_string(rng.UniformIndex(40));
      t = iv.end();
      ivs.push_back(iv);
    }
    const auto once = ParseCtm(SerializeCtm(ivs));
    EXPECT_EQ(once, ivs);
    EXPECT_EQ(ParseCtm(SerializeCtm(once)), once);
  }
}

TEST(FormatSecondsTest, AtLeastTwoDecimals) {
  EXPECT_EQ(FormatSeconds(1.0), "1.00");
  EXPECT_EQ(FormatSeconds(0.48), "0.48");
  EXPECT_EQ(FormatSeconds(0.5), "0.50");
  EXPECT_EQ(FormatSeconds(0.123456789), "0.123456789");
  EXPECT_EQ(FormatSeconds(1e-6), "0.000001");
}

TEST(ToSpanTest, Examples) {
  PhonemeInterval iv;
  iv.start = 0.48;
  iv.duration = 0.12;
  EXPECT_EQ(ToSpan(iv, 16000), (SampleSpan{7680, 9600}));
  iv.start = 0.0;
  iv.duration = 1.0;
  EXPECT_EQ(ToSpan(iv, 16000), (SampleSpan{0, 16000}));
  iv.duration = 1e-6;
  EXPECT_THROW(ToSpan(iv, 16000), InvalidArgument);
  EXPECT_THROW(ToSpan(iv, 0), InvalidArgument);
}

TEST(ToSpanTest, RoundsHalfAwayFromZero) {
  PhonemeInterval iv;
  iv.start = 0.5 / 1000;  // 0.5 samples at 1 kHz
  iv.duration = 2.0 / 1000;
  EXPECT_EQ(ToSpan(iv, 1000), (SampleSpan{1, 3}));
}

TEST(ToSpanTest, Monotone) {
  Rng rng(4);
  PhonemeInterval prev;
  prev.start = 0.0;
  prev.duration = 0.05;
  SampleSpan prev_span = ToSpan(prev, 16000);
  for (int i = 0; i < 2000; ++i) {
    PhonemeInterval next = prev;
    next.start += rng.Uniform01() * 0.01;
    const SampleSpan s = ToSpan(next, 16000);
    EXPECT_GE(s.start, prev_span.start);
    prev = next;
    prev_span = s;
  }
}

TEST(ExtractSegmentTest, Examples) {
  AudioBuffer buf;
  buf.samples.resize(16000);
  for (std::size_t i = 0; i < buf.size(); ++i) buf.samples[i] = static_cast<double>(i) / 16000;

  PhonemeInterval whole;
  whole.start = 0.0;
  whole.duration = 1.0;
  EXPECT_EQ(ExtractSegment(buf, whole).samples, buf.samples);

  PhonemeInterval sh;
  sh.start = 0.48;
  sh.duration = 0.12;
  const AudioBuffer seg = ExtractSegment(buf, sh);
  ASSERT_EQ(seg.size(), 1920u);
  EXPECT_EQ(seg.samples.front(), buf.samples[7680]);

  PhonemeInterval past;
  past.start = 0.9;
  past.duration = 0.2;
  try {
    ExtractSegment(buf, past);
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("alignment exceeds audio"), std::string::npos);
  }
}

TEST(AssembleRecordTest, RejectsOverlapBeyondTolerance) {
  auto ivs = ParseCtm("u 1 0.0 0.10 A\nu 1 0.0999995 0.1 B\n");
  EXPECT_NO_THROW(AssembleRecord("u", "u.wav", ivs));
  ivs = ParseCtm("u 1 0.0 0.10 A\nu 1 0.09 0.1 B\n");
  EXPECT_THROW(AssembleRecord("u", "u.wav", ivs), FormatError);
}

}  // namespace
}  // namespace blendaug
