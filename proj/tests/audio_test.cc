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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>

#include "blendaug/error.h"
#include "test_util.h"

namespace blendaug {
namespace {

using testing::RandomBuffer;
using testing::TempDir;

// Hand-assembled RIFF header followed by int16 samples.
std::vector<unsigned char> MakeWav(std::uint16_t format, std::uint16_t channels,
                                   std::uint16_t bits, const std::vector<std::int16_t>& data,
                                   std::uint32_t rate = 16000) {
  std::vector<unsigned char> b;
  auto u32 = [&](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) b.push_back(static_cast<unsigned char>(v >> (8 * i)));
  };
  auto u16 = [&](std::uint16_t v) {
    b.push_back(static_cast<unsigned char>(v));
    b.push_back(static_cast<unsigned char>(v >> 8));
  };
  auto tag = [&](const char* t) { b.insert(b.end(), t, t + 4); };
  const std::uint32_t data_bytes = static_cast<std::uint32_t>(data.size() * 2);
  tag("RIFF");
  u32(36 + data_bytes);
  tag("WAVE");
  tag("fmt ");
  u32(16);
  u16(format);
  u16(channels);
  u32(rate);
  u32(rate * channels * bits / 8);
  u16(static_cast<std::uint16_t>(channels * bits / 8));
  u16(bits);
  tag("data");
  u32(data_bytes);
  for (auto s : data) u16(static_cast<std::uint16_t>(s));
  return b;
}

TEST(ReadWavTest, ZeroSignal) {
  const auto bytes = MakeWav(1, 1, 16, std::vector<std::int16_t>(160, 0));
  const AudioBuffer b = DecodeWav(bytes);
  EXPECT_EQ(b.sample_rate, 16000);
  ASSERT_EQ(b.size(), 160u);
  for (double s : b.samples) EXPECT_EQ(s, 0.0);
}

TEST(ReadWavTest, HalfScaleIsExact) {
  const AudioBuffer b = DecodeWav(MakeWav(1, 1, 16, {16384, -32768, 32767}));
  EXPECT_EQ(b.samples[0], 0.5);
  EXPECT_EQ(b.samples[1], -1.0);
  EXPECT_EQ(b.samples[2], 32767.0 / 32768.0);
}

TEST(ReadWavTest, RejectsStereo) {
  try {
    DecodeWav(MakeWav(1, 2, 16, {0, 0, 0, 0}));
    FAIL() << "stereo accepted";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("unsupported channel count"), std::string::npos);
  }
}

TEST(ReadWavTest, RejectsNonPcm) {
  try {
    DecodeWav(MakeWav(3, 1, 16, {0, 0}));
    FAIL() << "float WAV accepted";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("unsupported encoding"), std::string::npos);
  }
}

TEST(ReadWavTest, RejectsOtherBitDepths) {
  EXPECT_THROW(DecodeWav(MakeWav(1, 1, 8, {0})), FormatError);
}

TEST(ReadWavTest, RejectsGarbageAndTruncation) {
  const std::vector<unsigned char> junk = {'n', 'o', 'p', 'e'};
  EXPECT_THROW(DecodeWav(junk), FormatError);
  auto bytes = MakeWav(1, 1, 16, {1, 2, 3, 4});
  bytes.resize(bytes.size() - 3);
  EXPECT_THROW(DecodeWav(bytes), FormatError);
}

TEST(ReadWavTest, MissingFileIsIoError) {
  EXPECT_THROW(ReadWav("/nonexistent/dir/x.wav"), IoError);
}

TEST(ReadWavTest, SkipsUnknownChunks) {
  auto bytes = MakeWav(1, 1, 16, {16384});
  // Insert a LIST chunk with an odd size (padded) between fmt and data.
  const std::vector<unsigned char> list = {'L', 'I', 'S', 'T', 3, 0, 0, 0, 'a', 'b', 'c', 0};
  bytes.insert(bytes.begin() + 36, list.begin(), list.end());
  const AudioBuffer b = DecodeWav(bytes);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b.samples[0], 0.5);
}

TEST(WriteWavTest, ClampsOutOfRange) {
  EXPECT_EQ(QuantizeSample(1.5), 32767);
  EXPECT_EQ(QuantizeSample(-7.0), -32768);
  EXPECT_EQ(QuantizeSample(0.5), 16384);
}

TEST(WriteWavTest, RoundTripWithinOneStep) {
  TempDir dir;
  Rng rng(11);
  AudioBuffer b = RandomBuffer(rng, 4000, -1.0, 1.0);
  b.samples[0] = 0.5;
  b.samples[1] = 0.0;
  WriteWav(b, dir.File("a.wav"));
  const AudioBuffer back = ReadWav(dir.File("a.wav"));
  ASSERT_EQ(back.size(), b.size());
  EXPECT_EQ(back.sample_rate, b.sample_rate);
  EXPECT_EQ(back.samples[0], 0.5);
  EXPECT_EQ(back.samples[1], 0.0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    EXPECT_LE(std::abs(back.samples[i] - b.samples[i]), 1.0 / 32768.0);
  }
}

TEST(WriteWavTest, RejectsEmptyAndUnwritable) {
  EXPECT_THROW(WriteWav(AudioBuffer{}, "/tmp/never.wav"), InvalidArgument);
  AudioBuffer b{{0.1}, 16000};
  EXPECT_THROW(WriteWav(b, "/nonexistent/dir/x.wav"), IoError);
}

TEST(RmsTest, KnownValues) {
  EXPECT_EQ(Rms(AudioBuffer{std::vector<double>(10, 0.0), 16000}), 0.0);
  EXPECT_DOUBLE_EQ(Rms(AudioBuffer{std::vector<double>(10, 0.5), 16000}), 0.5);
  // 1600 samples of 100 Hz at 16 kHz: exactly ten periods.
  EXPECT_NEAR(Rms(testing::Sine(1600, 100.0)), 1.0 / std::sqrt(2.0), 1e-4);
  EXPECT_THROW(Rms(std::span<const double>{}), InvalidArgument);
}

TEST(RmsTest, ScalesLinearly) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    AudioBuffer x = RandomBuffer(rng, 100 + rng.UniformIndex(500));
    const double g = -3.0 + 6.0 * rng.Uniform01();
    AudioBuffer y = x;
    for (double& s : y.samples) s *= g;
    EXPECT_NEAR(Rms(y), std::abs(g) * Rms(x), 1e-9 * std::abs(g) * Rms(x));
  }
}

TEST(NormalizeEnergyTest, Examples) {
  AudioBuffer donor{std::vector<double>(8, 0.2), 16000};
  const AudioBuffer halved = NormalizeEnergy(donor, 0.1);
  for (double s : halved.samples) EXPECT_DOUBLE_EQ(s, 0.1);

  const AudioBuffer same = NormalizeEnergy(donor, 0.2);
  EXPECT_EQ(same.samples, donor.samples);

  AudioBuffer quarter{std::vector<double>(8, 0.25), 16000};
  for (double s : NormalizeEnergy(quarter, 0.6).samples) EXPECT_NEAR(s, 0.6, 1e-15);
}

TEST(NormalizeEnergyTest, SilentDonor) {
  AudioBuffer silent{std::vector<double>(32, 0.0), 16000};
  EXPECT_THROW(NormalizeEnergy(silent, 0.3), SilentDonorError);
}

TEST(NormalizeEnergyTest, MatchesTargetAndIsIdempotent) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    AudioBuffer donor = RandomBuffer(rng, 50 + rng.UniformIndex(300));
    const double target = 0.01 + rng.Uniform01();
    const AudioBuffer once = NormalizeEnergy(donor, target);
    EXPECT_NEAR(Rms(once), target, 1e-6 * target);
    const AudioBuffer twice = NormalizeEnergy(once, target);
    for (std::size_t i = 0; i < once.size(); ++i) {
      EXPECT_NEAR(twice.samples[i], once.samples[i], 1e-9);
    }
  }
}

TEST(SpliceTest, IdentityReplacement) {
  Rng rng(9);
  const AudioBuffer utt = RandomBuffer(rng, 1000);
  const SampleSpan span{100, 300};
  const SpliceResult r = Splice(utt, span, Slice(utt, span));
  EXPECT_EQ(r.shift, 0);
  EXPECT_EQ(r.audio.samples, utt.samples);
}

TEST(SpliceTest, ShorterReplacementShifts) {
  Rng rng(10);
  const AudioBuffer utt = RandomBuffer(rng, 1000);
  const AudioBuffer blend = RandomBuffer(rng, 80);
  const SpliceResult r = Splice(utt, {200, 300}, blend);
  EXPECT_EQ(r.shift, -20);
  EXPECT_EQ(r.audio.size(), 980u);
  // Re-extracting the shifted span gives the replacement back bit-exactly.
  EXPECT_EQ(Slice(r.audio, {200, 280}).samples, blend.samples);
  EXPECT_EQ(r.audio.samples[280], utt.samples[300]);
}

TEST(SpliceTest, LengthBookkeeping) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const AudioBuffer utt = RandomBuffer(rng, 10 + rng.UniformIndex(500));
    const std::size_t a = rng.UniformIndex(utt.size());
    const std::size_t b = a + 1 + rng.UniformIndex(utt.size() - a);
    const AudioBuffer rep = RandomBuffer(rng, 1 + rng.UniformIndex(400));
    const SpliceResult r = Splice(utt, {a, b}, rep);
    EXPECT_EQ(static_cast<long>(r.audio.size()) - static_cast<long>(utt.size()), r.shift);
  }
}

TEST(SpliceTest, Errors) {
  const AudioBuffer utt{std::vector<double>(100, 0.1), 16000};
  EXPECT_THROW(Splice(utt, {90, 101}, utt), InvalidArgument);
  EXPECT_THROW(Splice(utt, {10, 10}, utt), InvalidArgument);
  const AudioBuffer other_rate{std::vector<double>(5, 0.1), 8000};
  EXPECT_THROW(Splice(utt, {0, 5}, other_rate), InvalidArgument);
}

}  // namespace
}  // namespace blendaug
