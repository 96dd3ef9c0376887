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

#include <benchmark/benchmark.h>

#include <filesystem>
#include <tuple>
#include <string>
#include <vector>

#include "blendaug/audio.h"
#include "blendaug/blender.h"
#include "blendaug/closedict.h"
#include "blendaug/gop.h"
#include "blendaug/mask.h"
#include "blendaug/pipeline.h"
#include "blendaug/rng.h"

namespace blendaug {
namespace {

AudioBuffer Noise(Rng& rng, std::size_t n) {
  AudioBuffer b;
  b.sample_rate = 16000;
  b.samples.resize(n);
  for (double& s : b.samples) s = 1.6 * rng.Uniform01() - 0.8;
  return b;
}

// One candidate/donor blend; range(0) is the segment length in samples.
void BM_SpeechBlend(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto t = static_cast<MaskTemplate>(state.range(1));
  const AudioBuffer c = Noise(rng, n);
  const AudioBuffer d = Noise(rng, n - n / 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SpeechBlend(c, d, t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_SpeechBlend)
    ->ArgsProduct({{800, 1600, 4800}, {1, 2, 3, 4, 5}})
    ->ArgNames({"samples", "mid"});

void BM_GopVector(benchmark::State& state) {
  Rng rng(2);
  const std::vector<std::string> phones(DefaultInventory().begin(), DefaultInventory().end());
  const auto frames = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<double>> rows(frames, std::vector<double>(kGopPhoneCount));
  for (auto& row : rows) {
    double sum = 0.0;
    for (double& v : row) sum += (v = rng.Uniform01());
    for (double& v : row) v /= sum;
  }
  const PosteriorMatrix m(phones, std::move(rows));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeGopVector(m, "SH", {0, frames}));
  }
}
BENCHMARK(BM_GopVector)->Arg(5)->Arg(20)->Arg(100);

// End-to-end run over a small in-memory corpus written to a temp dir.
class PipelineFixture : public benchmark::Fixture {
 public:
  void SetUp(const benchmark::State&) override {
    dir_ = std::filesystem::temp_directory_path() / "blendaug_bench";
    std::filesystem::create_directories(dir_);
    const char* phones[] = {"SH", "S", "Z", "V", "F", "NG", "N", "IY", "IH"};
    Rng rng(3);
    std::vector<PhonemeInterval> intervals;
    for (int u = 0; u < 32; ++u) {
      const std::string utt = "utt" + std::to_string(u);
      AudioBuffer audio = Noise(rng, 16000);
      WriteWav(audio, (dir_ / (utt + ".wav")).string());
      UtteranceRecord rec;
      rec.utt_id = utt;
      rec.wav_path = (dir_ / (utt + ".wav")).string();
      for (int p = 0; p < 8; ++p) {
        PhonemeInterval iv;
        iv.utt_id = utt;
        iv.start = 0.1 * p + 0.05;
        iv.duration = 0.08;
        iv.phone = phones[rng.UniformIndex(std::size(phones))];
        iv.score = 2;
        rec.phones.push_back(iv);
        corpus_.phone_index[iv.phone].push_back({utt, static_cast<std::size_t>(p)});
      }
      corpus_.utterances[utt] = std::move(rec);
    }
    dict_ = CloseDict(DefaultInventory());
    for (auto [a, b, w] : {std::tuple{"SH", "S", 0.76}, {"S", "SH", 0.76}, {"V", "F", 0.44},
                           {"F", "V", 0.44}, {"NG", "N", 0.43}, {"N", "NG", 0.43},
                           {"IY", "IH", 0.33}, {"IH", "IY", 0.33}, {"Z", "S", 0.77},
                           {"S", "Z", 0.77}}) {
      dict_.Add(a, b, w);
    }
  }

  void TearDown(const benchmark::State&) override { std::filesystem::remove_all(dir_); }

 protected:
  std::filesystem::path dir_;
  Corpus corpus_;
  CloseDict dict_;
};

BENCHMARK_DEFINE_F(PipelineFixture, Run)(benchmark::State& state) {
  AugConfig config;
  config.seed = 42;
  config.workers = static_cast<std::size_t>(state.range(0));
  config.candidates_per_utterance = 2;
  config.output_dir = (dir_ / "out").string();
  for (auto _ : state) {
    benchmark::DoNotOptimize(blendaug::Run(config, corpus_, dict_));
  }
}
BENCHMARK_REGISTER_F(PipelineFixture, Run)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace blendaug

BENCHMARK_MAIN();
