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

#ifndef BLENDAUG_PIPELINE_H_
#define BLENDAUG_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blendaug/align.h"
#include "blendaug/audio.h"
#include "blendaug/blender.h"
#include "blendaug/closedict.h"
#include "blendaug/mask.h"
#include "blendaug/rng.h"

namespace blendaug {

// Location of one phone occurrence in the corpus.
struct PhoneOccurrence {
  std::string utt_id;
  std::size_t index = 0;
  bool operator==(const PhoneOccurrence&) const = default;
};

struct Corpus {
  std::map<std::string, UtteranceRecord> utterances;
  // Good (score 2) occurrences per phone, in utt_id then position order.
  std::map<std::string, std::vector<PhoneOccurrence>> phone_index;
};

// Builds a corpus from an utterance manifest (JSONL with utt_id, wav and
// scores) and a CTM. Relative wav paths resolve against `base_dir`. WAVs are
// not opened here.
Corpus LoadCorpus(std::istream& manifest, std::istream& ctm,
                  const std::string& base_dir = "");
Corpus LoadCorpus(const std::string& manifest_path,
                  const std::string& ctm_path);

// One entry of the mask pool. When `overlay_lambda_choices` is non-empty the
// SmoothOverlay factor is drawn uniformly from it for every blend.
struct MaskChoice {
  MaskTemplate mask_template = MaskTemplate::kSmoothOverlay;
  MaskParams params;
  std::vector<double> overlay_lambda_choices;
  double weight = 1.0;
};

// SmoothOverlay factors drawn when the pool leaves the factor open: two for
// the accented class and two for the mispronounced class.
inline const std::vector<double> kDefaultOverlayLambdas = {0.1, 0.2, 0.5, 0.6};

// Templates 1-4 with equal weight.
std::vector<MaskChoice> DefaultMaskPool();

struct AugConfig {
  std::uint64_t seed = 0;
  std::size_t candidates_per_utterance = 1;
  std::vector<MaskChoice> mask_pool = DefaultMaskPool();
  LabelMode label_mode = LabelMode::kFrameWeighted;
  DonorWeighting donor_weighting = DonorWeighting::kConfusionWeighted;
  std::size_t min_segment_frames = kMinSegmentFrames;
  std::string output_dir = "out";
  std::size_t workers = 1;
};

// Throws InvalidArgument naming the offending field.
void ValidateConfig(const AugConfig& config);

struct SegmentRef {
  std::string utt_id;
  std::string phone;
  std::size_t index = 0;
  SampleSpan span;
};

struct AugmentedSample {
  std::string new_utt_id;
  std::string wav_path;  // file name, relative to the output directory
  int label = 0;
  LabelMode label_mode = LabelMode::kFrameWeighted;
  SegmentRef candidate;
  SegmentRef donor;
  MaskProperty mask;
  double donor_gain = 1.0;
  long shift = 0;
  int sample_rate = 0;
  std::vector<PhonemeInterval> updated_intervals;
};

struct Warning {
  std::string utt_id;
  std::string reason;
  std::string detail;
};

// Up to candidates_per_utterance interval indices drawn uniformly without
// replacement among score-2 intervals at least min_segment_frames long at
// `sample_rate`. Returned in draw order.
std::vector<std::size_t> SelectCandidates(const UtteranceRecord& record,
                                          int sample_rate,
                                          const AugConfig& config, Rng& rng);

// Uniform draw among good occurrences of `donor_phone` outside
// `exclude_utt`; falls back to occurrences inside it when nothing else
// exists. nullopt if the phone has no good occurrence.
std::optional<PhoneOccurrence> FindDonorOccurrence(
    const Corpus& corpus, const std::string& donor_phone,
    const std::string& exclude_utt, Rng& rng);

// Augments one utterance and writes `<utt_id>__aug<k>.wav` files into
// config.output_dir. Skipped candidates are appended to `warnings`. Throws
// on I/O failures.
std::vector<AugmentedSample> AugmentUtterance(const Corpus& corpus,
                                              const CloseDict& dict,
                                              const std::string& utt_id,
                                              const AugConfig& config,
                                              Rng& rng,
                                              std::vector<Warning>& warnings);

struct RunSummary {
  std::size_t utterances = 0;
  std::size_t produced = 0;
  std::map<int, std::size_t> per_label;
  std::map<std::string, std::size_t> per_mask;
  std::map<std::string, std::size_t> skipped;  // by reason
  std::size_t errors = 0;
};

struct RunResult {
  RunSummary summary;
  std::vector<AugmentedSample> samples;  // ordered by utt_id, then k
  std::vector<Warning> warnings;
};

inline constexpr const char* kManifestFile = "manifest.jsonl";
inline constexpr const char* kWarningsFile = "warnings.jsonl";

// Augments every utterance on config.workers threads. Each utterance draws
// from Rng(DeriveSeed(seed, utt_id)), so output does not depend on the worker
// count. Writes manifest.jsonl and warnings.jsonl into config.output_dir.
RunResult Run(const AugConfig& config, const Corpus& corpus,
              const CloseDict& dict);

// Output manifest line, keys in a fixed order.
std::string SampleToJson(const AugmentedSample& sample);
std::string WarningToJson(const Warning& warning);

// Throws FormatError when a manifest line does not match the output schema.
void ValidateSampleJson(std::string_view line);

// Rebuilds the mask from a manifest line's recorded provenance and returns
// the label it implies.
int RecomputeLabel(std::string_view line);

}  // namespace blendaug

#endif  // BLENDAUG_PIPELINE_H_
