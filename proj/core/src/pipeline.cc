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

#include "blendaug/pipeline.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "blendaug/error.h"
#include "json.hpp"

namespace blendaug {
namespace {

using ordered_json = nlohmann::ordered_json;
namespace fs = std::filesystem;

double Round6(double x) { return std::round(x * 1e6) / 1e6; }

ordered_json SegmentJson(const SegmentRef& ref) {
  ordered_json j;
  j["utt_id"] = ref.utt_id;
  j["phone"] = ref.phone;
  j["index"] = ref.index;
  j["start_sample"] = ref.span.start;
  j["end_sample"] = ref.span.end;
  return j;
}

ordered_json RegionJson(const RegionSpec& r) {
  ordered_json j;
  switch (r.kind) {
    case RegionSpec::Kind::kConstant:
      j["kind"] = "constant";
      j["value"] = r.from;
      break;
    case RegionSpec::Kind::kRamp:
      j["kind"] = "ramp";
      j["from"] = r.from;
      j["to"] = r.to;
      break;
    case RegionSpec::Kind::kGaussian:
      j["kind"] = "gaussian";
      j["depth"] = r.depth;
      j["sigma"] = r.sigma;
      j["center"] = r.center;
      break;
  }
  return j;
}

ordered_json MaskJson(const MaskProperty& p) {
  ordered_json j;
  j["template"] = MaskTemplateName(p.mask_template);
  j["mid"] = static_cast<int>(p.mask_template);
  j["candidate_frames"] = p.candidate_frames;
  j["donor_frames"] = p.donor_frames;
  j["mu"] = p.mu;
  j["regions"] = p.regions;
  j["widths"] = p.widths;
  ordered_json lambdas = ordered_json::array();
  for (const auto& r : p.lambdas) lambdas.push_back(RegionJson(r));
  j["lambdas"] = std::move(lambdas);
  ordered_json params;
  params["overlay_lambda"] = p.params.overlay_lambda;
  params["gaussian_depth"] = p.params.gaussian_depth;
  params["sigma_frac"] = p.params.sigma_frac;
  params["crossfade_frac"] = p.params.crossfade_frac;
  j["params"] = std::move(params);
  return j;
}

std::size_t SpanLengthOrZero(const PhonemeInterval& iv, int rate) {
  try {
    return ToSpan(iv, rate).length();
  } catch (const InvalidArgument&) {
    return 0;
  }
}

// Skipped-candidate reasons.
constexpr const char* kNoEligibleCandidate = "no_eligible_candidate";
constexpr const char* kNoCloseEntry = "no_close_entry";
constexpr const char* kNoDonorOccurrence = "no_donor_occurrence";
constexpr const char* kAlignmentExceedsAudio = "alignment_exceeds_audio";
constexpr const char* kSampleRateMismatch = "sample_rate_mismatch";
constexpr const char* kShortSegment = "short_segment";
constexpr const char* kSilentDonor = "silent_donor";
constexpr const char* kDegenerateMask = "degenerate_mask";

const MaskChoice& PickMask(const std::vector<MaskChoice>& pool, Rng& rng) {
  double total = 0.0;
  for (const auto& m : pool) total += m.weight;
  const double u = rng.Uniform01() * total;
  double acc = 0.0;
  for (const auto& m : pool) {
    acc += m.weight;
    if (u < acc) return m;
  }
  return pool.back();
}

const ordered_json& Require(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field '") + key + "'");
  }
  return j[key];
}

template <typename Pred>
const ordered_json& RequireTyped(const ordered_json& j, const char* key, Pred pred,
                                 const char* type) {
  const auto& v = Require(j, key);
  if (!pred(v)) throw FormatError(std::string("field '") + key + "' must be " + type);
  return v;
}

const ordered_json& RequireUnsigned(const ordered_json& j, const char* key) {
  return RequireTyped(j, key, [](const ordered_json& v) { return v.is_number_unsigned(); },
                      "a non-negative integer");
}

const ordered_json& RequireNumber(const ordered_json& j, const char* key) {
  return RequireTyped(j, key, [](const ordered_json& v) { return v.is_number(); }, "a number");
}

const ordered_json& RequireString(const ordered_json& j, const char* key) {
  return RequireTyped(j, key, [](const ordered_json& v) { return v.is_string(); }, "a string");
}

ordered_json ParseLine(std::string_view line) {
  try {
    return ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

MaskParams ParamsFromJson(const ordered_json& j) {
  MaskParams p;
  p.overlay_lambda = RequireNumber(j, "overlay_lambda").get<double>();
  p.gaussian_depth = RequireNumber(j, "gaussian_depth").get<double>();
  p.sigma_frac = RequireNumber(j, "sigma_frac").get<double>();
  p.crossfade_frac = RequireNumber(j, "crossfade_frac").get<double>();
  return p;
}

}  // namespace

Corpus LoadCorpus(std::istream& manifest, std::istream& ctm, const std::string& base_dir) {
  struct Entry {
    std::string wav;
    std::vector<int> scores;
  };
  std::map<std::string, Entry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(manifest, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const ordered_json j = ParseLine(line);
      const std::string utt = RequireString(j, "utt_id").get<std::string>();
      std::string wav = RequireString(j, "wav").get<std::string>();
      const auto& scores = RequireTyped(
          j, "scores", [](const ordered_json& v) { return v.is_array(); }, "an array");
      Entry entry;
      for (const auto& s : scores) {
        if (!s.is_number_integer() || s.get<int>() < 0 || s.get<int>() > 2) {
          throw FormatError("scores must be integers in {0, 1, 2}");
        }
        entry.scores.push_back(s.get<int>());
      }
      if (!base_dir.empty() && fs::path(wav).is_relative()) {
        wav = (fs::path(base_dir) / wav).string();
      }
      entry.wav = std::move(wav);
      if (!entries.emplace(utt, std::move(entry)).second) {
        throw FormatError("duplicate utt_id '" + utt + "'");
      }
    } catch (const FormatError& e) {
      throw FormatError(line_no, std::string("manifest: ") + e.what());
    }
  }

  std::map<std::string, std::vector<PhonemeInterval>> by_utt;
  for (auto& iv : ParseCtm(ctm)) {
    if (!entries.contains(iv.utt_id)) {
      throw FormatError("CTM references unknown utterance '" + iv.utt_id + "'");
    }
    by_utt[iv.utt_id].push_back(std::move(iv));
  }

  Corpus corpus;
  for (auto& [utt, entry] : entries) {
    auto it = by_utt.find(utt);
    if (it == by_utt.end()) {
      throw FormatError("utterance '" + utt + "' has no CTM intervals");
    }
    auto& phones = it->second;
    if (phones.size() != entry.scores.size()) {
      throw FormatError("utterance '" + utt + "' has " + std::to_string(phones.size()) +
                        " CTM intervals but " + std::to_string(entry.scores.size()) +
                        " scores");
    }
    for (std::size_t i = 0; i < phones.size(); ++i) phones[i].score = entry.scores[i];
    corpus.utterances.emplace(utt, AssembleRecord(utt, entry.wav, std::move(phones)));
  }
  for (const auto& [utt, record] : corpus.utterances) {
    for (std::size_t i = 0; i < record.phones.size(); ++i) {
      if (record.phones[i].score == kGoodScore) {
        corpus.phone_index[record.phones[i].phone].push_back({utt, i});
      }
    }
  }
  return corpus;
}

Corpus LoadCorpus(const std::string& manifest_path, const std::string& ctm_path) {
  std::ifstream manifest(manifest_path);
  if (!manifest) throw IoError("cannot open manifest: " + manifest_path);
  std::ifstream ctm(ctm_path);
  if (!ctm) throw IoError("cannot open CTM: " + ctm_path);
  return LoadCorpus(manifest, ctm, fs::path(manifest_path).parent_path().string());
}

std::vector<MaskChoice> DefaultMaskPool() {
  std::vector<MaskChoice> pool;
  for (MaskTemplate t : {MaskTemplate::kSmoothOverlay, MaskTemplate::kCutMix,
                         MaskTemplate::kSmoothConcatenation,
                         MaskTemplate::kSmoothGaussianOverlay}) {
    MaskChoice choice;
    choice.mask_template = t;
    if (t == MaskTemplate::kSmoothOverlay) choice.overlay_lambda_choices = kDefaultOverlayLambdas;
    pool.push_back(std::move(choice));
  }
  return pool;
}

void ValidateConfig(const AugConfig& config) {
  if (config.candidates_per_utterance == 0) {
    throw InvalidArgument("candidates_per_utterance must be at least 1");
  }
  if (config.mask_pool.empty()) throw InvalidArgument("mask_pool is empty");
  for (const auto& m : config.mask_pool) {
    if (!(m.weight > 0.0) || !std::isfinite(m.weight)) {
      throw InvalidArgument("mask_pool weights must be positive");
    }
    for (double l : m.overlay_lambda_choices) {
      if (!(l >= 0.0 && l <= 1.0)) throw InvalidArgument("mask_pool lambda outside [0, 1]");
    }
  }
  if (config.min_segment_frames == 0) throw InvalidArgument("min_segment_frames must be positive");
  if (config.output_dir.empty()) throw InvalidArgument("output_dir is empty");
  if (config.workers == 0) throw InvalidArgument("workers must be at least 1");
}

std::vector<std::size_t> SelectCandidates(const UtteranceRecord& record, int sample_rate,
                                          const AugConfig& config, Rng& rng) {
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < record.phones.size(); ++i) {
    const auto& iv = record.phones[i];
    if (iv.score == kGoodScore && SpanLengthOrZero(iv, sample_rate) >= config.min_segment_frames) {
      eligible.push_back(i);
    }
  }
  // Partial Fisher-Yates.
  const std::size_t k = std::min(config.candidates_per_utterance, eligible.size());
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.UniformIndex(eligible.size() - i);
    std::swap(eligible[i], eligible[j]);
  }
  eligible.resize(k);
  return eligible;
}

std::optional<PhoneOccurrence> FindDonorOccurrence(const Corpus& corpus,
                                                   const std::string& donor_phone,
                                                   const std::string& exclude_utt, Rng& rng) {
  auto it = corpus.phone_index.find(donor_phone);
  if (it == corpus.phone_index.end() || it->second.empty()) return std::nullopt;
  const auto& all = it->second;
  std::vector<const PhoneOccurrence*> others;
  for (const auto& occ : all) {
    if (occ.utt_id != exclude_utt) others.push_back(&occ);
  }
  if (others.empty()) return all[rng.UniformIndex(all.size())];
  return *others[rng.UniformIndex(others.size())];
}

std::vector<AugmentedSample> AugmentUtterance(const Corpus& corpus, const CloseDict& dict,
                                              const std::string& utt_id,
                                              const AugConfig& config, Rng& rng,
                                              std::vector<Warning>& warnings) {
  auto rec_it = corpus.utterances.find(utt_id);
  if (rec_it == corpus.utterances.end()) {
    throw InvalidArgument("unknown utterance '" + utt_id + "'");
  }
  const UtteranceRecord& record = rec_it->second;
  const AudioBuffer audio = ReadWav(record.wav_path);
  const int rate = audio.sample_rate;

  std::vector<AugmentedSample> samples;
  const auto candidates = SelectCandidates(record, rate, config, rng);
  if (candidates.empty()) {
    warnings.push_back({utt_id, kNoEligibleCandidate, "no good phone long enough to blend"});
    return samples;
  }

  std::map<std::string, AudioBuffer> donor_audio;
  auto load_donor = [&](const std::string& id) -> const AudioBuffer& {
    if (id == utt_id) return audio;
    auto it = donor_audio.find(id);
    if (it == donor_audio.end()) {
      it = donor_audio.emplace(id, ReadWav(corpus.utterances.at(id).wav_path)).first;
    }
    return it->second;
  };

  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const std::size_t ci = candidates[k];
    const PhonemeInterval& cand_iv = record.phones[ci];
    auto skip = [&](const char* reason, const std::string& detail) {
      warnings.push_back({utt_id, reason,
                          cand_iv.phone + "#" + std::to_string(ci) + ": " + detail});
    };

    const SampleSpan cand_span = ToSpan(cand_iv, rate);
    if (cand_span.end > audio.size()) {
      skip(kAlignmentExceedsAudio, "candidate ends at sample " + std::to_string(cand_span.end));
      continue;
    }

    std::optional<std::string> donor_phone;
    std::optional<PhoneOccurrence> occurrence;
    bool no_entry = false;
    for (int attempt = 0; attempt <= kMaxDonorRetries && !occurrence; ++attempt) {
      donor_phone = PickDonor(dict, cand_iv.phone, rng, config.donor_weighting);
      if (!donor_phone) {
        no_entry = true;
        break;
      }
      occurrence = FindDonorOccurrence(corpus, *donor_phone, utt_id, rng);
    }
    if (no_entry) {
      skip(kNoCloseEntry, "phone has no close-pair entry");
      continue;
    }
    if (!occurrence) {
      skip(kNoDonorOccurrence, "no good occurrence of any drawn donor");
      continue;
    }

    const UtteranceRecord& donor_record = corpus.utterances.at(occurrence->utt_id);
    const PhonemeInterval& donor_iv = donor_record.phones[occurrence->index];
    const AudioBuffer& donor_utt = load_donor(occurrence->utt_id);
    if (donor_utt.sample_rate != rate) {
      skip(kSampleRateMismatch, "donor " + occurrence->utt_id + " is at " +
                                    std::to_string(donor_utt.sample_rate) + " Hz");
      continue;
    }
    SampleSpan donor_span;
    try {
      donor_span = ToSpan(donor_iv, rate);
    } catch (const InvalidArgument& e) {
      skip(kShortSegment, e.what());
      continue;
    }
    if (donor_span.end > donor_utt.size()) {
      skip(kAlignmentExceedsAudio, "donor " + occurrence->utt_id + " ends at sample " +
                                       std::to_string(donor_span.end));
      continue;
    }
    if (donor_span.length() < config.min_segment_frames) {
      skip(kShortSegment, "donor segment of " + std::to_string(donor_span.length()) + " frames");
      continue;
    }

    const MaskChoice& choice = PickMask(config.mask_pool, rng);
    MaskParams params = choice.params;
    if (choice.mask_template == MaskTemplate::kSmoothOverlay &&
        !choice.overlay_lambda_choices.empty()) {
      params.overlay_lambda =
          choice.overlay_lambda_choices[rng.UniformIndex(choice.overlay_lambda_choices.size())];
    }

    BlendResult blended;
    try {
      blended = SpeechBlend(Slice(audio, cand_span), Slice(donor_utt, donor_span),
                            choice.mask_template, params, config.label_mode);
    } catch (const SilentDonorError& e) {
      skip(kSilentDonor, "donor " + occurrence->utt_id + "#" +
                             std::to_string(occurrence->index));
      continue;
    } catch (const InvalidArgument& e) {
      skip(kDegenerateMask, e.what());
      continue;
    }

    SpliceResult spliced = Splice(audio, cand_span, blended.audio);

    AugmentedSample sample;
    sample.new_utt_id = utt_id + "__aug" + std::to_string(k);
    sample.wav_path = sample.new_utt_id + ".wav";
    sample.label = blended.label;
    sample.label_mode = config.label_mode;
    sample.candidate = {utt_id, cand_iv.phone, ci, cand_span};
    sample.donor = {occurrence->utt_id, donor_iv.phone, occurrence->index, donor_span};
    sample.mask = blended.property;
    sample.donor_gain = blended.donor_gain;
    sample.shift = spliced.shift;
    sample.sample_rate = rate;
    sample.updated_intervals = record.phones;
    const double shift_seconds = static_cast<double>(spliced.shift) / rate;
    for (std::size_t i = ci + 1; i < sample.updated_intervals.size(); ++i) {
      sample.updated_intervals[i].start += shift_seconds;
    }
    PhonemeInterval& replaced = sample.updated_intervals[ci];
    replaced.start = static_cast<double>(cand_span.start) / rate;
    replaced.duration = static_cast<double>(blended.audio.size()) / rate;
    replaced.score = blended.label;

    WriteWav(spliced.audio, (fs::path(config.output_dir) / sample.wav_path).string());
    samples.push_back(std::move(sample));
  }
  return samples;
}

RunResult Run(const AugConfig& config, const Corpus& corpus, const CloseDict& dict) {
  ValidateConfig(config);
  std::error_code ec;
  fs::create_directories(config.output_dir, ec);
  if (ec) throw IoError("cannot create output directory " + config.output_dir + ": " + ec.message());

  std::vector<std::string> utt_ids;
  for (const auto& [id, _] : corpus.utterances) utt_ids.push_back(id);

  struct Slot {
    std::vector<AugmentedSample> samples;
    std::vector<Warning> warnings;
    std::optional<std::string> error;
  };
  std::vector<Slot> slots(utt_ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < utt_ids.size(); i = next++) {
      Rng rng(DeriveSeed(config.seed, utt_ids[i]));
      try {
        slots[i].samples = AugmentUtterance(corpus, dict, utt_ids[i], config, rng, slots[i].warnings);
      } catch (const std::exception& e) {
        slots[i].samples.clear();
        slots[i].error = e.what();
      }
    }
  };
  const std::size_t n_workers = std::clamp<std::size_t>(config.workers, 1, std::max<std::size_t>(utt_ids.size(), 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < n_workers; ++w) pool.emplace_back(worker);
    worker();
  }

  RunResult result;
  result.summary.utterances = utt_ids.size();
  for (std::size_t i = 0; i < slots.size(); ++i) {
    auto& slot = slots[i];
    for (auto& w : slot.warnings) {
      ++result.summary.skipped[w.reason];
      result.warnings.push_back(std::move(w));
    }
    if (slot.error) {
      ++result.summary.errors;
      result.warnings.push_back({utt_ids[i], "error", *slot.error});
    }
    for (auto& s : slot.samples) {
      ++result.summary.produced;
      ++result.summary.per_label[s.label];
      ++result.summary.per_mask[std::string(MaskTemplateName(s.mask.mask_template))];
      result.samples.push_back(std::move(s));
    }
  }

  const auto manifest_path = (fs::path(config.output_dir) / kManifestFile).string();
  std::ofstream manifest(manifest_path, std::ios::binary | std::ios::trunc);
  if (!manifest) throw IoError("cannot write " + manifest_path);
  for (const auto& s : result.samples) manifest << SampleToJson(s) << '\n';
  const auto warnings_path = (fs::path(config.output_dir) / kWarningsFile).string();
  std::ofstream warnings(warnings_path, std::ios::binary | std::ios::trunc);
  if (!warnings) throw IoError("cannot write " + warnings_path);
  for (const auto& w : result.warnings) warnings << WarningToJson(w) << '\n';
  if (!manifest || !warnings) throw IoError("failed writing run outputs");
  return result;
}

std::string SampleToJson(const AugmentedSample& s) {
  ordered_json j;
  j["new_utt_id"] = s.new_utt_id;
  j["wav"] = s.wav_path;
  j["label"] = s.label;
  j["label_mode"] = LabelModeName(s.label_mode);
  j["candidate"] = SegmentJson(s.candidate);
  j["donor"] = SegmentJson(s.donor);
  j["mask"] = MaskJson(s.mask);
  j["donor_gain"] = s.donor_gain;
  j["shift"] = s.shift;
  j["sample_rate"] = s.sample_rate;
  ordered_json intervals = ordered_json::array();
  for (const auto& iv : s.updated_intervals) {
    ordered_json e;
    e["phone"] = iv.phone;
    e["start"] = Round6(iv.start);
    e["dur"] = Round6(iv.duration);
    if (iv.score) {
      e["score"] = *iv.score;
    } else {
      e["score"] = nullptr;
    }
    intervals.push_back(std::move(e));
  }
  j["intervals"] = std::move(intervals);
  return j.dump();
}

std::string WarningToJson(const Warning& w) {
  ordered_json j;
  j["utt_id"] = w.utt_id;
  j["reason"] = w.reason;
  j["detail"] = w.detail;
  return j.dump();
}

void ValidateSampleJson(std::string_view line) {
  const ordered_json j = ParseLine(line);
  if (!j.is_object()) throw FormatError("manifest record is not an object");
  RequireString(j, "new_utt_id");
  RequireString(j, "wav");
  const int label = RequireTyped(j, "label", [](const ordered_json& v) { return v.is_number_integer(); },
                                 "an integer").get<int>();
  if (label != 0 && label != 1) throw FormatError("label must be 0 or 1");
  ParseLabelMode(RequireString(j, "label_mode").get<std::string>());
  for (const char* seg : {"candidate", "donor"}) {
    const auto& s = Require(j, seg);
    RequireString(s, "utt_id");
    RequireString(s, "phone");
    RequireUnsigned(s, "index");
    const auto start = RequireUnsigned(s, "start_sample").get<std::size_t>();
    const auto end = RequireUnsigned(s, "end_sample").get<std::size_t>();
    if (end <= start) throw FormatError(std::string(seg) + " span is empty");
  }
  const auto& mask = Require(j, "mask");
  try {
    ParseMaskTemplate(RequireString(mask, "template").get<std::string>());
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  }
  RequireUnsigned(mask, "mid");
  RequireUnsigned(mask, "candidate_frames");
  RequireUnsigned(mask, "donor_frames");
  RequireUnsigned(mask, "mu");
  const auto regions = RequireUnsigned(mask, "regions").get<std::size_t>();
  const auto& widths = RequireTyped(mask, "widths", [](const ordered_json& v) { return v.is_array(); }, "an array");
  const auto& lambdas = RequireTyped(mask, "lambdas", [](const ordered_json& v) { return v.is_array(); }, "an array");
  if (widths.size() != regions || lambdas.size() != regions) {
    throw FormatError("mask widths/lambdas do not match region count");
  }
  ParamsFromJson(Require(mask, "params"));
  RequireNumber(j, "donor_gain");
  RequireTyped(j, "shift", [](const ordered_json& v) { return v.is_number_integer(); }, "an integer");
  RequireUnsigned(j, "sample_rate");
  const auto& intervals = RequireTyped(j, "intervals", [](const ordered_json& v) { return v.is_array(); }, "an array");
  double prev_end = 0.0;
  for (const auto& iv : intervals) {
    RequireString(iv, "phone");
    const double start = RequireNumber(iv, "start").get<double>();
    const double dur = RequireNumber(iv, "dur").get<double>();
    if (!(dur > 0.0)) throw FormatError("interval duration must be positive");
    // Each timestamp is rounded to 1e-6 s, so allow that much slack twice.
    if (start < prev_end - kOverlapTolerance - 2e-6) throw FormatError("intervals overlap or are unsorted");
    prev_end = start + dur;
    const auto& score = Require(iv, "score");
    if (!score.is_null() && !(score.is_number_integer() && score.get<int>() >= 0 && score.get<int>() <= 2)) {
      throw FormatError("interval score must be null or in {0, 1, 2}");
    }
  }
}

int RecomputeLabel(std::string_view line) {
  const ordered_json j = ParseLine(line);
  const auto& mask = Require(j, "mask");
  const MaskTemplate t = ParseMaskTemplate(RequireString(mask, "template").get<std::string>());
  const MaskProperty property =
      GetProperty(t, RequireUnsigned(mask, "candidate_frames").get<std::size_t>(),
                  RequireUnsigned(mask, "donor_frames").get<std::size_t>(),
                  ParamsFromJson(Require(mask, "params")));
  const LabelMode mode = ParseLabelMode(RequireString(j, "label_mode").get<std::string>());
  return Label(property, GenerateMask(property).curve, mode);
}

}  // namespace blendaug
