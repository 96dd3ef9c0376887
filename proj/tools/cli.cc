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

#include "cli.h"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "blendaug/align.h"
#include "blendaug/closedict.h"
#include "blendaug/error.h"
#include "blendaug/gop.h"
#include "blendaug/mask.h"
#include "blendaug/pipeline.h"
#include "blendaug/rng.h"
#include "json.hpp"

namespace blendaug::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

// Raised for problems the caller can fix by changing flags or config.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes to a file, or to the fallback stream when the path is empty or "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : path_(path) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
      return;
    }
    file_.open(path, std::ios::binary);
    if (!file_) throw IoError("cannot open " + path + " for writing");
    stream_ = &file_;
  }

  std::ostream& get() { return *stream_; }

  void Close() {
    stream_->flush();
    if (!*stream_) throw IoError("write failed: " + (path_.empty() ? "-" : path_));
  }

 private:
  std::string path_;
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

void RequireFile(const std::string& field, const std::string& path) {
  if (path.empty()) throw UsageError(field + " path is required (--" + field + ")");
  if (!std::filesystem::is_regular_file(path)) {
    throw UsageError(field + " file not found: " + path);
  }
}

// Seed precedence: flag, then config file (both seen by CLI11), then the
// environment, then zero.
std::uint64_t ResolveSeed(const CLI::App& app, std::uint64_t parsed) {
  if (app.count("--seed") > 0) return parsed;
  const char* env = std::getenv(kSeedEnv);
  if (env == nullptr || *env == '\0') return parsed;
  std::uint64_t seed = 0;
  const std::string_view s(env);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError(std::string(kSeedEnv) + " is not an unsigned integer: " + env);
  }
  return seed;
}

std::set<std::string> LoadInventory(const std::string& path) {
  if (path.empty()) return DefaultInventory();
  RequireFile("inventory", path);
  return ReadInventory(path);
}

CloseDict LoadDictChecked(const std::string& path, const std::set<std::string>& inventory) {
  RequireFile("dict", path);
  return LoadDict(path, inventory);
}

ordered_json ParseJsonLine(const std::string& line, std::size_t line_no) {
  try {
    return ordered_json::parse(line);
  } catch (const ordered_json::parse_error& e) {
    throw FormatError(line_no, std::string("invalid JSON: ") + e.what());
  }
}

// Calls `fn(line, line_no)` for every non-blank line of `path`.
void ForEachLine(const std::string& path,
                 const std::function<void(const std::string&, std::size_t)>& fn) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      fn(line, line_no);
    } catch (const FormatError& e) {
      throw (e.line() > 0 ? e : FormatError(line_no, e.what())).WithPrefix(path);
    }
  }
}

// ---------------------------------------------------------------- augment

struct AugmentArgs {
  std::string dict;
  std::string inventory;
  std::string manifest;
  std::string ctm;
  std::string output_dir = "out";
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::size_t candidates = 1;
  std::string label_mode = "frame_weighted";
  std::string donor_weighting = "confusion_weighted";
  std::size_t min_segment_frames = kMinSegmentFrames;
  std::vector<std::string> masks;
  double lambda = 0.5;
  double depth = 0.5;
  double sigma_frac = 6.0;
  double crossfade = 0.2;
};

void AddMaskParamOptions(CLI::App* sub, MaskParams& p) {
  sub->add_option("--lambda", p.overlay_lambda, "SmoothOverlay factor")->capture_default_str();
  sub->add_option("--a", p.gaussian_depth, "Gaussian mask depth")->capture_default_str();
  sub->add_option("--sigma-frac", p.sigma_frac, "Gaussian width divisor")->capture_default_str();
  sub->add_option("--crossfade", p.crossfade_frac, "SmoothConcatenation ramp fraction")
      ->capture_default_str();
}

template <typename Fn>
auto AsUsage(const std::string& field, Fn&& fn) {
  try {
    return fn();
  } catch (const InvalidArgument& e) {
    throw UsageError(field + ": " + e.what());
  }
}

AugConfig BuildAugConfig(const CLI::App& sub, const AugmentArgs& a, const MaskParams& params) {
  AugConfig config;
  config.seed = ResolveSeed(sub, a.seed);
  config.workers = a.workers;
  config.candidates_per_utterance = a.candidates;
  config.output_dir = a.output_dir;
  config.min_segment_frames = a.min_segment_frames;
  config.label_mode = AsUsage("label-mode", [&] { return ParseLabelMode(a.label_mode); });
  config.donor_weighting =
      AsUsage("donor-weighting", [&] { return ParseDonorWeighting(a.donor_weighting); });

  const bool fixed_lambda = sub.count("--lambda") > 0;
  std::vector<MaskChoice> pool;
  if (a.masks.empty()) {
    pool = DefaultMaskPool();
  } else {
    for (const std::string& name : a.masks) {
      MaskChoice choice;
      choice.mask_template = AsUsage("mask", [&] { return ParseMaskTemplate(name); });
      if (choice.mask_template == MaskTemplate::kSmoothOverlay) {
        choice.overlay_lambda_choices = kDefaultOverlayLambdas;
      }
      pool.push_back(std::move(choice));
    }
  }
  for (MaskChoice& choice : pool) {
    choice.params = params;
    if (fixed_lambda) choice.overlay_lambda_choices.clear();
  }
  config.mask_pool = std::move(pool);
  AsUsage("config", [&] {
    ValidateConfig(config);
    return 0;
  });
  if (!(params.overlay_lambda >= 0.0 && params.overlay_lambda <= 1.0)) {
    throw UsageError("lambda must lie in [0, 1]");
  }
  return config;
}

void EchoConfig(const AugConfig& c, const AugmentArgs& a, std::ostream& err) {
  err << "config: dict=" << a.dict << " manifest=" << a.manifest << " ctm=" << a.ctm
      << " output-dir=" << c.output_dir << " seed=" << c.seed << " workers=" << c.workers
      << " candidates=" << c.candidates_per_utterance
      << " label-mode=" << LabelModeName(c.label_mode)
      << " donor-weighting=" << DonorWeightingName(c.donor_weighting)
      << " min-segment-frames=" << c.min_segment_frames << " masks=";
  for (std::size_t i = 0; i < c.mask_pool.size(); ++i) {
    const MaskChoice& m = c.mask_pool[i];
    err << (i ? "," : "") << MaskTemplateName(m.mask_template);
    if (m.mask_template == MaskTemplate::kSmoothOverlay) {
      if (m.overlay_lambda_choices.empty()) {
        err << "(lambda=" << m.params.overlay_lambda << ")";
      } else {
        err << "(lambda~{";
        for (std::size_t k = 0; k < m.overlay_lambda_choices.size(); ++k) {
          err << (k ? "," : "") << m.overlay_lambda_choices[k];
        }
        err << "})";
      }
    }
  }
  err << "\n";
}

void PrintSummary(const RunSummary& s, std::ostream& err) {
  auto row = [&](const std::string& key, std::size_t value) {
    err << "  " << std::left << std::setw(32) << key << value << "\n";
  };
  err << "summary:\n";
  row("utterances", s.utterances);
  row("produced", s.produced);
  for (const auto& [label, n] : s.per_label) row("label " + std::to_string(label), n);
  for (const auto& [mask, n] : s.per_mask) row("mask " + mask, n);
  for (const auto& [reason, n] : s.skipped) row("skipped " + reason, n);
  row("errors", s.errors);
}

// CLI11 only reads config files attached to the top-level app, so the
// subcommand's file is applied here. Keys name long options (optionally under
// an [augment] table); options given on the command line keep their value.
void ApplyConfigFile(CLI::App* sub, const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw UsageError("config file not found: " + path);
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML().from_file(path);
  } catch (const CLI::Error& e) {
    throw UsageError("config " + path + ": " + e.what());
  }
  for (const CLI::ConfigItem& item : items) {
    if (item.name == "++" || item.name == "--") continue;  // table markers
    if (!item.parents.empty() && item.parents != std::vector<std::string>{sub->get_name()}) {
      throw UsageError("config " + path + ": unknown table '" + item.fullname() + "'");
    }
    CLI::Option* opt = sub->get_option_no_throw("--" + item.name);
    if (opt == nullptr || item.name == "config") {
      throw UsageError("config " + path + ": unknown key '" + item.name + "'");
    }
    if (opt->count() > 0) continue;
    try {
      opt->add_result(item.inputs);
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw UsageError("config " + path + ": " + item.name + ": " + e.what());
    }
  }
}

int CmdAugment(const CLI::App& sub, const AugmentArgs& a, const MaskParams& params,
               std::ostream& err) {
  const AugConfig config = BuildAugConfig(sub, a, params);
  RequireFile("dict", a.dict);
  RequireFile("manifest", a.manifest);
  RequireFile("ctm", a.ctm);
  EchoConfig(config, a, err);
  const CloseDict dict = LoadDict(a.dict, LoadInventory(a.inventory));
  const Corpus corpus = LoadCorpus(a.manifest, a.ctm);
  const RunResult result = Run(config, corpus, dict);
  PrintSummary(result.summary, err);
  for (const Warning& w : result.warnings) {
    if (w.reason == "error") err << "error: " << w.utt_id << ": " << w.detail << "\n";
  }
  return result.summary.errors > 0 ? kExitData : kExitOk;
}

// -------------------------------------------------------------- mask-dump

struct MaskDumpArgs {
  std::string mask_template;
  std::size_t t = 0;
  std::size_t l = 0;
  std::string out;
};

int CmdMaskDump(const MaskDumpArgs& a, const MaskParams& params, std::ostream& out) {
  const MaskTemplate t = AsUsage("template", [&] { return ParseMaskTemplate(a.mask_template); });
  const MaskProperty property =
      AsUsage("mask", [&] { return GetProperty(t, a.t, a.l, params); });
  Sink sink(a.out, out);
  sink.get() << DumpMask(property);
  sink.Close();
  return kExitOk;
}

// -------------------------------------------------------------------- gop

struct GopArgs {
  std::string posteriors;
  std::string ctm;
  std::string utt;
  double frame_shift = 0.01;
  std::string out;
};

int CmdGop(const GopArgs& a, std::ostream& out) {
  RequireFile("posteriors", a.posteriors);
  RequireFile("ctm", a.ctm);
  if (!(a.frame_shift > 0.0)) throw UsageError("frame-shift must be positive");
  const PosteriorMatrix posteriors = ReadPosteriorCsv(a.posteriors);
  const std::vector<PhonemeInterval> all = ReadCtm(a.ctm);

  std::string utt = a.utt;
  if (utt.empty()) {
    for (const PhonemeInterval& iv : all) {
      if (utt.empty()) utt = iv.utt_id;
      if (iv.utt_id != utt) throw UsageError("ctm holds several utterances; pass --utt");
    }
  }
  std::vector<PhonemeInterval> intervals;
  for (const PhonemeInterval& iv : all) {
    if (iv.utt_id == utt) intervals.push_back(iv);
  }
  if (intervals.empty()) throw InvalidArgument("no intervals for utterance '" + utt + "'");
  const UtteranceRecord record = AssembleRecord(utt, "", std::move(intervals));

  Sink sink(a.out, out);
  for (std::size_t i = 0; i < record.phones.size(); ++i) {
    const PhonemeInterval& iv = record.phones[i];
    FrameRange range;
    range.begin = static_cast<std::size_t>(std::llround(iv.start / a.frame_shift));
    range.end = static_cast<std::size_t>(std::llround(iv.end() / a.frame_shift));
    // A phone shorter than half a frame still covers the frame it starts in.
    if (range.end <= range.begin) range.end = range.begin + 1;
    if (range.end > posteriors.frames()) {
      throw InvalidArgument("interval " + std::to_string(i) + " (" + iv.phone +
                            ") ends at frame " + std::to_string(range.end) +
                            " past the " + std::to_string(posteriors.frames()) +
                            " posterior frames");
    }
    GopRecord rec{utt, i, ComputeGopVector(posteriors, iv.phone, range)};
    sink.get() << GopRecordToJson(rec) << "\n";
  }
  sink.Close();
  return kExitOk;
}

// --------------------------------------------------------------- text-aug

struct BaselineArgs {
  std::string input;
  std::string bank;
  std::string dict;
  std::string inventory;
  std::uint64_t seed = 0;
  double close_ratio = 0.5;
  std::string donor_weighting = "confusion_weighted";
  std::string out;
};

void CheckRatio(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw UsageError("close-ratio must lie in [0, 1]");
}

PhoneSequence SequenceFromJson(const ordered_json& j, std::size_t line_no) {
  PhoneSequence seq;
  try {
    seq.phones = j.at("phones").get<std::vector<std::string>>();
    seq.labels = j.at("labels").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(line_no, std::string("expected phones and labels arrays: ") + e.what());
  }
  return seq;
}

std::string RequireUtt(const ordered_json& j, std::size_t line_no) {
  if (!j.is_object() || !j.contains("utt") || !j["utt"].is_string()) {
    throw FormatError(line_no, "missing string field 'utt'");
  }
  return j["utt"].get<std::string>();
}

int CmdTextAug(const CLI::App& sub, const BaselineArgs& a, std::ostream& out,
               std::ostream& err) {
  CheckRatio(a.close_ratio);
  const DonorWeighting weighting =
      AsUsage("donor-weighting", [&] { return ParseDonorWeighting(a.donor_weighting); });
  const std::uint64_t seed = ResolveSeed(sub, a.seed);
  RequireFile("input", a.input);
  const CloseDict dict = LoadDictChecked(a.dict, LoadInventory(a.inventory));

  Sink sink(a.out, out);
  std::size_t produced = 0, skipped = 0;
  ForEachLine(a.input, [&](const std::string& line, std::size_t line_no) {
    const ordered_json j = ParseJsonLine(line, line_no);
    const std::string utt = RequireUtt(j, line_no);
    const PhoneSequence seq = SequenceFromJson(j, line_no);
    if (seq.phones.size() != seq.labels.size()) {
      throw FormatError(line_no, "phones and labels differ in length");
    }
    Rng rng(DeriveSeed(seed, utt));
    TextAugResult r;
    try {
      r = TextAugment(seq, dict, rng, a.close_ratio, weighting);
    } catch (const InvalidArgument& e) {
      err << "skip: " << utt << ": " << e.what() << "\n";
      ++skipped;
      return;
    }
    ordered_json o;
    o["utt"] = utt;
    o["phones"] = r.sequence.phones;
    o["labels"] = r.sequence.labels;
    o["swapped_index"] = r.swapped_index;
    o["original"] = r.original;
    o["donor"] = r.donor;
    o["label"] = r.label;
    sink.get() << o.dump() << "\n";
    ++produced;
  });
  sink.Close();
  err << "text-aug: produced " << produced << ", skipped " << skipped << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- gop-aug

int CmdGopAug(const CLI::App& sub, const BaselineArgs& a, std::ostream& out,
              std::ostream& err) {
  CheckRatio(a.close_ratio);
  const DonorWeighting weighting =
      AsUsage("donor-weighting", [&] { return ParseDonorWeighting(a.donor_weighting); });
  const std::uint64_t seed = ResolveSeed(sub, a.seed);
  RequireFile("bank", a.bank);
  RequireFile("input", a.input);
  const CloseDict dict = LoadDictChecked(a.dict, LoadInventory(a.inventory));

  GopBank bank;
  ForEachLine(a.bank, [&](const std::string& line, std::size_t) {
    bank.Add(GopRecordFromJson(line).vector);
  });

  Sink sink(a.out, out);
  std::size_t produced = 0, skipped = 0;
  ForEachLine(a.input, [&](const std::string& line, std::size_t) {
    const GopRecord rec = GopRecordFromJson(line);
    Rng rng(DeriveSeed(seed, rec.utt + "#" + std::to_string(rec.phone_index)));
    GopAugResult r;
    try {
      r = GopAugment(bank, rec.vector, rec.vector.canonical, dict, rng, a.close_ratio,
                     weighting);
    } catch (const InvalidArgument& e) {
      err << "skip: " << rec.utt << "#" << rec.phone_index << ": " << e.what() << "\n";
      ++skipped;
      return;
    }
    ordered_json o = ordered_json::parse(GopRecordToJson({rec.utt, rec.phone_index, r.vector}));
    o["canonical"] = rec.vector.canonical;
    o["donor"] = r.donor;
    o["label"] = r.label;
    sink.get() << o.dump() << "\n";
    ++produced;
  });
  sink.Close();
  err << "gop-aug: bank " << bank.size() << ", produced " << produced << ", skipped "
      << skipped << "\n";
  return kExitOk;
}

// --------------------------------------------------------------- validate

struct ValidateArgs {
  std::string ctm;
  std::string dict;
  std::string inventory;
  std::string manifest;
  std::string posteriors;
  std::string output_manifest;
};

int CmdValidate(const ValidateArgs& a, std::ostream& err) {
  int failures = 0;
  int checked = 0;
  auto check = [&](const std::string& kind, const std::string& path,
                   const std::function<std::string()>& fn) {
    if (path.empty()) return;
    ++checked;
    try {
      err << "ok: " << kind << " " << path << " (" << fn() << ")\n";
    } catch (const Error& e) {
      ++failures;
      const std::string what = e.what();
      err << "error: " << kind << " " << (what.rfind(path, 0) == 0 ? "" : path + ": ") << what
          << "\n";
    }
  };

  const std::set<std::string> inventory = LoadInventory(a.inventory);
  check("ctm", a.ctm, [&] { return std::to_string(ReadCtm(a.ctm).size()) + " intervals"; });
  check("dict", a.dict, [&] {
    return std::to_string(LoadDict(a.dict, inventory).pair_count()) + " pairs";
  });
  check("manifest", a.manifest, [&] {
    if (a.ctm.empty()) throw UsageError("--manifest needs --ctm");
    const Corpus corpus = LoadCorpus(a.manifest, a.ctm);
    return std::to_string(corpus.utterances.size()) + " utterances";
  });
  check("posteriors", a.posteriors, [&] {
    return std::to_string(ReadPosteriorCsv(a.posteriors).frames()) + " frames";
  });
  check("output-manifest", a.output_manifest, [&] {
    std::size_t n = 0;
    ForEachLine(a.output_manifest, [&](const std::string& line, std::size_t line_no) {
      ValidateSampleJson(line);
      const int recorded = ordered_json::parse(line)["label"].get<int>();
      const int recomputed = RecomputeLabel(line);
      if (recorded != recomputed) {
        throw FormatError(line_no, "label " + std::to_string(recorded) +
                                       " disagrees with recomputed " +
                                       std::to_string(recomputed));
      }
      ++n;
    });
    return std::to_string(n) + " records";
  });
  if (checked == 0) throw UsageError("nothing to validate; pass at least one file");
  return failures > 0 ? kExitData : kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Phoneme-level speech blending augmentation", "blendaug"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "blendaug 0.1.0");

  AugmentArgs aug;
  MaskParams aug_params;
  CLI::App* augment = app.add_subcommand("augment", "Blend phonemes over a corpus");
  std::string config_path;
  augment->add_option("--config", config_path, "TOML run configuration; flags override it");
  augment->add_option("--dict", aug.dict, "Close-phone dictionary (TSV)");
  augment->add_option("--inventory", aug.inventory, "Phone inventory, one per line");
  augment->add_option("--manifest", aug.manifest, "Input manifest (JSONL)");
  augment->add_option("--ctm", aug.ctm, "Alignment (CTM)");
  augment->add_option("--output-dir", aug.output_dir, "Output directory")->capture_default_str();
  augment->add_option("--seed", aug.seed, "Random seed (else $BLENDAUG_SEED)");
  augment->add_option("--workers", aug.workers, "Worker threads")->capture_default_str();
  augment->add_option("--candidates", aug.candidates, "Candidates per utterance")
      ->capture_default_str();
  augment->add_option("--label-mode", aug.label_mode, "frame_weighted or paper_floor")
      ->capture_default_str();
  augment->add_option("--donor-weighting", aug.donor_weighting, "confusion_weighted or uniform")
      ->capture_default_str();
  augment->add_option("--min-segment-frames", aug.min_segment_frames, "Shortest usable segment")
      ->capture_default_str();
  augment->add_option("--mask", aug.masks, "Mask template(s); default: ids 1-4");
  AddMaskParamOptions(augment, aug_params);

  MaskDumpArgs dump;
  MaskParams dump_params;
  CLI::App* mask_dump = app.add_subcommand("mask-dump", "Write a mask curve as CSV");
  mask_dump->add_option("template", dump.mask_template, "Mask template name or id")->required();
  mask_dump->add_option("--t", dump.t, "Candidate length in frames")->required();
  mask_dump->add_option("--l", dump.l, "Donor length in frames")->required();
  mask_dump->add_option("--out", dump.out, "Output file (default stdout)");
  AddMaskParamOptions(mask_dump, dump_params);

  GopArgs gop;
  CLI::App* gop_cmd = app.add_subcommand("gop", "Compute 84-dim GOP vectors");
  gop_cmd->add_option("--posteriors", gop.posteriors, "Posterior CSV")->required();
  gop_cmd->add_option("--ctm", gop.ctm, "Alignment (CTM)")->required();
  gop_cmd->add_option("--utt", gop.utt, "Utterance id (needed if the CTM holds several)");
  gop_cmd->add_option("--frame-shift", gop.frame_shift, "Seconds per posterior frame")
      ->capture_default_str();
  gop_cmd->add_option("--out", gop.out, "Output JSONL (default stdout)");

  BaselineArgs text;
  CLI::App* text_aug = app.add_subcommand("text-aug", "Swap phones in label sequences");
  text_aug->add_option("--input", text.input, "JSONL {utt, phones, labels}")->required();
  BaselineArgs gopa;
  CLI::App* gop_aug = app.add_subcommand("gop-aug", "Swap GOP vectors with bank entries");
  gop_aug->add_option("--bank", gopa.bank, "JSONL GOP records of good phones")->required();
  gop_aug->add_option("--input", gopa.input, "JSONL GOP records to augment")->required();
  for (auto [sub, args] : {std::pair{text_aug, &text}, std::pair{gop_aug, &gopa}}) {
    sub->add_option("--dict", args->dict, "Close-phone dictionary (TSV)");
    sub->add_option("--inventory", args->inventory, "Phone inventory, one per line");
    sub->add_option("--seed", args->seed, "Random seed (else $BLENDAUG_SEED)");
    sub->add_option("--close-ratio", args->close_ratio, "Probability of a close swap")
        ->capture_default_str();
    sub->add_option("--donor-weighting", args->donor_weighting, "confusion_weighted or uniform")
        ->capture_default_str();
    sub->add_option("--out", args->out, "Output JSONL (default stdout)");
  }

  ValidateArgs val;
  CLI::App* validate = app.add_subcommand("validate", "Check input and output files");
  validate->add_option("--ctm", val.ctm, "Alignment (CTM)");
  validate->add_option("--dict", val.dict, "Close-phone dictionary (TSV)");
  validate->add_option("--inventory", val.inventory, "Phone inventory, one per line");
  validate->add_option("--manifest", val.manifest, "Input manifest (JSONL, needs --ctm)");
  validate->add_option("--posteriors", val.posteriors, "Posterior CSV");
  validate->add_option("--output-manifest", val.output_manifest, "Augmented manifest (JSONL)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (augment->parsed() && !config_path.empty()) ApplyConfigFile(augment, config_path);
    if (augment->parsed()) return CmdAugment(*augment, aug, aug_params, err);
    if (mask_dump->parsed()) return CmdMaskDump(dump, dump_params, out);
    if (gop_cmd->parsed()) return CmdGop(gop, out);
    if (text_aug->parsed()) return CmdTextAug(*text_aug, text, out, err);
    if (gop_aug->parsed()) return CmdGopAug(*gop_aug, gopa, out, err);
    if (validate->parsed()) return CmdValidate(val, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace blendaug::cli
