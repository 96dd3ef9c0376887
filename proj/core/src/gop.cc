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

#include "blendaug/gop.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "blendaug/blender.h"
#include "blendaug/error.h"
#include "json.hpp"

namespace blendaug {
namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string_view> SplitCsv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    const auto comma = line.find(',', pos);
    auto field = line.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) field.remove_prefix(1);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) field.remove_suffix(1);
    out.push_back(field);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

double LogFloored(double p) { return std::log(std::max(p, kPosteriorFloor)); }

void CheckRange(const PosteriorMatrix& m, FrameRange range) {
  if (range.begin >= range.end) throw InvalidArgument("empty frame range");
  if (range.end > m.frames()) {
    throw InvalidArgument("frame range ends at " + std::to_string(range.end) +
                          " but matrix has " + std::to_string(m.frames()) + " frames");
  }
}

double LppAt(const PosteriorMatrix& m, std::size_t column, FrameRange range) {
  double sum = 0.0;
  for (std::size_t t = range.begin; t < range.end; ++t) sum += LogFloored(m.at(t, column));
  return sum / static_cast<double>(range.length());
}

}  // namespace

PosteriorMatrix::PosteriorMatrix(std::vector<std::string> phones,
                                 std::vector<std::vector<double>> rows)
    : phones_(std::move(phones)), rows_(std::move(rows)) {
  if (phones_.size() != kGopPhoneCount) {
    throw InvalidArgument("posterior matrix needs " + std::to_string(kGopPhoneCount) +
                          " phones, got " + std::to_string(phones_.size()));
  }
  for (std::size_t i = 0; i < phones_.size(); ++i) {
    if (phones_[i].empty()) throw InvalidArgument("empty phone label");
    if (!index_.emplace(phones_[i], i).second) {
      throw InvalidArgument("duplicate phone label " + phones_[i]);
    }
  }
  if (rows_.empty()) throw InvalidArgument("posterior matrix has no frames");
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    const auto& row = rows_[t];
    if (row.size() != kGopPhoneCount) {
      throw InvalidArgument("frame " + std::to_string(t) + " has " +
                            std::to_string(row.size()) + " values");
    }
    double sum = 0.0;
    for (double p : row) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidArgument("frame " + std::to_string(t) + ": probability outside [0, 1]");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kPosteriorSumTolerance) {
      throw InvalidArgument("frame " + std::to_string(t) + ": row sums to " +
                            std::to_string(sum));
    }
  }
}

std::size_t PosteriorMatrix::PhoneIndex(std::string_view phone) const {
  auto it = index_.find(phone);
  if (it == index_.end()) throw InvalidArgument("unknown phone " + std::string(phone));
  return it->second;
}

PosteriorMatrix ParsePosteriorCsv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> phones;
  while (phones.empty() && std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    for (auto f : SplitCsv(line)) phones.emplace_back(f);
  }
  if (phones.empty()) throw FormatError("posterior CSV has no header");
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = SplitCsv(line);
    if (fields.size() != phones.size()) {
      throw FormatError(line_no, "expected " + std::to_string(phones.size()) +
                                     " values, got " + std::to_string(fields.size()));
    }
    std::vector<double> row(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
      auto [ptr, ec] = std::from_chars(fields[i].data(), fields[i].data() + fields[i].size(), row[i]);
      if (ec != std::errc() || ptr != fields[i].data() + fields[i].size()) {
        throw FormatError(line_no, "non-numeric value '" + std::string(fields[i]) + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  try {
    return PosteriorMatrix(std::move(phones), std::move(rows));
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  }
}

PosteriorMatrix ReadPosteriorCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open posterior CSV: " + path);
  try {
    return ParsePosteriorCsv(in);
  } catch (const FormatError& e) {
    throw e.WithPrefix(path);
  }
}

double Lpp(const PosteriorMatrix& posteriors, std::string_view phone, FrameRange range) {
  CheckRange(posteriors, range);
  return LppAt(posteriors, posteriors.PhoneIndex(phone), range);
}

double Lpr(const PosteriorMatrix& posteriors, std::string_view p_j,
           std::string_view p_i, FrameRange range) {
  return Lpp(posteriors, p_j, range) - Lpp(posteriors, p_i, range);
}

GopVector ComputeGopVector(const PosteriorMatrix& posteriors, std::string_view canonical,
                           FrameRange range) {
  CheckRange(posteriors, range);
  const std::size_t canonical_index = posteriors.PhoneIndex(canonical);
  GopVector gop;
  gop.canonical = std::string(canonical);
  for (std::size_t k = 0; k < kGopPhoneCount; ++k) {
    gop.values[k] = LppAt(posteriors, k, range);
  }
  const double canonical_lpp = gop.values[canonical_index];
  for (std::size_t k = 0; k < kGopPhoneCount; ++k) {
    gop.values[kGopPhoneCount + k] = canonical_lpp - gop.values[k];
  }
  return gop;
}

std::string GopRecordToJson(const GopRecord& record) {
  ordered_json j;
  j["utt"] = record.utt;
  j["phone_index"] = record.phone_index;
  j["canonical"] = record.vector.canonical;
  j["layout"] = kGopLayout;
  j["values"] = record.vector.values;
  return j.dump();
}

GopRecord GopRecordFromJson(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("GOP record is not an object");
  for (const char* key : {"utt", "phone_index", "canonical", "layout", "values"}) {
    if (!j.contains(key)) throw FormatError(std::string("GOP record missing '") + key + "'");
  }
  if (j["layout"] != kGopLayout) {
    throw FormatError("unsupported GOP layout " + j["layout"].dump());
  }
  const auto& values = j["values"];
  if (!values.is_array() || values.size() != kGopDims) {
    throw FormatError("GOP record must hold " + std::to_string(kGopDims) + " values");
  }
  GopRecord record;
  try {
    record.utt = j["utt"].get<std::string>();
    record.phone_index = j["phone_index"].get<std::size_t>();
    record.vector.canonical = j["canonical"].get<std::string>();
    for (std::size_t i = 0; i < kGopDims; ++i) record.vector.values[i] = values[i].get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad GOP record field: ") + e.what());
  }
  return record;
}

std::vector<GopRecord> ReadGopJsonl(std::istream& in) {
  std::vector<GopRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(GopRecordFromJson(line));
    } catch (const FormatError& e) {
      throw FormatError(line_no, e.what());
    }
  }
  return out;
}

void GopBank::Add(GopVector vector) {
  if (vector.canonical.empty()) throw InvalidArgument("GOP vector without canonical phone");
  auto& list = vectors_[vector.canonical];
  list.push_back(std::move(vector));
}

const std::vector<GopVector>& GopBank::Vectors(const std::string& phone) const {
  static const std::vector<GopVector> kNone;
  auto it = vectors_.find(phone);
  return it == vectors_.end() ? kNone : it->second;
}

std::size_t GopBank::size() const {
  std::size_t n = 0;
  for (const auto& [_, list] : vectors_) n += list.size();
  return n;
}

TextAugResult TextAugment(const PhoneSequence& sequence, const CloseDict& dict, Rng& rng,
                          double close_ratio, DonorWeighting weighting) {
  if (sequence.phones.size() != sequence.labels.size()) {
    throw InvalidArgument("phones and labels differ in length");
  }
  const bool close = rng.Bernoulli(close_ratio);
  std::vector<std::size_t> eligible;
  bool any_good = false;
  for (std::size_t i = 0; i < sequence.phones.size(); ++i) {
    if (sequence.labels[i] != kGoodScore) continue;
    any_good = true;
    const auto& phone = sequence.phones[i];
    const bool ok = close ? !dict.Donors(phone).empty() : !DistantSet(dict, phone).empty();
    if (ok) eligible.push_back(i);
  }
  if (!any_good) throw InvalidArgument("no augmentation candidate");
  if (eligible.empty()) {
    throw InvalidArgument(close ? "no good phone has a close donor"
                                : "no distant phone available");
  }
  TextAugResult result;
  result.sequence = sequence;
  result.swapped_index = eligible[rng.UniformIndex(eligible.size())];
  result.original = sequence.phones[result.swapped_index];
  result.donor = close ? *PickDonor(dict, result.original, rng, weighting)
                       : PickDistant(dict, result.original, rng);
  result.label = close ? 1 : 0;
  result.sequence.phones[result.swapped_index] = result.donor;
  result.sequence.labels[result.swapped_index] = result.label;
  return result;
}

GopAugResult GopAugment(const GopBank& bank, const GopVector& candidate_vector,
                        const std::string& candidate_phone, const CloseDict& dict, Rng& rng,
                        double close_ratio, DonorWeighting weighting) {
  if (!candidate_vector.canonical.empty() && candidate_vector.canonical != candidate_phone) {
    throw InvalidArgument("candidate vector belongs to " + candidate_vector.canonical +
                          ", not " + candidate_phone);
  }
  const bool close = rng.Bernoulli(close_ratio);
  for (int attempt = 0; attempt <= kMaxDonorRetries; ++attempt) {
    std::string donor;
    if (close) {
      auto picked = PickDonor(dict, candidate_phone, rng, weighting);
      if (!picked) throw InvalidArgument("no close donor for " + candidate_phone);
      donor = std::move(*picked);
    } else {
      donor = PickDistant(dict, candidate_phone, rng);
    }
    const auto& vectors = bank.Vectors(donor);
    if (vectors.empty()) continue;
    return {vectors[rng.UniformIndex(vectors.size())], donor, close ? 1 : 0};
  }
  throw InvalidArgument("empty GOP bank for every donor drawn for " + candidate_phone);
}

}  // namespace blendaug
