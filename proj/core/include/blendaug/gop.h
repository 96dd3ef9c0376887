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

#ifndef BLENDAUG_GOP_H_
#define BLENDAUG_GOP_H_

#include <array>
#include <cstddef>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "blendaug/closedict.h"
#include "blendaug/rng.h"

namespace blendaug {

inline constexpr std::size_t kGopPhoneCount = 42;
inline constexpr std::size_t kGopDims = 2 * kGopPhoneCount;
inline constexpr std::string_view kGopLayout = "lpp42+lpr42/v1";

// Posteriors below this are floored before taking the log.
inline constexpr double kPosteriorFloor = 1e-10;

// Row-sum tolerance for posterior frames.
inline constexpr double kPosteriorSumTolerance = 1e-4;

// Frame-level phone posteriors, frames x 42 phones.
class PosteriorMatrix {
 public:
  // Throws InvalidArgument unless there are exactly 42 distinct phones, at
  // least one frame, every row has 42 probabilities in [0, 1] and every row
  // sums to 1 within kPosteriorSumTolerance.
  PosteriorMatrix(std::vector<std::string> phones,
                  std::vector<std::vector<double>> rows);

  const std::vector<std::string>& phones() const { return phones_; }
  std::size_t frames() const { return rows_.size(); }
  double at(std::size_t frame, std::size_t phone) const {
    return rows_[frame][phone];
  }

  // Column index of `phone`; throws InvalidArgument if absent.
  std::size_t PhoneIndex(std::string_view phone) const;

 private:
  std::vector<std::string> phones_;
  std::vector<std::vector<double>> rows_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

// CSV: header row of 42 phone labels, then one row per frame.
PosteriorMatrix ParsePosteriorCsv(std::istream& in);
PosteriorMatrix ReadPosteriorCsv(const std::string& path);

// Half-open frame range [begin, end).
struct FrameRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t length() const { return end - begin; }
};

// Log phone posterior: mean over the range of ln(max(p, floor)).
double Lpp(const PosteriorMatrix& posteriors, std::string_view phone,
           FrameRange range);

// Log posterior ratio of p_j against p_i, frame averaged, which equals
// Lpp(p_j) - Lpp(p_i).
double Lpr(const PosteriorMatrix& posteriors, std::string_view p_j,
           std::string_view p_i, FrameRange range);

struct GopVector {
  std::string canonical;
  // [0, 42): LPP of every phone in matrix order.
  // [42, 84): LPR(canonical | phone k); zero at the canonical slot.
  std::array<double, kGopDims> values{};
};

GopVector ComputeGopVector(const PosteriorMatrix& posteriors,
                           std::string_view canonical, FrameRange range);

// JSONL record of one GOP vector.
struct GopRecord {
  std::string utt;
  std::size_t phone_index = 0;
  GopVector vector;
};

std::string GopRecordToJson(const GopRecord& record);
// Throws FormatError on a bad layout tag, wrong dimension or missing field.
GopRecord GopRecordFromJson(std::string_view line);
std::vector<GopRecord> ReadGopJsonl(std::istream& in);

// Good-pronunciation GOP vectors grouped by canonical phone.
class GopBank {
 public:
  void Add(GopVector vector);
  // Empty vector if the phone has no entries.
  const std::vector<GopVector>& Vectors(const std::string& phone) const;
  std::size_t size() const;

 private:
  std::map<std::string, std::vector<GopVector>> vectors_;
};

struct PhoneSequence {
  std::vector<std::string> phones;
  std::vector<int> labels;  // per phone, 0/1/2
};

struct TextAugResult {
  PhoneSequence sequence;
  std::size_t swapped_index = 0;
  std::string original;
  std::string donor;
  int label = 0;  // 1 close swap, 0 distant swap
};

// Replaces one good phone (label 2) with a close donor (label 1) with
// probability close_ratio, otherwise with a distant phone (label 0).
TextAugResult TextAugment(
    const PhoneSequence& sequence, const CloseDict& dict, Rng& rng,
    double close_ratio,
    DonorWeighting weighting = DonorWeighting::kConfusionWeighted);

struct GopAugResult {
  GopVector vector;
  std::string donor;
  int label = 0;
};

// Swaps a candidate's GOP vector with one drawn uniformly from the bank of a
// close (label 1) or distant (label 0) donor. Donors with an empty bank are
// redrawn up to kMaxDonorRetries times before throwing InvalidArgument.
GopAugResult GopAugment(
    const GopBank& bank, const GopVector& candidate_vector,
    const std::string& candidate_phone, const CloseDict& dict, Rng& rng,
    double close_ratio,
    DonorWeighting weighting = DonorWeighting::kConfusionWeighted);

}  // namespace blendaug

#endif  // BLENDAUG_GOP_H_
