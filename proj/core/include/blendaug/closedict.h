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

#ifndef BLENDAUG_CLOSEDICT_H_
#define BLENDAUG_CLOSEDICT_H_

#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "blendaug/rng.h"

namespace blendaug {

struct DonorEntry {
  std::string phone;
  double weight = 0.0;  // confusion rate in (0, 1]
};

// Extra donor draws allowed when a chosen donor has no usable data.
inline constexpr int kMaxDonorRetries = 5;

enum class DonorWeighting { kConfusionWeighted, kUniform };

std::string_view DonorWeightingName(DonorWeighting weighting);
DonorWeighting ParseDonorWeighting(std::string_view name);

// Close phoneme pair dictionary: candidate phone -> donor phones it is
// commonly confused with. Directional; symmetric pairs are listed twice.
class CloseDict {
 public:
  CloseDict() = default;
  explicit CloseDict(std::set<std::string> inventory)
      : inventory_(std::move(inventory)) {}

  // Throws InvalidArgument on self pairs, unknown phones, duplicate pairs and
  // weights outside (0, 1].
  void Add(const std::string& candidate, const std::string& donor,
           double weight);

  // Entries for `candidate` in insertion order; empty if none.
  const std::vector<DonorEntry>& Donors(const std::string& candidate) const;

  // Donor phones of `candidate` as a set.
  std::set<std::string> CloseSet(const std::string& candidate) const;

  const std::set<std::string>& inventory() const { return inventory_; }
  const std::map<std::string, std::vector<DonorEntry>>& entries() const {
    return entries_;
  }
  std::size_t pair_count() const;

 private:
  std::set<std::string> inventory_;
  std::map<std::string, std::vector<DonorEntry>> entries_;
};

// The 42-phone inventory: 39 ARPAbet phones plus SIL, SPN and NSN.
const std::set<std::string>& DefaultInventory();

// Reads a phone list, one label per line ('#' comments allowed).
std::set<std::string> ReadInventory(const std::string& path);

// Parses `candidate<TAB>donor<TAB>weight` lines. Errors carry line numbers.
CloseDict ParseDict(std::istream& in, const std::set<std::string>& inventory);
CloseDict LoadDict(const std::string& path,
                   const std::set<std::string>& inventory);

// Draws a donor for `candidate`, with probability proportional to its weight
// (or uniformly). Returns nullopt when the candidate has no entries.
std::optional<std::string> PickDonor(
    const CloseDict& dict, const std::string& candidate, Rng& rng,
    DonorWeighting weighting = DonorWeighting::kConfusionWeighted);

// Phones eligible as distant donors: inventory minus the candidate and its
// close set, in sorted order.
std::vector<std::string> DistantSet(const CloseDict& dict,
                                    const std::string& candidate);

// Uniform draw from DistantSet. Throws InvalidArgument if it is empty.
std::string PickDistant(const CloseDict& dict, const std::string& candidate,
                        Rng& rng);

}  // namespace blendaug

#endif  // BLENDAUG_CLOSEDICT_H_
