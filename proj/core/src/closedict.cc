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

#include "blendaug/closedict.h"

#include <charconv>
#include <cmath>
#include <fstream>

#include "blendaug/error.h"

namespace blendaug {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view DonorWeightingName(DonorWeighting weighting) {
  return weighting == DonorWeighting::kUniform ? "uniform" : "confusion_weighted";
}

DonorWeighting ParseDonorWeighting(std::string_view name) {
  if (name == "confusion_weighted" || name == "confusion-weighted" || name == "weighted") {
    return DonorWeighting::kConfusionWeighted;
  }
  if (name == "uniform") return DonorWeighting::kUniform;
  throw InvalidArgument("unknown donor weighting '" + std::string(name) + "'");
}

void CloseDict::Add(const std::string& candidate, const std::string& donor,
                    double weight) {
  if (candidate == donor) throw InvalidArgument("self pair " + candidate);
  if (!inventory_.contains(candidate)) throw InvalidArgument("unknown phone " + candidate);
  if (!inventory_.contains(donor)) throw InvalidArgument("unknown phone " + donor);
  if (!(weight > 0.0 && weight <= 1.0)) {
    throw InvalidArgument("weight for " + candidate + "->" + donor +
                          " outside (0, 1]");
  }
  auto& list = entries_[candidate];
  for (const auto& e : list) {
    if (e.phone == donor) {
      throw InvalidArgument("duplicate pair " + candidate + "->" + donor);
    }
  }
  list.push_back({donor, weight});
}

const std::vector<DonorEntry>& CloseDict::Donors(const std::string& candidate) const {
  static const std::vector<DonorEntry> kNone;
  auto it = entries_.find(candidate);
  return it == entries_.end() ? kNone : it->second;
}

std::set<std::string> CloseDict::CloseSet(const std::string& candidate) const {
  std::set<std::string> out;
  for (const auto& e : Donors(candidate)) out.insert(e.phone);
  return out;
}

std::size_t CloseDict::pair_count() const {
  std::size_t n = 0;
  for (const auto& [_, list] : entries_) n += list.size();
  return n;
}

const std::set<std::string>& DefaultInventory() {
  static const std::set<std::string> kInventory = {
      "AA", "AE", "AH", "AO", "AW", "AY", "B",  "CH", "D",  "DH", "EH",
      "ER", "EY", "F",  "G",  "HH", "IH", "IY", "JH", "K",  "L",  "M",
      "N",  "NG", "OW", "OY", "P",  "R",  "S",  "SH", "T",  "TH", "UH",
      "UW", "V",  "W",  "Y",  "Z",  "ZH", "SIL", "SPN", "NSN"};
  return kInventory;
}

std::set<std::string> ReadInventory(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open inventory file: " + path);
  std::set<std::string> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto phone = Trim(line);
    if (phone.empty() || phone.front() == '#') continue;
    for (char c : phone) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        throw FormatError(line_no, "phone label contains whitespace").WithPrefix(path);
      }
    }
    out.emplace(phone);
  }
  if (out.empty()) throw FormatError(path + ": empty inventory");
  return out;
}

CloseDict ParseDict(std::istream& in, const std::set<std::string>& inventory) {
  CloseDict dict(inventory);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    for (;;) {
      const auto tab = trimmed.find('\t', pos);
      fields.push_back(Trim(trimmed.substr(pos, tab - pos)));
      if (tab == std::string_view::npos) break;
      pos = tab + 1;
    }
    if (fields.size() != 3) {
      throw FormatError(line_no, "expected candidate<TAB>donor<TAB>weight");
    }
    double weight = 0.0;
    const auto w = fields[2];
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), weight);
    if (ec != std::errc() || ptr != w.data() + w.size() || !std::isfinite(weight)) {
      throw FormatError(line_no, "non-numeric weight '" + std::string(w) + "'");
    }
    try {
      dict.Add(std::string(fields[0]), std::string(fields[1]), weight);
    } catch (const InvalidArgument& e) {
      throw FormatError(line_no, e.what());
    }
  }
  return dict;
}

CloseDict LoadDict(const std::string& path, const std::set<std::string>& inventory) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dictionary: " + path);
  try {
    return ParseDict(in, inventory);
  } catch (const FormatError& e) {
    throw e.WithPrefix(path);
  }
}

std::optional<std::string> PickDonor(const CloseDict& dict,
                                     const std::string& candidate, Rng& rng,
                                     DonorWeighting weighting) {
  const auto& donors = dict.Donors(candidate);
  if (donors.empty()) return std::nullopt;
  if (weighting == DonorWeighting::kUniform) {
    return donors[rng.UniformIndex(donors.size())].phone;
  }
  double total = 0.0;
  for (const auto& d : donors) total += d.weight;
  const double u = rng.Uniform01() * total;
  double acc = 0.0;
  for (const auto& d : donors) {
    acc += d.weight;
    if (u < acc) return d.phone;
  }
  return donors.back().phone;
}

std::vector<std::string> DistantSet(const CloseDict& dict,
                                    const std::string& candidate) {
  const auto close = dict.CloseSet(candidate);
  std::vector<std::string> out;
  for (const auto& p : dict.inventory()) {
    if (p != candidate && !close.contains(p)) out.push_back(p);
  }
  return out;
}

std::string PickDistant(const CloseDict& dict, const std::string& candidate,
                        Rng& rng) {
  const auto eligible = DistantSet(dict, candidate);
  if (eligible.empty()) {
    throw InvalidArgument("no distant phone available for " + candidate);
  }
  return eligible[rng.UniformIndex(eligible.size())];
}

}  // namespace blendaug
