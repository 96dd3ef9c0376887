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

#include "blendaug/blender.h"

#include <algorithm>
#include <span>

#include "blendaug/error.h"

namespace blendaug {
namespace {

// Mean of a region, computed relative to its first value so a constant
// region returns that constant exactly.
double RegionMean(std::span<const double> values) {
  const double base = values.front();
  double acc = 0.0;
  for (double v : values) acc += v - base;
  return base + acc / static_cast<double>(values.size());
}

void CheckCurve(const MaskProperty& property, const MixCurve& curve) {
  if (curve.values.size() != property.window()) {
    throw InvalidArgument("mix curve length does not match mask window");
  }
}

}  // namespace

std::string_view LabelModeName(LabelMode mode) {
  return mode == LabelMode::kPaperFloor ? "paper_floor" : "frame_weighted";
}

LabelMode ParseLabelMode(std::string_view name) {
  if (name == "frame_weighted" || name == "frame-weighted") return LabelMode::kFrameWeighted;
  if (name == "paper_floor" || name == "paper-floor") return LabelMode::kPaperFloor;
  throw InvalidArgument("unknown label mode '" + std::string(name) + "'");
}

AudioBuffer Blend(const AudioBuffer& candidate, const AudioBuffer& donor,
                  const MaskProperty& property, const MixCurve& curve) {
  CheckCurve(property, curve);
  const std::size_t window = property.window();
  if (donor.size() < window) throw InvalidArgument("donor shorter than mask window");

  AudioBuffer out;
  out.sample_rate = candidate.sample_rate;
  if (property.mask_template == MaskTemplate::kCutPaste) {
    out.samples.assign(donor.samples.begin(), donor.samples.begin() + static_cast<long>(window));
    return out;
  }
  if (candidate.size() < window) throw InvalidArgument("candidate shorter than mask window");

  out.samples.resize(window);
  std::size_t offset = 0;
  for (std::size_t width : property.widths) {
    const auto lam = std::span(curve.values).subspan(offset, width);
    const auto c = candidate.view().subspan(offset, width);
    const auto d = donor.view().subspan(offset, width);
    auto dst = std::span(out.samples).subspan(offset, width);
    for (std::size_t i = 0; i < width; ++i) {
      dst[i] = lam[i] * c[i] + (1.0 - lam[i]) * d[i];
    }
    offset += width;
  }
  return out;
}

AudioBuffer Blend(const AudioBuffer& candidate, const AudioBuffer& donor,
                  const MaskProperty& property) {
  return Blend(candidate, donor, property, GenerateMask(property).curve);
}

std::vector<int> RegionalLabels(const MaskProperty& property, const MixCurve& curve) {
  CheckCurve(property, curve);
  std::vector<int> labels;
  std::size_t offset = 0;
  for (std::size_t width : property.widths) {
    const double mean = RegionMean(std::span(curve.values).subspan(offset, width));
    labels.push_back(mean >= kLabelThreshold ? 1 : 0);
    offset += width;
  }
  return labels;
}

int Label(const MaskProperty& property, const MixCurve& curve, LabelMode mode) {
  CheckCurve(property, curve);
  if (mode == LabelMode::kPaperFloor) {
    const auto regional = RegionalLabels(property, curve);
    int sum = 0;
    for (int v : regional) sum += v;
    return sum / static_cast<int>(regional.size());
  }
  const auto passing = static_cast<std::size_t>(
      std::count_if(curve.values.begin(), curve.values.end(),
                    [](double v) { return v >= kLabelThreshold; }));
  return 2 * passing >= curve.values.size() ? 1 : 0;
}

double RegionalScore(const MaskProperty& property, const MixCurve& curve, int good_score) {
  CheckCurve(property, curve);
  double sum = 0.0;
  std::size_t offset = 0;
  for (std::size_t width : property.widths) {
    sum += RegionMean(std::span(curve.values).subspan(offset, width)) * good_score;
    offset += width;
  }
  return sum / static_cast<double>(property.widths.size());
}

BlendResult SpeechBlend(const AudioBuffer& candidate, const AudioBuffer& donor,
                        MaskTemplate mask_template, const MaskParams& params,
                        LabelMode mode) {
  if (candidate.sample_rate != donor.sample_rate) {
    throw InvalidArgument("candidate and donor sample rates differ");
  }
  BlendResult result;
  const double target = Rms(candidate);
  result.donor_gain = EnergyGain(donor, target);
  const AudioBuffer normalized = NormalizeEnergy(donor, target);

  result.property = GetProperty(mask_template, candidate.size(), donor.size(), params);
  GeneratedMask mask = GenerateMask(result.property);
  result.audio = Blend(candidate, normalized, result.property, mask.curve);
  result.mode = mode;
  result.label = Label(result.property, mask.curve, mode);
  result.regional_labels = RegionalLabels(result.property, mask.curve);
  result.frame_lambdas = std::move(mask.curve);
  return result;
}

}  // namespace blendaug
