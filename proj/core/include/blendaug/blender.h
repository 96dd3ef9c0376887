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

#ifndef BLENDAUG_BLENDER_H_
#define BLENDAUG_BLENDER_H_

#include <string_view>
#include <vector>

#include "blendaug/audio.h"
#include "blendaug/mask.h"

namespace blendaug {

// Score of a good phone in the 0/1/2 annotation scheme.
inline constexpr int kGoodScore = 2;

// A region or frame counts toward the accented class when its mixing factor
// is at least this value.
inline constexpr double kLabelThreshold = 0.25;

enum class LabelMode {
  // Per-frame indicator lambda >= 0.25; label 1 when at least half the frames
  // pass. Width aware.
  kFrameWeighted,
  // Per-region indicator on the region mean, then floor(sum / R).
  kPaperFloor,
};

std::string_view LabelModeName(LabelMode mode);
LabelMode ParseLabelMode(std::string_view name);

struct BlendResult {
  AudioBuffer audio;            // blended window, len == frame_lambdas
  int label = 0;                // 0 mispronounced, 1 accented
  MixCurve frame_lambdas;
  std::vector<int> regional_labels;
  LabelMode mode = LabelMode::kFrameWeighted;
  MaskProperty property;
  double donor_gain = 1.0;
};

// out[t] = lambda[t] * candidate[t] + (1 - lambda[t]) * donor[t] over the
// mask window, region by region. For CutPaste the output is the donor. The
// donor is expected to be energy-normalized already. Throws InvalidArgument
// when either input is shorter than the window.
AudioBuffer Blend(const AudioBuffer& candidate, const AudioBuffer& donor,
                  const MaskProperty& property, const MixCurve& curve);
AudioBuffer Blend(const AudioBuffer& candidate, const AudioBuffer& donor,
                  const MaskProperty& property);

// Per-region indicator: mean factor of the region >= kLabelThreshold.
std::vector<int> RegionalLabels(const MaskProperty& property,
                                const MixCurve& curve);

int Label(const MaskProperty& property, const MixCurve& curve,
          LabelMode mode = LabelMode::kFrameWeighted);

// Unthresholded regional score: mean over regions of (mean factor * y).
// Experimental; not used to assign labels.
double RegionalScore(const MaskProperty& property, const MixCurve& curve,
                     int good_score = kGoodScore);

// Full blend of one candidate/donor pair: normalize the donor energy to the
// candidate, build the mask, blend and label.
BlendResult SpeechBlend(const AudioBuffer& candidate,
                        const AudioBuffer& donor, MaskTemplate mask_template,
                        const MaskParams& params = {},
                        LabelMode mode = LabelMode::kFrameWeighted);

}  // namespace blendaug

#endif  // BLENDAUG_BLENDER_H_
