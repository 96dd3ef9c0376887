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

#ifndef BLENDAUG_MASK_H_
#define BLENDAUG_MASK_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace blendaug {

// Mask templates. Ids 1-4 form the random blending pool; CutPaste is the
// pure-replacement baseline.
enum class MaskTemplate : int {
  kSmoothOverlay = 1,
  kCutMix = 2,
  kSmoothConcatenation = 3,
  kSmoothGaussianOverlay = 4,
  kCutPaste = 5,
};

// Canonical CLI names: smooth-overlay, cutmix, smooth-concatenation,
// gaussian, cutpaste.
std::string_view MaskTemplateName(MaskTemplate t);

// Accepts canonical names, a few aliases and the numeric ids "1".."5".
// Throws InvalidArgument for anything else.
MaskTemplate ParseMaskTemplate(std::string_view name);

struct MaskParams {
  double overlay_lambda = 0.5;   // SmoothOverlay constant
  double gaussian_depth = 0.5;   // A: depth of the dip toward the donor
  double sigma_frac = 6.0;       // sigma = N / sigma_frac
  double crossfade_frac = 0.2;   // SmoothConcatenation middle region / N

  bool operator==(const MaskParams&) const = default;
};

// Mixing factor shape of one region. The factor weights the candidate; the
// donor gets 1 - factor.
struct RegionSpec {
  enum class Kind { kConstant, kRamp, kGaussian };

  Kind kind = Kind::kConstant;
  double from = 1.0;    // constant value, or ramp start
  double to = 1.0;      // ramp end
  double depth = 0.0;   // gaussian A
  double sigma = 1.0;   // gaussian sigma, in frames
  double center = 0.0;  // gaussian center, frame index within the region

  static RegionSpec Constant(double lambda);
  static RegionSpec Ramp(double from, double to);
  static RegionSpec Gaussian(double depth, double sigma, double center);

  bool operator==(const RegionSpec&) const = default;
};

// Segments shorter than this are never blended.
inline constexpr std::size_t kMinSegmentFrames = 8;

// The mask property: center point, region count, region widths and region
// mixing factors, plus the inputs that produced them.
struct MaskProperty {
  MaskTemplate mask_template = MaskTemplate::kSmoothOverlay;
  MaskParams params;
  std::size_t candidate_frames = 0;  // T
  std::size_t donor_frames = 0;      // L
  std::size_t mu = 0;                // floor(min(T, L) / 2)
  std::size_t regions = 0;
  std::vector<std::size_t> widths;
  std::vector<RegionSpec> lambdas;

  // Sum of widths: min(T, L), or L for CutPaste.
  std::size_t window() const;
};

struct MixCurve {
  std::vector<double> values;  // one mixing factor per frame
};

struct GeneratedMask {
  std::vector<std::size_t> widths;
  MixCurve curve;
};

// Builds the property for `mask_template` over a candidate of T frames and a
// donor of L frames. The blend window is the first N = min(T, L) frames of
// both segments; CutPaste covers the whole donor. Throws InvalidArgument when
// T or L is below kMinSegmentFrames, when a parameter is out of range, or
// when the parameters produce an empty region.
MaskProperty GetProperty(MaskTemplate mask_template, std::size_t T,
                         std::size_t L, const MaskParams& params = {});

// Checks the structural invariants of a property; throws InvalidArgument.
void ValidateProperty(const MaskProperty& property);

// Expands region specs to per-frame factors. Ramps include both endpoints;
// a one-frame ramp takes its start value.
GeneratedMask GenerateMask(const MaskProperty& property);

// CSV with header "frame,lambda", one row per frame, 9 significant digits.
std::string DumpMask(const MaskProperty& property);

}  // namespace blendaug

#endif  // BLENDAUG_MASK_H_
