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

#include "blendaug/mask.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "blendaug/error.h"

namespace blendaug {
namespace {

// Guards ceil/floor of fractional widths against representation error.
constexpr double kWidthEps = 1e-9;

std::size_t CeilWidth(double x) { return static_cast<std::size_t>(std::ceil(x - kWidthEps)); }
std::size_t FloorWidth(double x) { return static_cast<std::size_t>(std::floor(x + kWidthEps)); }

bool InUnit(double x) { return x >= 0.0 && x <= 1.0; }

void CheckParams(const MaskParams& p) {
  if (!InUnit(p.overlay_lambda)) throw InvalidArgument("overlay lambda must lie in [0, 1]");
  if (!InUnit(p.gaussian_depth)) throw InvalidArgument("gaussian depth must lie in [0, 1]");
  if (!(p.sigma_frac > 0.0) || !std::isfinite(p.sigma_frac)) {
    throw InvalidArgument("sigma fraction must be positive");
  }
  if (!(p.crossfade_frac > 0.0 && p.crossfade_frac < 1.0)) {
    throw InvalidArgument("crossfade fraction must lie in (0, 1)");
  }
}

}  // namespace

std::string_view MaskTemplateName(MaskTemplate t) {
  switch (t) {
    case MaskTemplate::kSmoothOverlay: return "smooth-overlay";
    case MaskTemplate::kCutMix: return "cutmix";
    case MaskTemplate::kSmoothConcatenation: return "smooth-concatenation";
    case MaskTemplate::kSmoothGaussianOverlay: return "gaussian";
    case MaskTemplate::kCutPaste: return "cutpaste";
  }
  return "unknown";
}

MaskTemplate ParseMaskTemplate(std::string_view name) {
  if (name == "smooth-overlay" || name == "overlay" || name == "1") {
    return MaskTemplate::kSmoothOverlay;
  }
  if (name == "cutmix" || name == "cut-mix" || name == "2") return MaskTemplate::kCutMix;
  if (name == "smooth-concatenation" || name == "concatenation" || name == "3") {
    return MaskTemplate::kSmoothConcatenation;
  }
  if (name == "gaussian" || name == "smooth-gaussian-overlay" || name == "4") {
    return MaskTemplate::kSmoothGaussianOverlay;
  }
  if (name == "cutpaste" || name == "cut-paste" || name == "5") return MaskTemplate::kCutPaste;
  throw InvalidArgument("unknown mask template '" + std::string(name) + "'");
}

RegionSpec RegionSpec::Constant(double lambda) {
  RegionSpec r;
  r.kind = Kind::kConstant;
  r.from = r.to = lambda;
  return r;
}

RegionSpec RegionSpec::Ramp(double from, double to) {
  RegionSpec r;
  r.kind = Kind::kRamp;
  r.from = from;
  r.to = to;
  return r;
}

RegionSpec RegionSpec::Gaussian(double depth, double sigma, double center) {
  RegionSpec r;
  r.kind = Kind::kGaussian;
  r.depth = depth;
  r.sigma = sigma;
  r.center = center;
  r.from = r.to = 1.0;
  return r;
}

std::size_t MaskProperty::window() const {
  return std::accumulate(widths.begin(), widths.end(), std::size_t{0});
}

MaskProperty GetProperty(MaskTemplate mask_template, std::size_t T, std::size_t L,
                         const MaskParams& params) {
  if (T < kMinSegmentFrames || L < kMinSegmentFrames) {
    throw InvalidArgument("segment shorter than " + std::to_string(kMinSegmentFrames) +
                          " frames (T=" + std::to_string(T) + ", L=" +
                          std::to_string(L) + ")");
  }
  CheckParams(params);
  const std::size_t n = std::min(T, L);

  MaskProperty p;
  p.mask_template = mask_template;
  p.params = params;
  p.candidate_frames = T;
  p.donor_frames = L;
  p.mu = n / 2;

  switch (mask_template) {
    case MaskTemplate::kSmoothOverlay:
      p.widths = {n};
      p.lambdas = {RegionSpec::Constant(params.overlay_lambda)};
      break;
    case MaskTemplate::kCutMix: {
      // Hard donor replacement of the middle quarter.
      const std::size_t head = (3 * n + 7) / 8;
      const std::size_t middle = n / 4;
      p.widths = {head, middle, n - head - middle};
      p.lambdas = {RegionSpec::Constant(1.0), RegionSpec::Constant(0.0),
                   RegionSpec::Constant(1.0)};
      break;
    }
    case MaskTemplate::kSmoothConcatenation: {
      // Candidate head, linear crossfade, donor tail.
      const double f = params.crossfade_frac;
      const std::size_t head = CeilWidth((1.0 - f) / 2.0 * static_cast<double>(n));
      const std::size_t middle = FloorWidth(f * static_cast<double>(n));
      if (head + middle >= n) {
        throw InvalidArgument("crossfade fraction leaves no donor tail");
      }
      p.widths = {head, middle, n - head - middle};
      p.lambdas = {RegionSpec::Constant(1.0), RegionSpec::Ramp(1.0, 0.0),
                   RegionSpec::Constant(0.0)};
      break;
    }
    case MaskTemplate::kSmoothGaussianOverlay:
      p.widths = {n};
      p.lambdas = {RegionSpec::Gaussian(params.gaussian_depth,
                                        static_cast<double>(n) / params.sigma_frac,
                                        static_cast<double>(p.mu))};
      break;
    case MaskTemplate::kCutPaste:
      p.widths = {L};
      p.lambdas = {RegionSpec::Constant(0.0)};
      break;
    default:
      throw InvalidArgument("unknown mask template id " +
                            std::to_string(static_cast<int>(mask_template)));
  }
  p.regions = p.widths.size();
  ValidateProperty(p);
  return p;
}

void ValidateProperty(const MaskProperty& p) {
  if (p.regions != 1 && p.regions != 3) throw InvalidArgument("region count must be 1 or 3");
  if (p.widths.size() != p.regions || p.lambdas.size() != p.regions) {
    throw InvalidArgument("widths and lambdas must have one entry per region");
  }
  for (std::size_t w : p.widths) {
    if (w < 1) throw InvalidArgument("mask region of zero width");
  }
  const std::size_t n = std::min(p.candidate_frames, p.donor_frames);
  const std::size_t expected =
      p.mask_template == MaskTemplate::kCutPaste ? p.donor_frames : n;
  if (p.window() != expected) throw InvalidArgument("mask widths do not cover the window");
  if (p.mu != n / 2) throw InvalidArgument("mask center is not min(T, L) / 2");
  for (const auto& r : p.lambdas) {
    const bool ok = r.kind == RegionSpec::Kind::kGaussian
                        ? InUnit(r.depth) && r.sigma > 0.0
                        : InUnit(r.from) && InUnit(r.to);
    if (!ok) throw InvalidArgument("mixing factor outside [0, 1]");
  }
}

GeneratedMask GenerateMask(const MaskProperty& property) {
  ValidateProperty(property);
  GeneratedMask mask;
  mask.widths = property.widths;
  auto& values = mask.curve.values;
  values.reserve(property.window());
  for (std::size_t r = 0; r < property.regions; ++r) {
    const RegionSpec& spec = property.lambdas[r];
    const std::size_t width = property.widths[r];
    const std::size_t offset = values.size();
    for (std::size_t i = 0; i < width; ++i) {
      double lambda = spec.from;
      switch (spec.kind) {
        case RegionSpec::Kind::kConstant:
          break;
        case RegionSpec::Kind::kRamp:
          if (width > 1) {
            const double s = static_cast<double>(i) / static_cast<double>(width - 1);
            lambda = (1.0 - s) * spec.from + s * spec.to;
          }
          break;
        case RegionSpec::Kind::kGaussian: {
          const double d = static_cast<double>(offset + i) - spec.center;
          lambda = 1.0 - spec.depth * std::exp(-(d * d) / (2.0 * spec.sigma * spec.sigma));
          break;
        }
      }
      values.push_back(std::clamp(lambda, 0.0, 1.0));
    }
  }
  return mask;
}

std::string DumpMask(const MaskProperty& property) {
  const GeneratedMask mask = GenerateMask(property);
  std::string out = "frame,lambda\n";
  char buf[64];
  for (std::size_t i = 0; i < mask.curve.values.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%zu,%.9g\n", i, mask.curve.values[i]);
    out += buf;
  }
  return out;
}

}  // namespace blendaug
