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

#include <gtest/gtest.h>

#include <cmath>

#include "blendaug/error.h"
#include "oracles.h"

namespace blendaug {
namespace {

constexpr MaskTemplate kAllTemplates[] = {
    MaskTemplate::kSmoothOverlay, MaskTemplate::kCutMix, MaskTemplate::kSmoothConcatenation,
    MaskTemplate::kSmoothGaussianOverlay, MaskTemplate::kCutPaste};

TEST(GetPropertyTest, SmoothOverlay) {
  const MaskProperty p = GetProperty(MaskTemplate::kSmoothOverlay, 100, 60);
  EXPECT_EQ(p.mu, 30u);
  EXPECT_EQ(p.regions, 1u);
  EXPECT_EQ(p.widths, (std::vector<std::size_t>{60}));
  ASSERT_EQ(p.lambdas.size(), 1u);
  EXPECT_EQ(p.lambdas[0], RegionSpec::Constant(0.5));
}

TEST(GetPropertyTest, CutMix) {
  const MaskProperty p = GetProperty(MaskTemplate::kCutMix, 80, 80);
  EXPECT_EQ(p.regions, 3u);
  EXPECT_EQ(p.widths, (std::vector<std::size_t>{30, 20, 30}));
  EXPECT_EQ(p.lambdas[0].from, 1.0);
  EXPECT_EQ(p.lambdas[1].from, 0.0);
  EXPECT_EQ(p.lambdas[2].from, 1.0);
}

TEST(GetPropertyTest, CutPasteCoversDonor) {
  const MaskProperty p = GetProperty(MaskTemplate::kCutPaste, 100, 60);
  EXPECT_EQ(p.regions, 1u);
  EXPECT_EQ(p.widths, (std::vector<std::size_t>{60}));
  EXPECT_EQ(p.lambdas[0], RegionSpec::Constant(0.0));
  EXPECT_EQ(GetProperty(MaskTemplate::kCutPaste, 60, 100).window(), 100u);
}

TEST(GetPropertyTest, SmoothConcatenationWidths) {
  const MaskProperty p = GetProperty(MaskTemplate::kSmoothConcatenation, 50, 50);
  EXPECT_EQ(p.widths, (std::vector<std::size_t>{20, 10, 20}));
  EXPECT_EQ(p.lambdas[1].kind, RegionSpec::Kind::kRamp);
  MaskParams wide;
  wide.crossfade_frac = 0.5;
  EXPECT_EQ(GetProperty(MaskTemplate::kSmoothConcatenation, 40, 40, wide).widths,
            (std::vector<std::size_t>{10, 20, 10}));
}

TEST(GetPropertyTest, RejectsShortSegmentsAndBadParams) {
  EXPECT_THROW(GetProperty(MaskTemplate::kSmoothOverlay, 7, 100), InvalidArgument);
  EXPECT_THROW(GetProperty(MaskTemplate::kSmoothOverlay, 100, 7), InvalidArgument);
  MaskParams p;
  p.overlay_lambda = 1.2;
  EXPECT_THROW(GetProperty(MaskTemplate::kSmoothOverlay, 10, 10, p), InvalidArgument);
  p = {};
  p.sigma_frac = 0.0;
  EXPECT_THROW(GetProperty(MaskTemplate::kSmoothGaussianOverlay, 10, 10, p), InvalidArgument);
  p = {};
  p.crossfade_frac = 0.05;  // floor(0.05 * 8) == 0
  EXPECT_THROW(GetProperty(MaskTemplate::kSmoothConcatenation, 8, 8, p), InvalidArgument);
  EXPECT_THROW(ParseMaskTemplate("bogus"), InvalidArgument);
}

TEST(GetPropertyTest, TemplateNamesRoundTrip) {
  for (MaskTemplate t : kAllTemplates) EXPECT_EQ(ParseMaskTemplate(MaskTemplateName(t)), t);
  EXPECT_EQ(ParseMaskTemplate("4"), MaskTemplate::kSmoothGaussianOverlay);
}

TEST(MaskAlgebraTest, ExhaustiveSmallLengths) {
  for (MaskTemplate t : kAllTemplates) {
    for (std::size_t T = 8; T <= 64; ++T) {
      for (std::size_t L = 8; L <= 64; ++L) {
        const MaskProperty p = GetProperty(t, T, L);
        const GeneratedMask m = GenerateMask(p);
        const std::size_t n = std::min(T, L);
        ASSERT_EQ(p.window(), t == MaskTemplate::kCutPaste ? L : n);
        ASSERT_EQ(m.curve.values.size(), p.window());
        ASSERT_EQ(p.mu, n / 2);
        ASSERT_TRUE(p.regions == 1 || p.regions == 3);
        const bool three = t == MaskTemplate::kCutMix || t == MaskTemplate::kSmoothConcatenation;
        ASSERT_EQ(p.regions, three ? 3u : 1u);
        for (std::size_t w : p.widths) ASSERT_GE(w, 1u);
        for (double v : m.curve.values) {
          ASSERT_GE(v, 0.0);
          ASSERT_LE(v, 1.0);
        }
      }
    }
  }
}

TEST(GenerateMaskTest, ConstantOverlay) {
  MaskParams p;
  p.overlay_lambda = 0.5;
  const auto m = GenerateMask(GetProperty(MaskTemplate::kSmoothOverlay, 10, 10, p));
  EXPECT_EQ(m.curve.values, std::vector<double>(10, 0.5));
}

TEST(GenerateMaskTest, RampIncludesEndpoints) {
  MaskProperty p;
  p.mask_template = MaskTemplate::kSmoothConcatenation;
  p.candidate_frames = p.donor_frames = 9;
  p.mu = 4;
  p.regions = 3;
  p.widths = {2, 5, 2};
  p.lambdas = {RegionSpec::Constant(1.0), RegionSpec::Ramp(1.0, 0.0), RegionSpec::Constant(0.0)};
  const auto m = GenerateMask(p);
  EXPECT_EQ(m.curve.values,
            (std::vector<double>{1.0, 1.0, 1.0, 0.75, 0.5, 0.25, 0.0, 0.0, 0.0}));
}

TEST(GenerateMaskTest, GaussianDip) {
  MaskParams params;
  params.gaussian_depth = 0.5;
  params.sigma_frac = 6.0;
  const auto m = GenerateMask(GetProperty(MaskTemplate::kSmoothGaussianOverlay, 60, 60, params));
  const auto& v = m.curve.values;
  ASSERT_EQ(v.size(), 60u);
  EXPECT_EQ(std::min_element(v.begin(), v.end()) - v.begin(), 30);
  EXPECT_DOUBLE_EQ(v[30], 0.5);
  // 1 - 0.5 * exp(-30^2 / (2 * 10^2))
  EXPECT_NEAR(v[0], 0.9944455017308789, 1e-12);
}

TEST(GenerateMaskTest, GaussianSymmetricForEvenWindows) {
  for (std::size_t n = 8; n <= 200; n += 2) {
    const MaskProperty p = GetProperty(MaskTemplate::kSmoothGaussianOverlay, n, n + 3);
    const auto& v = GenerateMask(p).curve.values;
    for (std::size_t k = 1; k < p.mu; ++k) {
      EXPECT_NEAR(v[p.mu - k], v[p.mu + k], 1e-12) << "n=" << n << " k=" << k;
    }
  }
}

TEST(GenerateMaskTest, MatchesDirectFormula) {
  for (MaskTemplate t : kAllTemplates) {
    for (std::size_t T : {8u, 9u, 17u, 40u, 123u}) {
      for (std::size_t L : {8u, 11u, 64u, 200u}) {
        const MaskParams params;
        const auto v = GenerateMask(GetProperty(t, T, L, params)).curve.values;
        for (std::size_t i = 0; i < v.size(); ++i) {
          ASSERT_NEAR(v[i], testing::OracleLambda(t, params, T, L, i), 1e-12)
              << MaskTemplateName(t) << " T=" << T << " L=" << L << " i=" << i;
        }
      }
    }
  }
}

TEST(GenerateMaskTest, Deterministic) {
  for (MaskTemplate t : kAllTemplates) {
    EXPECT_EQ(GenerateMask(GetProperty(t, 77, 51)).curve.values,
              GenerateMask(GetProperty(t, 77, 51)).curve.values);
  }
}

TEST(DumpMaskTest, Rows) {
  EXPECT_EQ(DumpMask(GetProperty(MaskTemplate::kCutPaste, 8, 8)),
            "frame,lambda\n0,0\n1,0\n2,0\n3,0\n4,0\n5,0\n6,0\n7,0\n");
  const std::string cutmix = DumpMask(GetProperty(MaskTemplate::kCutMix, 8, 8));
  EXPECT_EQ(cutmix, "frame,lambda\n0,1\n1,1\n2,1\n3,0\n4,0\n5,1\n6,1\n7,1\n");
  MaskParams p;
  p.overlay_lambda = 0.6;
  const std::string overlay = DumpMask(GetProperty(MaskTemplate::kSmoothOverlay, 8, 9, p));
  EXPECT_EQ(overlay.substr(0, 26), "frame,lambda\n0,0.6\n1,0.6\n2");
}

TEST(DumpMaskTest, NineSignificantDigits) {
  const MaskProperty p = GetProperty(MaskTemplate::kSmoothGaussianOverlay, 60, 60);
  const std::string csv = DumpMask(p);
  EXPECT_NE(csv.find("\n0,0.994445502\n"), std::string::npos) << csv.substr(0, 60);
}

}  // namespace
}  // namespace blendaug
