// SPDX-License-Identifier: Apache-2.0
//
// patcharray - design and analysis toolkit for microstrip patch arrays
// Copyright (C) 2026 The patcharray authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "patcharray/errors.hpp"
#include "patcharray/microstrip.hpp"

namespace patcharray {
namespace {

Substrate with_er(double er) {
    Substrate s = ro3003();
    s.rel_permittivity = er;
    return s;
}

TEST(EpsEff, VacuumLimit) {
    for (double w : {1e-5, 1e-3, 0.1}) EXPECT_EQ(eps_eff(w, with_er(1.0)), 1.0);
}

TEST(EpsEff, ReferencePatchWidthMatchesDirectEvaluation) {
    const double expected = oracle::hammerstad_eps_eff(5.89e-3, 1.574e-3, 3.0);
    EXPECT_NEAR(expected, 2.4875560199076903, 1e-12);  // frozen oracle value
    EXPECT_NEAR(eps_eff(5.89e-3, ro3003()), expected, 1e-12);
    EXPECT_NEAR(eps_eff(5.89e-3, ro3003()), 2.488, 1e-3);
}

TEST(EpsEff, NarrowBranchMatchesDirectEvaluation) {
    EXPECT_NEAR(eps_eff(0.2e-3, ro3003()), oracle::hammerstad_eps_eff(0.2e-3, 1.574e-3, 3.0), 1e-12);
}

TEST(EpsEff, WideStripApproachesSubstrate) {
    EXPECT_NEAR(eps_eff(1000.0 * 1.574e-3, ro3003()), 3.0, 0.03);
}

TEST(EpsEff, BoundedBetweenOneAndEr) {
    auto gen = oracle::rng(11);
    std::uniform_real_distribution<double> er(1.01, 12.0), logu(std::log(1e-3), std::log(1e3));
    for (int k = 0; k < 1000; ++k) {
        Substrate s = with_er(er(gen));
        const double w = s.height * std::exp(logu(gen));
        const double e = eps_eff(w, s);
        EXPECT_GT(e, 1.0);
        EXPECT_LE(e, s.rel_permittivity);
    }
}

TEST(Z0Microstrip, ReferenceLines) {
    EXPECT_NEAR(z0_microstrip(0.2e-3, ro3003()), 170.0, 2.0);
    EXPECT_NEAR(z0_microstrip(0.2e-3, ro3003()), 170.2108710021785, 1e-9);
    EXPECT_NEAR(z0_microstrip(3.96e-3, ro3003()), 50.0, 0.5);
    EXPECT_LT(z0_microstrip(2e-3, ro3003()), z0_microstrip(1e-3, ro3003()));
}

TEST(Z0Microstrip, StrictlyDecreasingInWidth) {
    const Substrate s = ro3003();
    double prev = INFINITY;
    for (int k = 0; k <= 400; ++k) {
        const double u = std::pow(10.0, -2.0 + 4.0 * k / 400.0);
        const double z = z0_microstrip(u * s.height, s);
        EXPECT_LT(z, prev) << "W/h = " << u;
        prev = z;
    }
}

TEST(Z0Microstrip, BranchContinuityAtUnitRatio) {
    for (double er : {1.0, 2.2, 3.0, 4.4, 10.0}) {
        const Substrate s = with_er(er);
        const double below = z0_microstrip(s.height * (1.0 - 1e-12), s);
        const double above = z0_microstrip(s.height * (1.0 + 1e-12), s);
        // The two closed forms meet to within half a percent.
        EXPECT_LE(std::abs(below - above), 5e-3 * below) << "er = " << er;
    }
}

TEST(SynthesizeWidth, FiftyOhmOnRo3003) {
    const double w = synthesize_width(50.0, ro3003());
    EXPECT_NEAR(w * 1e3, 3.96, 0.05);
    EXPECT_LE(std::abs(z0_microstrip(w, ro3003()) - 50.0), 0.01);
}

TEST(SynthesizeWidth, RoundTripsListedTargets) {
    for (double z : {30.0, 50.0, 70.0, 100.0, 120.0})
        EXPECT_NEAR(z0_microstrip(synthesize_width(z, ro3003()), ro3003()), z, 0.01) << z;
}

TEST(SynthesizeWidth, RoundTripsAcrossTheBand) {
    // Skip the sub-ohm step between the narrow and wide branches, where no
    // width lands within 0.01 ohm.
    const Substrate s = ro3003();
    const double z_lo = z0_microstrip(s.height * (1.0 + 1e-12), s);
    const double z_hi = z0_microstrip(s.height * (1.0 - 1e-12), s);
    for (double z = 10.0; z <= 250.0; z += 2.5) {
        if (z >= z_lo - 0.02 && z <= z_hi + 0.02) continue;
        EXPECT_NEAR(z0_microstrip(synthesize_width(z, s), s), z, 0.01) << z;
    }
}

TEST(SynthesizeWidth, OutOfRange) {
    EXPECT_THROW(synthesize_width(400.0, ro3003()), OutOfRange);
    EXPECT_THROW(synthesize_width(5.0, ro3003()), OutOfRange);
}

TEST(GuidedWavelength, Values) {
    EXPECT_DOUBLE_EQ(guided_wavelength(18e9, 1e-3, with_er(1.0)), wavelength(18e9));
    EXPECT_NEAR(guided_wavelength(18e9, 0.2e-3, ro3003()) * 1e3, 11.40, 0.05);
    EXPECT_NEAR(guided_wavelength(36e9, 0.2e-3, ro3003()), guided_wavelength(18e9, 0.2e-3, ro3003()) / 2.0,
                1e-15);
}

TEST(GuidedWavelength, PropagatesValidation) {
    EXPECT_THROW(guided_wavelength(0.0, 1e-3, ro3003()), InvalidInput);
    EXPECT_THROW(guided_wavelength(18e9, -1e-3, ro3003()), InvalidInput);
}

}  // namespace
}  // namespace patcharray
