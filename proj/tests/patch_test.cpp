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
#include <limits>
#include <random>

#include "oracles.hpp"
#include "patcharray/errors.hpp"
#include "patcharray/media.hpp"
#include "patcharray/patch.hpp"

namespace patcharray {
namespace {

// Slot conductances of the published patch (W 5.89 mm, L 3.85 mm, 18 GHz),
// frozen from an independent adaptive quadrature at 1e-13 relative.
constexpr double kRefG1 = 0.0012829403491711336;
constexpr double kRefG12 = 0.0007894319576893358;

TEST(PatchWidth, PublishedDesign) {
    EXPECT_NEAR(patch_width(18e9, 3.0) * 1e3, 5.89, 0.01);
    EXPECT_DOUBLE_EQ(patch_width(18e9, 1.0), wavelength(18e9) / 2.0);
    EXPECT_NEAR(patch_width(9e9, 3.0), 2.0 * patch_width(18e9, 3.0), 1e-15);
    EXPECT_THROW(patch_width(18e9, 0.9), InvalidInput);
}

TEST(LengthExtension, PublishedWidth) {
    const double expected = oracle::hammerstad_delta_l(5.89e-3, 1.574e-3, 3.0);
    EXPECT_NEAR(expected, 0.0007151081404794481, 1e-15);
    EXPECT_NEAR(length_extension(5.89e-3, ro3003()), expected, 1e-15);
    EXPECT_NEAR(length_extension(5.89e-3, ro3003()) * 1e3, 0.715, 0.002);
}

TEST(LengthExtension, ThinSubstrateLimit) {
    Substrate s = ro3003();
    s.height = 1e-6;
    EXPECT_LT(length_extension(5.89e-3, s), 1e-5);
}

TEST(LengthExtension, AlwaysPositive) {
    auto gen = oracle::rng(21);
    std::uniform_real_distribution<double> er(1.0, 12.0), h(1e-4, 5e-3), w(1e-4, 5e-2);
    for (int k = 0; k < 100; ++k) {
        Substrate s = ro3003();
        s.rel_permittivity = er(gen);
        s.height = h(gen);
        EXPECT_GT(length_extension(w(gen), s), 0.0);
    }
}

TEST(PatchLength, PublishedDesign) {
    EXPECT_NEAR(patch_length(18e9, ro3003()) * 1e3, 3.85, 0.01);
    EXPECT_NEAR(patch_length(18e9, ro3003(), Fringing::none) * 1e3, 5.28, 0.01);
}

TEST(PatchLength, AirWithoutFringing) {
    Substrate air = ro3003();
    air.rel_permittivity = 1.0;
    air.height = 1e-9;
    EXPECT_NEAR(patch_length(18e9, air) * 1e3, 8.33, 0.005);
}

TEST(PatchLength, RejectsDegenerateDesign) {
    Substrate thick = ro3003();
    thick.height = 20e-3;
    EXPECT_THROW(patch_length(18e9, thick), DesignInfeasible);
}

TEST(ResonantFrequency, PublishedDimensions) {
    EXPECT_NEAR(resonant_frequency(3.85e-3, 5.89e-3, ro3003()), 18e9, 0.005 * 18e9);
}

TEST(ResonantFrequency, InvertsPatchLength) {
    for (double f : {10e9, 18e9, 28e9}) {
        const double l = patch_length(f, ro3003());
        const double w = patch_width(f, 3.0);
        EXPECT_NEAR(resonant_frequency(l, w, ro3003()), f, 1e-3 * f);
    }
    auto gen = oracle::rng(22);
    std::uniform_real_distribution<double> f(5e9, 40e9), er(2.0, 10.0);
    for (int k = 0; k < 200; ++k) {
        Substrate s = ro3003();
        s.rel_permittivity = er(gen);
        s.height = 0.5e-3;
        const double f0 = f(gen);
        const double l = patch_length(f0, s);
        EXPECT_NEAR(resonant_frequency(l, patch_width(f0, s.rel_permittivity), s), f0, 1e-3 * f0);
    }
}

TEST(ResonantFrequency, LongerPatchResonatesLower) {
    double prev = INFINITY;
    for (double l = 2e-3; l <= 6e-3; l += 0.1e-3) {
        const double f = resonant_frequency(l, 5.89e-3, ro3003());
        EXPECT_LT(f, prev);
        prev = f;
    }
}

TEST(SlotConductances, PublishedPatchRegression) {
    const SlotConductances g = slot_conductances(5.89e-3, 3.85e-3, 18e9);
    EXPECT_NEAR(g.g1, kRefG1, 1e-8 * kRefG1);
    EXPECT_NEAR(g.g12, kRefG12, 1e-8 * kRefG12);
    EXPECT_GT(g.g1, 0.0);
    EXPECT_LE(std::abs(g.g12), g.g1);
}

TEST(SlotConductances, CoincidentSlotsGiveSelfConductance) {
    const SlotConductances g = slot_conductances(5.89e-3, 0.0, 18e9);
    EXPECT_NEAR(g.g12, g.g1, 1e-6 * g.g1);
    const SlotConductances tiny = slot_conductances(5.89e-3, 1e-9, 18e9);
    EXPECT_NEAR(tiny.g12, tiny.g1, 1e-6 * tiny.g1);
}

TEST(SlotConductances, SmallWidthScalesQuadratically) {
    const double w = wavelength(18e9) / 50.0;
    const double ratio = slot_conductances(w, 3e-3, 18e9).g1 / slot_conductances(w / 2.0, 3e-3, 18e9).g1;
    EXPECT_NEAR(ratio, 4.0, 0.08);
}

TEST(SlotConductances, MatchesMillionPointTrapezoid) {
    auto gen = oracle::rng(23);
    std::uniform_real_distribution<double> w(1e-3, 15e-3), l(1e-3, 10e-3), f(5e9, 40e9);
    for (int k = 0; k < 50; ++k) {
        const double wk = w(gen), lk = l(gen), fk = f(gen);
        const SlotConductances g = slot_conductances(wk, lk, fk);
        const double g1 = oracle::trapezoid_slot_conductance(wk, 0.0, fk, 1'000'000);
        const double g12 = oracle::trapezoid_slot_conductance(wk, lk, fk, 1'000'000);
        EXPECT_NEAR(g.g1, g1, 1e-6 * std::abs(g1));
        // G12 can pass through zero; compare on the G1 scale there.
        EXPECT_NEAR(g.g12, g12, 1e-6 * std::max(std::abs(g12), 1e-3 * g1));
    }
}

TEST(EdgeResistance, Algebra) {
    EXPECT_DOUBLE_EQ(edge_resistance(0.005, 0.0), 100.0);
    EXPECT_DOUBLE_EQ(edge_resistance(0.0025, 0.0025), 100.0);
    EXPECT_THROW(edge_resistance(0.001, -0.001), InvalidInput);
}

TEST(EdgeResistance, PublishedPatchInSanityWindow) {
    const double rin = edge_resistance(kRefG1, kRefG12);
    EXPECT_NEAR(rin, 1.0 / (2.0 * (kRefG1 + kRefG12)), 1e-12);
    EXPECT_GE(rin, 50.0);
    EXPECT_LE(rin, 400.0);
    EXPECT_NEAR(rin, 241.2693888761101, 1e-9);
}

TEST(QualityFactors, DielectricQIsReciprocalLossTangent) {
    const QualityFactors q = quality_factors(5.89e-3, 3.85e-3, ro3003(), 18e9, kRefG1 + kRefG12);
    EXPECT_NEAR(q.q_diel, 1111.1, 0.1);
}

TEST(QualityFactors, LosslessLimit) {
    Substrate s = ro3003();
    s.loss_tangent = 0.0;
    s.conductivity = 1e15;
    const QualityFactors q = quality_factors(5.89e-3, 3.85e-3, s, 18e9, kRefG1 + kRefG12);
    EXPECT_EQ(q.q_diel, std::numeric_limits<double>::infinity());
    EXPECT_NEAR(q.efficiency, 1.0, 1e-3);
    EXPECT_NEAR(q.q_total, q.q_rad, 1e-3 * q.q_rad);
}

TEST(QualityFactors, PublishedPatchComposition) {
    const double f = 18e9;
    const QualityFactors q = quality_factors(5.89e-3, 3.85e-3, ro3003(), f, kRefG1 + kRefG12);

    // Direct composition of the closed forms.
    const double omega = 2.0 * oracle::kPi * f;
    const double eps0 = 1.0 / (4e-7 * oracle::kPi * oracle::kC0 * oracle::kC0);
    const double q_rad = omega * eps0 * 3.0 * 3.85e-3 * 5.89e-3 / (4.0 * 1.574e-3 * (kRefG1 + kRefG12));
    const double q_cond = 1.574e-3 * std::sqrt(oracle::kPi * f * 4e-7 * oracle::kPi * 5.8e7);
    EXPECT_NEAR(q.q_rad, q_rad, 1e-12 * q_rad);
    EXPECT_NEAR(q.q_cond, q_cond, 1e-9 * q_cond);
    EXPECT_NEAR(q.q_rad, 5.221147, 1e-5);  // frozen from the composed oracle

    EXPECT_LE(q.q_total, std::min({q.q_rad, q.q_cond, q.q_diel}));
    EXPECT_NEAR(1.0 / q.q_total, 1.0 / q.q_rad + 1.0 / q.q_cond + 1.0 / q.q_diel, 1e-15);
    EXPECT_NEAR(q.efficiency * q.q_rad, q.q_total, 1e-13 * q.q_total);
    EXPECT_GT(q.efficiency, 0.0);
    EXPECT_LE(q.efficiency, 1.0);
}

TEST(RlcImpedance, ResonanceAndDetuning) {
    const RlcLoad load{18e9, 50.0, 100.0};
    EXPECT_EQ(rlc_impedance(18e9, load), Complex(50.0, 0.0));
    const double f_half = 18e9 * (1.0 + 1.0 / 200.0);
    EXPECT_NEAR(std::abs(rlc_impedance(f_half, load)), 50.0 / std::sqrt(2.0), 0.01 * 50.0 / std::sqrt(2.0));
    EXPECT_LT(std::abs(rlc_impedance(0.01 * 18e9, load)), 50.0 / 50.0);
    EXPECT_THROW(rlc_impedance(0.0, load), InvalidInput);
}

TEST(RlcImpedance, RealPartPositive) {
    const RlcLoad load{18e9, 241.0, 5.2};
    for (double f = 1e9; f < 60e9; f += 0.25e9) EXPECT_GT(rlc_impedance(f, load).real(), 0.0);
}

TEST(RlcImpedance, MatchedMinimumSitsAtResonance) {
    const RlcLoad load{18e9, 50.0, 30.0};
    const double step = 1e6;
    double best_f = 0.0, best = INFINITY;
    for (double f = 17e9; f <= 19e9 + 1.0; f += step) {
        const double g = std::abs(reflection_coefficient(rlc_impedance(f, load), 50.0));
        if (g < best) {
            best = g;
            best_f = f;
        }
    }
    EXPECT_NEAR(best_f, 18e9, step);
}

TEST(AnalyzePatch, PublishedPatchInvariants) {
    const PatchDesign d = analyze_patch(5.89e-3, 3.85e-3, ro3003());
    EXPECT_NEAR(d.f0, 18e9, 0.005 * 18e9);
    EXPECT_GT(d.eps_eff, 1.0);
    EXPECT_LE(d.eps_eff, 3.0);
    EXPECT_GT(d.delta_l, 0.0);
    EXPECT_GT(d.rin_edge, 0.0);
    EXPECT_LE(d.q_total, std::min({d.q_rad, d.q_cond, d.q_diel}));
    EXPECT_GT(d.efficiency, 0.0);
    EXPECT_LE(d.efficiency, 1.0);
    EXPECT_NEAR(d.effective_length(), 3.85e-3 + 2.0 * d.delta_l, 1e-18);
}

TEST(DesignPatch, ReproducesPublishedDimensions) {
    const PatchDesign d = design_patch(18e9, ro3003());
    EXPECT_NEAR(d.width * 1e3, 5.89, 0.01);
    EXPECT_NEAR(d.length * 1e3, 3.85, 0.01);
    EXPECT_NEAR(d.f0, 18e9, 1e-6 * 18e9);
}

}  // namespace
}  // namespace patcharray
