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
#include "patcharray/media.hpp"

namespace patcharray {
namespace {

TEST(Wavelength, FreeSpaceValues) {
    EXPECT_NEAR(wavelength(299.792458e6), 1.0, 1e-12);
    // c0 / 18 GHz
    EXPECT_NEAR(wavelength(18e9) * 1e3, 16.6551, 1e-4);
    EXPECT_DOUBLE_EQ(wavelength(2e9), wavelength(1e9) / 2.0);
}

TEST(Wavelength, RejectsNonPositiveFrequency) {
    EXPECT_THROW(wavelength(0.0), InvalidInput);
    EXPECT_THROW(wavelength(-1e9), InvalidInput);
}

TEST(Constants, ImpedanceOfFreeSpace) {
    EXPECT_NEAR(constants::eta0, 376.730, 1e-3);
    EXPECT_NEAR(std::sqrt(constants::mu0 / constants::eps0), constants::eta0, 1e-9);
}

TEST(ReflectionCoefficient, ClosedForms) {
    EXPECT_EQ(reflection_coefficient({50.0, 0.0}, 50.0), Complex(0.0, 0.0));
    const Complex g = reflection_coefficient({100.0, 0.0}, 50.0);
    EXPECT_NEAR(g.real(), 1.0 / 3.0, 1e-15);
    EXPECT_EQ(g.imag(), 0.0);
    const Complex g2 = reflection_coefficient({25.0, -25.0}, 50.0);
    EXPECT_NEAR(g2.real(), -0.2, 1e-15);
    EXPECT_NEAR(g2.imag(), -0.4, 1e-15);
}

TEST(ReflectionCoefficient, DegenerateInputs) {
    EXPECT_THROW(reflection_coefficient({-50.0, 0.0}, 50.0), InvalidInput);
    EXPECT_THROW(reflection_coefficient({50.0, 0.0}, 0.0), InvalidInput);
    EXPECT_THROW(reflection_coefficient({NAN, 0.0}, 50.0), InvalidInput);
}

TEST(ReflectionCoefficient, InverseRecoversImpedance) {
    auto gen = oracle::rng(1);
    std::uniform_real_distribution<double> re(0.0, 1000.0), im(-1000.0, 1000.0);
    for (int k = 0; k < 1000; ++k) {
        const Complex z(re(gen), im(gen));
        const Complex back = impedance_from_reflection(reflection_coefficient(z, 50.0), 50.0);
        EXPECT_LE(std::abs(back - z), 1e-12 * std::abs(z)) << z;
    }
}

TEST(ReflectionCoefficient, PassiveLoadsStayInsideUnitCircle) {
    auto gen = oracle::rng(2);
    std::exponential_distribution<double> re(0.01);
    std::normal_distribution<double> im(0.0, 300.0);
    for (int k = 0; k < 2000; ++k) {
        const Complex z(re(gen), im(gen));
        EXPECT_LE(std::abs(reflection_coefficient(z, 50.0)), 1.0 + 1e-15);
    }
}

TEST(MagnitudeDb, ValuesAndFloor) {
    EXPECT_EQ(magnitude_db(1.0), 0.0);
    EXPECT_NEAR(magnitude_db(0.1), -20.0, 1e-12);
    EXPECT_EQ(magnitude_db(0.0), -200.0);
    EXPECT_EQ(magnitude_db(5e-11), -200.0);
    EXPECT_THROW(magnitude_db(-1e-3), InvalidInput);
}

TEST(MagnitudeDb, ProductBecomesSum) {
    auto gen = oracle::rng(3);
    std::uniform_real_distribution<double> exponent(-4.0, 4.0);
    for (int k = 0; k < 1000; ++k) {
        const double a = std::pow(10.0, exponent(gen));
        const double b = std::pow(10.0, exponent(gen));
        EXPECT_NEAR(magnitude_db(a * b), magnitude_db(a) + magnitude_db(b), 1e-9);
    }
}

TEST(Substrate, Ro3003PresetIsValid) {
    const Substrate s = ro3003();
    EXPECT_EQ(validate_substrate(s), s);
    EXPECT_EQ(s.rel_permittivity, 3.0);
    EXPECT_EQ(s.loss_tangent, 0.0009);
    EXPECT_EQ(s.height, 1.574e-3);
    EXPECT_EQ(s.conductor_thickness, 0.5e-3);
    EXPECT_EQ(s.conductivity, 5.8e7);
}

TEST(Substrate, ValidationNamesTheField) {
    Substrate s = ro3003();
    s.rel_permittivity = 0.5;
    try {
        validate_substrate(s);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.field(), "rel_permittivity");
    }
    s = ro3003();
    s.loss_tangent = -0.001;
    try {
        validate_substrate(s);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.field(), "loss_tangent");
    }
    s = ro3003();
    s.height = 0.0;
    try {
        validate_substrate(s);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.field(), "height");
    }
}

}  // namespace
}  // namespace patcharray
