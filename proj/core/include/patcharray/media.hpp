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

#pragma once

#include <complex>
#include <numbers>

namespace patcharray {

using Complex = std::complex<double>;

// Physical constants, SI.
namespace constants {
inline constexpr double c0 = 299'792'458.0;                  // m/s, exact
inline constexpr double mu0 = 4.0e-7 * std::numbers::pi;     // H/m
inline constexpr double eps0 = 1.0 / (mu0 * c0 * c0);        // F/m
inline constexpr double eta0 = mu0 * c0;                     // sqrt(mu0/eps0), ohms
inline constexpr double copper_conductivity = 5.8e7;         // S/m
}  // namespace constants

// Values below this magnitude are reported at the dB floor.
inline constexpr double kDbFloor = -200.0;
inline constexpr double kDbFloorCutoff = 1e-10;

// Grounded dielectric slab. All lengths in meters.
struct Substrate {
    double rel_permittivity = 1.0;
    double loss_tangent = 0.0;
    double height = 0.0;
    double conductor_thickness = 0.0;
    double conductivity = constants::copper_conductivity;

    bool operator==(const Substrate&) const = default;
};

// Rogers RO3003 as used by the reference 18 GHz array: er = 3,
// tan(d) = 0.0009, h = 1.574 mm, 0.5 mm ground, copper.
Substrate ro3003();

// Returns s unchanged, or throws ValidationError naming the first bad field.
Substrate validate_substrate(const Substrate& s);

// Free-space wavelength c0/f.
double wavelength(double frequency_hz);

// Gamma = (Z - Zref) / (Z + Zref).
Complex reflection_coefficient(Complex z, double z_ref);

// Inverse of reflection_coefficient: Z = Zref (1 + Gamma) / (1 - Gamma).
Complex impedance_from_reflection(Complex gamma, double z_ref);

// 20 log10(x), floored at kDbFloor for x < kDbFloorCutoff.
double magnitude_db(double x);

// 10 log10(p) for power-like quantities, with the same floor applied to
// the equivalent amplitude sqrt(p).
double power_db(double p);

// Throws InvalidInput if either component is NaN or infinite.
Complex checked_finite(Complex z, const char* what);

}  // namespace patcharray
