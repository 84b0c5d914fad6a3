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

#include "patcharray/media.hpp"

#include <cmath>
#include <string>

#include "patcharray/errors.hpp"

namespace patcharray {

Substrate ro3003() {
    return Substrate{
        .rel_permittivity = 3.0,
        .loss_tangent = 0.0009,
        .height = 1.574e-3,
        .conductor_thickness = 0.5e-3,
        .conductivity = constants::copper_conductivity,
    };
}

Substrate validate_substrate(const Substrate& s) {
    // Negated comparisons so NaN fails too.
    if (!(s.rel_permittivity >= 1.0))
        throw ValidationError("rel_permittivity", "must be >= 1, got " + std::to_string(s.rel_permittivity));
    if (!(s.loss_tangent >= 0.0))
        throw ValidationError("loss_tangent", "must be >= 0, got " + std::to_string(s.loss_tangent));
    if (!(s.height > 0.0))
        throw ValidationError("height", "must be > 0, got " + std::to_string(s.height));
    if (!(s.conductor_thickness >= 0.0))
        throw ValidationError("conductor_thickness", "must be >= 0");
    if (!(s.conductivity > 0.0))
        throw ValidationError("conductivity", "must be > 0");
    return s;
}

double wavelength(double frequency_hz) {
    if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
        throw InvalidInput("frequency must be positive and finite");
    return constants::c0 / frequency_hz;
}

Complex reflection_coefficient(Complex z, double z_ref) {
    if (!(z_ref > 0.0))
        throw InvalidInput("reference impedance must be positive");
    checked_finite(z, "load impedance");
    const Complex den = z + z_ref;
    if (den == Complex{0.0, 0.0})
        throw InvalidInput("reflection coefficient undefined: Z + Zref = 0");
    return (z - z_ref) / den;
}

Complex impedance_from_reflection(Complex gamma, double z_ref) {
    if (!(z_ref > 0.0))
        throw InvalidInput("reference impedance must be positive");
    const Complex den = 1.0 - gamma;
    if (den == Complex{0.0, 0.0})
        throw InvalidInput("impedance undefined: Gamma = 1 (open circuit)");
    return z_ref * (1.0 + gamma) / den;
}

double magnitude_db(double x) {
    if (!(x >= 0.0))
        throw InvalidInput("magnitude must be non-negative");
    if (x < kDbFloorCutoff) return kDbFloor;
    return 20.0 * std::log10(x);
}

double power_db(double p) {
    if (!(p >= 0.0))
        throw InvalidInput("power must be non-negative");
    if (p < kDbFloorCutoff * kDbFloorCutoff) return kDbFloor;
    return 10.0 * std::log10(p);
}

Complex checked_finite(Complex z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw InvalidInput(std::string(what) + " is not finite");
    return z;
}

}  // namespace patcharray
