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

#include "patcharray/microstrip.hpp"

#include <cmath>
#include <numbers>

#include "patcharray/errors.hpp"

namespace patcharray {

namespace {

void require_width(double width) {
    if (!(width > 0.0) || !std::isfinite(width))
        throw InvalidInput("strip width must be positive and finite");
}

constexpr double kZ0Tolerance = 0.01;
constexpr int kMaxBisections = 200;
constexpr double kMinWidthRatio = 1e-3;
constexpr double kMaxWidthRatio = 1e3;

}  // namespace

double eps_eff(double width, const Substrate& s) {
    require_width(width);
    validate_substrate(s);
    const double er = s.rel_permittivity;
    const double u = width / s.height;
    double e = 0.5 * (er + 1.0) + 0.5 * (er - 1.0) / std::sqrt(1.0 + 12.0 / u);
    if (u < 1.0) e += 0.5 * (er - 1.0) * 0.04 * (1.0 - u) * (1.0 - u);
    return e;
}

double z0_microstrip(double width, const Substrate& s) {
    const double e = eps_eff(width, s);
    const double u = width / s.height;
    if (u <= 1.0)
        return 60.0 / std::sqrt(e) * std::log(8.0 / u + 0.25 * u);
    return constants::eta0 / (std::sqrt(e) * (u + 1.393 + 0.667 * std::log(u + 1.444)));
}

double synthesize_width(double z0_target, const Substrate& s) {
    validate_substrate(s);
    if (!(z0_target >= 10.0 && z0_target <= 250.0))
        throw OutOfRange("target impedance outside the synthesizable 10-250 ohm band");

    // z0 falls monotonically with W, so bracket in log(W/h).
    double lo = std::log(kMinWidthRatio);
    double hi = std::log(kMaxWidthRatio);
    auto z_at = [&](double log_ratio) { return z0_microstrip(s.height * std::exp(log_ratio), s); };
    if (z0_target > z_at(lo) || z0_target < z_at(hi))
        throw OutOfRange("target impedance not realizable on this substrate");

    for (int i = 0; i < kMaxBisections; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double z = z_at(mid);
        if (std::abs(z - z0_target) <= kZ0Tolerance) return s.height * std::exp(mid);
        if (z > z0_target)
            lo = mid;
        else
            hi = mid;
    }
    throw ConvergenceError("width synthesis did not converge in 200 bisections");
}

double guided_wavelength(double frequency_hz, double width, const Substrate& s) {
    return wavelength(frequency_hz) / std::sqrt(eps_eff(width, s));
}

MicrostripLine make_microstrip_line(double width, double length, const Substrate& s) {
    if (!(length >= 0.0))
        throw InvalidInput("line length must be non-negative");
    return MicrostripLine{
        .width = width,
        .length = length,
        .eps_eff = eps_eff(width, s),
        .z0 = z0_microstrip(width, s),
    };
}

}  // namespace patcharray
