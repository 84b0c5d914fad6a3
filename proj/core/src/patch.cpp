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

#include "patcharray/patch.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "patcharray/errors.hpp"
#include "patcharray/microstrip.hpp"

namespace patcharray {

namespace {

using std::numbers::pi;

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw InvalidInput(std::string(what) + " must be positive and finite");
}

double sinc(double x) {
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

constexpr double kSlotRelTol = 1e-8;

template <class F>
double integrate_slot(F&& integrand) {
    double error = 0.0;
    double l1 = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        integrand, 0.0, pi, 20, 1e-11, &error, &l1);
    if (!std::isfinite(value) || error > kSlotRelTol * l1)
        throw NumericalError("slot conductance quadrature did not reach 1e-8 relative tolerance");
    return value;
}

}  // namespace

double patch_width(double f0_hz, double eps_r) {
    require_positive(f0_hz, "design frequency");
    if (!(eps_r >= 1.0)) throw InvalidInput("relative permittivity must be >= 1");
    return constants::c0 / (2.0 * f0_hz) * std::sqrt(2.0 / (eps_r + 1.0));
}

double length_extension(double width, const Substrate& s) {
    const double e = eps_eff(width, s);
    const double u = width / s.height;
    return s.height * 0.412 * (e + 0.3) * (u + 0.264) / ((e - 0.258) * (u + 0.8));
}

double patch_length(double f0_hz, const Substrate& s, Fringing fringing) {
    validate_substrate(s);
    const double w = patch_width(f0_hz, s.rel_permittivity);
    const double half_wave = constants::c0 / (2.0 * f0_hz * std::sqrt(eps_eff(w, s)));
    const double dl = fringing == Fringing::hammerstad ? length_extension(w, s) : 0.0;
    const double length = half_wave - 2.0 * dl;
    if (!(length > 0.0) || dl >= 0.25 * half_wave)
        throw DesignInfeasible("fringing extension consumes the resonant length; substrate too thick for f0");
    return length;
}

double resonant_frequency(double length, double width, const Substrate& s) {
    require_positive(length, "patch length");
    require_positive(width, "patch width");
    const double e = eps_eff(width, s);
    const double dl = length_extension(width, s);
    return constants::c0 / (2.0 * (length + 2.0 * dl) * std::sqrt(e));
}

SlotConductances slot_conductances(double width, double length, double f0_hz) {
    require_positive(width, "slot width");
    if (!(length >= 0.0)) throw InvalidInput("slot separation must be non-negative");
    require_positive(f0_hz, "frequency");

    const double k0 = 2.0 * pi * f0_hz / constants::c0;
    const double a = 0.5 * k0 * width;

    // [sin(a cos t) / cos t]^2 written as a^2 sinc^2(a cos t): the
    // cos t = 0 point takes its limit a^2 automatically.
    auto aperture = [a](double t) {
        const double s = std::sin(t);
        const double sc = sinc(a * std::cos(t));
        return a * a * sc * sc * s * s * s;
    };
    const double i1 = integrate_slot(aperture);
    const double i12 = integrate_slot([&](double t) {
        return aperture(t) * std::cyl_bessel_j(0.0, k0 * length * std::sin(t));
    });

    const double scale = 1.0 / (120.0 * pi * pi);
    return {i1 * scale, i12 * scale};
}

double edge_resistance(double g1, double g12) {
    const double g = g1 + g12;
    if (!(g > 0.0)) throw InvalidInput("total slot conductance must be positive");
    return 1.0 / (2.0 * g);
}

QualityFactors quality_factors(double width, double length, const Substrate& s, double f0_hz,
                               double g_total) {
    require_positive(width, "patch width");
    require_positive(length, "patch length");
    require_positive(f0_hz, "frequency");
    require_positive(g_total, "total conductance");
    validate_substrate(s);

    const double omega = 2.0 * pi * f0_hz;
    const double skin_depth = 1.0 / std::sqrt(pi * f0_hz * constants::mu0 * s.conductivity);

    QualityFactors q;
    q.q_rad = omega * constants::eps0 * s.rel_permittivity * length * width / (4.0 * s.height * g_total);
    q.q_cond = s.height / skin_depth;
    q.q_diel = s.loss_tangent > 0.0 ? 1.0 / s.loss_tangent : std::numeric_limits<double>::infinity();
    q.q_total = 1.0 / (1.0 / q.q_rad + 1.0 / q.q_cond + 1.0 / q.q_diel);
    q.efficiency = q.q_total / q.q_rad;
    return q;
}

Complex rlc_impedance(double frequency_hz, const RlcLoad& load) {
    require_positive(frequency_hz, "frequency");
    require_positive(load.f0, "resonant frequency");
    require_positive(load.rin, "edge resistance");
    require_positive(load.q_total, "quality factor");
    if (frequency_hz == load.f0) return {load.rin, 0.0};
    const double detune = frequency_hz / load.f0 - load.f0 / frequency_hz;
    return load.rin / Complex(1.0, load.q_total * detune);
}

PatchDesign analyze_patch(double width, double length, const Substrate& s) {
    validate_substrate(s);
    PatchDesign d;
    d.width = width;
    d.length = length;
    d.eps_eff = eps_eff(width, s);
    d.delta_l = length_extension(width, s);
    d.f0 = resonant_frequency(length, width, s);

    const SlotConductances g = slot_conductances(width, length, d.f0);
    d.g1 = g.g1;
    d.g12 = g.g12;
    d.rin_edge = edge_resistance(g.g1, g.g12);

    const QualityFactors q = quality_factors(width, length, s, d.f0, g.g1 + g.g12);
    d.q_rad = q.q_rad;
    d.q_cond = q.q_cond;
    d.q_diel = q.q_diel;
    d.q_total = q.q_total;
    d.efficiency = q.efficiency;
    return d;
}

PatchDesign design_patch(double f0_hz, const Substrate& s) {
    const double w = patch_width(f0_hz, s.rel_permittivity);
    const double l = patch_length(f0_hz, s);
    return analyze_patch(w, l, s);
}

}  // namespace patcharray
