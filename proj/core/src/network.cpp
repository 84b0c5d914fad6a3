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

#include "patcharray/network.hpp"

#include <cmath>
#include <numbers>

#include "patcharray/errors.hpp"
#include "patcharray/geometry.hpp"
#include "patcharray/microstrip.hpp"
#include "patcharray/parallel.hpp"

namespace patcharray {

namespace {

constexpr Complex kJ{0.0, 1.0};

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

double electrical_length(double frequency_hz, double length, double eps_eff) {
    return 2.0 * std::numbers::pi * frequency_hz * std::sqrt(eps_eff) * length / constants::c0;
}

TwoPortAbcd element_abcd(const LadderElement& e, double f) {
    return std::visit(
        overloaded{
            [f](const PatchShunt& p) { return abcd_shunt(1.0 / rlc_impedance(f, p.load)); },
            [f](const LineSection& l) {
                return abcd_line(l.z0, electrical_length(f, l.length, l.eps_eff));
            },
            [](const ShuntImpedance& z) { return abcd_shunt(1.0 / z.z); },
        },
        e);
}

}  // namespace

TwoPortAbcd operator*(const TwoPortAbcd& l, const TwoPortAbcd& r) {
    return {
        l.a * r.a + l.b * r.c,
        l.a * r.b + l.b * r.d,
        l.c * r.a + l.d * r.c,
        l.c * r.b + l.d * r.d,
    };
}

TwoPortAbcd abcd_line(double z0, double theta) {
    if (!(z0 > 0.0) || !std::isfinite(z0)) throw InvalidInput("line impedance must be positive");
    if (!std::isfinite(theta)) throw InvalidInput("electrical length must be finite");
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c, kJ * (z0 * s), kJ * (s / z0), c};
}

TwoPortAbcd abcd_shunt(Complex y) {
    checked_finite(y, "shunt admittance");
    return {1.0, 0.0, y, 1.0};
}

TwoPortAbcd cascade(std::span<const TwoPortAbcd> elements) {
    if (elements.empty()) throw InvalidInput("cascade of an empty element list");
    TwoPortAbcd m = elements.front();
    for (std::size_t i = 1; i < elements.size(); ++i) m = m * elements[i];
    return m;
}

TwoPortAbcd cascade(std::initializer_list<TwoPortAbcd> elements) {
    return cascade(std::span<const TwoPortAbcd>(elements.begin(), elements.size()));
}

Complex input_impedance(const TwoPortAbcd& m, const Termination& load) {
    Complex num;
    Complex den;
    if (std::holds_alternative<OpenCircuit>(load)) {
        num = m.a;
        den = m.c;
    } else {
        const Complex zl = std::get<Complex>(load);
        num = m.a * zl + m.b;
        den = m.c * zl + m.d;
    }
    if (std::abs(den) < 1e-300) throw NumericalError("singular input impedance denominator");
    const Complex z = num / den;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw NumericalError("non-finite input impedance");
    return z;
}

std::size_t LadderModel::patch_count() const {
    std::size_t n = 0;
    for (const auto& e : elements) n += std::holds_alternative<PatchShunt>(e) ? 1 : 0;
    return n;
}

TwoPortAbcd LadderModel::abcd(double frequency_hz) const {
    if (!(frequency_hz > 0.0)) throw InvalidInput("frequency must be positive");
    TwoPortAbcd m;
    if (transformer)
        m = abcd_line(transformer->z0,
                      electrical_length(frequency_hz, transformer->length, transformer->eps_eff));
    for (const auto& e : elements) m = m * element_abcd(e, frequency_hz);
    return m;
}

Complex LadderModel::input_impedance(double frequency_hz) const {
    try {
        return patcharray::input_impedance(abcd(frequency_hz), OpenCircuit{});
    } catch (const NumericalError& e) {
        throw NumericalError(e.what(), frequency_hz);
    }
}

std::vector<Complex> LadderModel::patch_voltages(double frequency_hz) const {
    // Walk from the port: [V2; I2] = [d -b; -c a] [V1; I1] since det = 1.
    Complex v = 1.0;
    Complex i = v / input_impedance(frequency_hz);
    auto step = [&](const TwoPortAbcd& m) {
        const Complex v2 = m.d * v - m.b * i;
        const Complex i2 = -m.c * v + m.a * i;
        v = v2;
        i = i2;
    };
    if (transformer)
        step(abcd_line(transformer->z0,
                       electrical_length(frequency_hz, transformer->length, transformer->eps_eff)));
    std::vector<Complex> out;
    for (const auto& e : elements) {
        if (std::holds_alternative<PatchShunt>(e)) out.push_back(v);
        step(element_abcd(e, frequency_hz));
    }
    return out;
}

LadderModel build_series_fed_array(const ArrayGeometry& g, const Substrate& s) {
    if (g.element_count >= 1 && g.span_mm() > g.ground_length_mm * (1.0 + 1e-12))
        throw GeometryInfeasible("array span N*L + (N-1)*FL exceeds the ground length");
    validate_geometry(g);
    validate_substrate(s);

    const PatchDesign patch = analyze_patch(g.patch_width(), g.patch_length(), s);
    const MicrostripLine line = make_microstrip_line(g.feed_width(), g.feed_length(), s);

    LadderModel model;
    for (int n = 0; n < g.element_count; ++n) {
        if (n > 0) model.elements.emplace_back(LineSection{line.z0, line.length, line.eps_eff});
        model.elements.emplace_back(PatchShunt{patch.rlc()});
    }
    return model;
}

std::vector<double> FrequencySweep::s11_db() const {
    std::vector<double> out;
    out.reserve(s11.size());
    for (const Complex& g : s11) out.push_back(magnitude_db(std::abs(g)));
    return out;
}

void compute_sweep_metrics(FrequencySweep& sweep) {
    const auto& f = sweep.frequencies;
    const std::vector<double> db = sweep.s11_db();
    std::size_t imin = 0;
    for (std::size_t k = 1; k < db.size(); ++k)
        if (db[k] < db[imin]) imin = k;
    sweep.f_at_min = f[imin];
    sweep.min_s11_db = db[imin];
    sweep.band_edges_10db.reset();

    constexpr double kLevel = -10.0;
    if (db[imin] > kLevel) return;

    auto crossing = [&](std::size_t outside, std::size_t inside) {
        const double t = (kLevel - db[outside]) / (db[inside] - db[outside]);
        return f[outside] + t * (f[inside] - f[outside]);
    };

    BandEdges band;
    std::size_t lo = imin;
    while (lo > 0 && db[lo - 1] <= kLevel) --lo;
    if (lo == 0) {
        band.lower_hz = f.front();
        band.lower_truncated = true;
    } else {
        band.lower_hz = crossing(lo - 1, lo);
    }
    std::size_t hi = imin;
    while (hi + 1 < db.size() && db[hi + 1] <= kLevel) ++hi;
    if (hi + 1 == db.size()) {
        band.upper_hz = f.back();
        band.upper_truncated = true;
    } else {
        band.upper_hz = crossing(hi + 1, hi);
    }
    sweep.band_edges_10db = band;
}

FrequencySweep make_sweep(std::vector<double> frequencies, std::vector<Complex> s11,
                          double reference_impedance) {
    if (frequencies.size() < 2 || frequencies.size() != s11.size())
        throw InvalidInput("a sweep needs at least two samples and matching array lengths");
    for (std::size_t k = 1; k < frequencies.size(); ++k)
        if (!(frequencies[k] > frequencies[k - 1]))
            throw InvalidInput("sweep frequencies must be strictly increasing");
    FrequencySweep sweep;
    sweep.frequencies = std::move(frequencies);
    sweep.s11 = std::move(s11);
    sweep.reference_impedance = reference_impedance;
    compute_sweep_metrics(sweep);
    return sweep;
}

FrequencySweep s11_sweep(const LadderModel& model, double f_start_hz, double f_stop_hz,
                         std::size_t n_points, unsigned threads) {
    if (!(f_start_hz > 0.0) || !(f_stop_hz > f_start_hz))
        throw InvalidInput("sweep requires 0 < f_start < f_stop");
    if (n_points < 2) throw InvalidInput("sweep requires at least two points");

    std::vector<double> freqs(n_points);
    const double step = (f_stop_hz - f_start_hz) / static_cast<double>(n_points - 1);
    for (std::size_t k = 0; k < n_points; ++k) freqs[k] = f_start_hz + step * static_cast<double>(k);
    freqs.back() = f_stop_hz;

    std::vector<Complex> s11(n_points);
    parallel_for(n_points, threads, [&](std::size_t k) {
        const Complex z = model.input_impedance(freqs[k]);
        try {
            s11[k] = reflection_coefficient(z, model.reference_impedance);
        } catch (const InvalidInput& e) {
            throw NumericalError(e.what(), freqs[k]);
        }
    });
    return make_sweep(std::move(freqs), std::move(s11), model.reference_impedance);
}

MatchingTransformer synthesize_match(Complex z_in_at_f0, double z_ref, double f0_hz,
                                     const Substrate& s) {
    if (!(z_in_at_f0.real() > 0.0)) throw InvalidInput("Re(Zin) must be positive to match");
    if (!(z_ref > 0.0)) throw InvalidInput("reference impedance must be positive");
    MatchingTransformer t;
    t.z0 = std::sqrt(z_in_at_f0.real() * z_ref);
    t.width = synthesize_width(t.z0, s);
    t.eps_eff = eps_eff(t.width, s);
    t.length = guided_wavelength(f0_hz, t.width, s) / 4.0;
    t.residual_reactance = z_in_at_f0.imag();
    return t;
}

}  // namespace patcharray
