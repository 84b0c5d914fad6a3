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

#include "patcharray/radiation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "patcharray/errors.hpp"
#include "patcharray/geometry.hpp"
#include "patcharray/network.hpp"
#include "patcharray/parallel.hpp"
#include "patcharray/patch.hpp"

namespace patcharray {

namespace {

using std::numbers::pi;

double sinc(double x) {
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

double rad_to_deg(double r) { return r * 180.0 / pi; }

}  // namespace

double AngularGrid::theta(std::size_t i) const {
    if (i + 1 == n_theta) return pi;
    return pi * static_cast<double>(i) / static_cast<double>(n_theta - 1);
}

double AngularGrid::phi(std::size_t j) const {
    return 2.0 * pi * static_cast<double>(j) / static_cast<double>(n_phi);
}

double AngularGrid::theta_step() const { return pi / static_cast<double>(n_theta - 1); }
double AngularGrid::phi_step() const { return 2.0 * pi / static_cast<double>(n_phi); }

double RadiationPattern::max_intensity() const {
    return intensity.empty() ? 0.0 : *std::max_element(intensity.begin(), intensity.end());
}

ExcitationSet uniform_excitation(const ArrayGeometry& g) {
    if (g.element_count < 1) throw InvalidInput("element count must be >= 1");
    return ExcitationSet{
        .amplitudes = std::vector<Complex>(static_cast<std::size_t>(g.element_count), Complex{1.0, 0.0}),
        .spacing = g.element_spacing(),
        .phase_step = 0.0,
    };
}

ExcitationSet ladder_excitation(const LadderModel& model, double frequency_hz, double spacing) {
    std::vector<Complex> v = model.patch_voltages(frequency_hz);
    if (v.empty()) throw InvalidInput("ladder has no patches");
    const Complex ref = v.front();
    if (std::abs(ref) == 0.0) throw NumericalError("first patch voltage vanishes", frequency_hz);
    for (auto& a : v) a /= ref;
    return ExcitationSet{.amplitudes = std::move(v), .spacing = spacing, .phase_step = 0.0};
}

double element_pattern(double theta, double phi, double width, double effective_length,
                       double frequency_hz) {
    if (!(width > 0.0) || !(effective_length > 0.0) || !(frequency_hz > 0.0))
        throw InvalidInput("element pattern needs positive dimensions and frequency");
    if (!(theta >= 0.0 && theta <= pi)) throw InvalidInput("theta outside [0, pi]");
    if (theta > 0.5 * pi) return 0.0;

    const double k0 = 2.0 * pi * frequency_hz / constants::c0;
    const double st = std::sin(theta);
    const double sp = std::sin(phi);
    const double cp = std::cos(phi);
    // Magnetic current along y: |E|^2 ~ 1 - (sin t sin p)^2.
    const double polarization = 1.0 - st * st * sp * sp;
    const double aperture = sinc(0.5 * k0 * width * st * sp);
    const double slots = std::cos(0.5 * k0 * effective_length * st * cp);
    return polarization * aperture * aperture * slots * slots;
}

Complex array_factor(const ExcitationSet& ex, double frequency_hz, double theta, double phi) {
    if (ex.amplitudes.empty()) throw InvalidInput("excitation has no elements");
    if (ex.amplitudes.size() > 1 && !(ex.spacing > 0.0))
        throw InvalidInput("element spacing must be positive");
    const double k0 = 2.0 * pi * frequency_hz / constants::c0;
    const double psi = k0 * ex.spacing * std::sin(theta) * std::cos(phi) + ex.phase_step;
    // Horner in z = exp(j psi), highest index first.
    const Complex z = std::polar(1.0, psi);
    Complex acc = 0.0;
    for (auto it = ex.amplitudes.rbegin(); it != ex.amplitudes.rend(); ++it) acc = acc * z + *it;
    return acc;
}

RadiationPattern sample_pattern(const AngularGrid& grid, double frequency_hz,
                                const std::function<double(double, double)>& fn, unsigned threads) {
    if (grid.n_theta < 3 || grid.n_phi < 4) throw InvalidInput("angular grid too coarse");
    RadiationPattern p;
    p.grid = grid;
    p.frequency_hz = frequency_hz;
    p.intensity.assign(grid.n_theta * grid.n_phi, 0.0);
    parallel_for(grid.n_theta, threads, [&](std::size_t i) {
        const double t = grid.theta(i);
        for (std::size_t j = 0; j < grid.n_phi; ++j) {
            const double u = fn(t, grid.phi(j));
            if (!(u >= 0.0) || !std::isfinite(u))
                throw NumericalError("pattern intensity must be finite and non-negative");
            p.intensity[i * grid.n_phi + j] = u;
        }
    });
    return p;
}

RadiationPattern total_pattern(const ArrayGeometry& g, const Substrate& s, const ExcitationSet& ex,
                               double frequency_hz, const AngularGrid& grid, unsigned threads) {
    validate_geometry(g);
    const double width = g.patch_width();
    const double leff = g.patch_length() + 2.0 * length_extension(width, s);
    return sample_pattern(
        grid, frequency_hz,
        [&](double t, double ph) {
            const double ue = element_pattern(t, ph, width, leff, frequency_hz);
            if (ue == 0.0) return 0.0;
            return std::norm(array_factor(ex, frequency_hz, t, ph)) * ue;
        },
        threads);
}

double directivity(const RadiationPattern& p) {
    const auto& grid = p.grid;
    if (p.intensity.size() != grid.n_theta * grid.n_phi)
        throw InvalidInput("pattern sample count does not match its grid");
    if (grid.n_theta < 181 || grid.n_phi < 360)
        throw InvalidInput("quadrature needs at least 181 theta x 360 phi samples");
    const double umax = p.max_intensity();
    if (!(umax > 0.0)) throw InvalidInput("directivity of an all-zero pattern");

    // Fixed summation order keeps results bit-stable.
    double total = 0.0;
    for (std::size_t i = 0; i < grid.n_theta; ++i) {
        double ring = 0.0;
        for (std::size_t j = 0; j < grid.n_phi; ++j) ring += p.at(i, j);
        const double w = (i == 0 || i + 1 == grid.n_theta) ? 0.5 : 1.0;
        total += w * ring * std::sin(grid.theta(i));
    }
    total *= grid.theta_step() * grid.phi_step();
    return 4.0 * pi * umax / total;
}

double gain_dbi(double d, double efficiency) {
    if (!(efficiency > 0.0 && efficiency <= 1.0)) throw InvalidInput("efficiency must be in (0, 1]");
    if (!(d > 0.0)) throw InvalidInput("directivity must be positive");
    return 10.0 * std::log10(efficiency * d);
}

std::vector<double> PatternCut::levels_db(std::optional<double> reference) const {
    const double ref = reference.value_or(
        intensity.empty() ? 0.0 : *std::max_element(intensity.begin(), intensity.end()));
    std::vector<double> out;
    out.reserve(intensity.size());
    for (double u : intensity) out.push_back(ref > 0.0 ? power_db(u / ref) : kDbFloor);
    return out;
}

PatternCut extract_cut(const RadiationPattern& p, CutPlane plane) {
    const auto& grid = p.grid;
    if (grid.n_phi % 4 != 0) throw InvalidInput("phi grid must contain the principal planes");
    const std::size_t quarter = grid.n_phi / 4;
    const std::size_t pos = plane == CutPlane::e_plane ? 0 : quarter;
    const std::size_t neg = pos + 2 * quarter;

    PatternCut cut;
    cut.plane = plane;
    const std::size_t n = 2 * grid.n_theta - 1;
    cut.angles_deg.reserve(n);
    cut.intensity.reserve(n);
    for (std::size_t k = grid.n_theta - 1; k > 0; --k) {
        cut.angles_deg.push_back(-rad_to_deg(grid.theta(k)));
        cut.intensity.push_back(p.at(k, neg));
    }
    for (std::size_t k = 0; k < grid.n_theta; ++k) {
        cut.angles_deg.push_back(rad_to_deg(grid.theta(k)));
        cut.intensity.push_back(p.at(k, pos));
    }
    return cut;
}

BeamMetrics beam_metrics(const PatternCut& cut) {
    const auto& a = cut.angles_deg;
    const auto& u = cut.intensity;
    const std::size_t n = u.size();
    if (n < 3 || a.size() != n) throw InvalidInput("cut needs at least three samples");

    const std::size_t ipk =
        static_cast<std::size_t>(std::max_element(u.begin(), u.end()) - u.begin());
    if (!(u[ipk] > 0.0)) throw MetricUndefined("cut is identically zero");
    const std::vector<double> db = cut.levels_db(u[ipk]);

    BeamMetrics m;

    m.peak_direction_deg = a[ipk];
    if (ipk > 0 && ipk + 1 < n) {
        const double ym = u[ipk - 1], y0 = u[ipk], yp = u[ipk + 1];
        const double den = ym - 2.0 * y0 + yp;
        if (den < 0.0) {
            const double offset = 0.5 * (ym - yp) / den;
            m.peak_direction_deg = a[ipk] + offset * 0.5 * (a[ipk + 1] - a[ipk - 1]);
        }
    }

    constexpr double kHalfPower = -3.0;
    auto interpolate = [&](std::size_t inside, std::size_t outside) {
        const double t = (kHalfPower - db[inside]) / (db[outside] - db[inside]);
        return a[inside] + t * (a[outside] - a[inside]);
    };
    std::size_t lo = ipk;
    while (lo > 0 && db[lo - 1] > kHalfPower) --lo;
    std::size_t hi = ipk;
    while (hi + 1 < n && db[hi + 1] > kHalfPower) ++hi;
    if (lo == 0 || hi + 1 == n)
        throw MetricUndefined("no -3 dB crossing on both sides of the peak");
    m.hpbw_deg = interpolate(hi, hi + 1) - interpolate(lo, lo - 1);

    // Main lobe runs down to the first local minimum on each side.
    std::size_t left = ipk;
    while (left > 0 && u[left - 1] <= u[left]) --left;
    std::size_t right = ipk;
    while (right + 1 < n && u[right + 1] <= u[right]) ++right;

    double best = 0.0;
    bool found = false;
    for (std::size_t k = 0; k < n; ++k) {
        if (k >= left && k <= right) continue;
        const bool rises_left = k == 0 || u[k] >= u[k - 1];
        const bool falls_right = k + 1 == n || u[k] >= u[k + 1];
        if (!(rises_left && falls_right) || !(u[k] > 0.0)) continue;
        if (!found || u[k] > best) {
            best = u[k];
            found = true;
        }
    }
    if (found) m.sll_db = power_db(best / u[ipk]);
    return m;
}

BeamMetrics beam_metrics(const RadiationPattern& p, CutPlane plane) {
    return beam_metrics(extract_cut(p, plane));
}

}  // namespace patcharray
