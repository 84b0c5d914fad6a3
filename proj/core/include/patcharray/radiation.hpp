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

#include <functional>
#include <optional>
#include <vector>

#include "patcharray/media.hpp"

namespace patcharray {

struct ArrayGeometry;
struct LadderModel;

// Coordinates: patch normal = +z, array (and resonant) axis = x.
// E-plane is the x-z plane (phi = 0/180), H-plane the y-z plane.

// theta_i = i * pi / (n_theta - 1), phi_j = j * 2 pi / n_phi.
struct AngularGrid {
    std::size_t n_theta = 361;  // 0.5 degree
    std::size_t n_phi = 360;    // 1 degree

    double theta(std::size_t i) const;
    double phi(std::size_t j) const;
    double theta_step() const;
    double phi_step() const;
    AngularGrid refined() const { return {2 * n_theta - 1, 2 * n_phi}; }
};

struct RadiationPattern {
    AngularGrid grid;
    std::vector<double> intensity;  // row-major [theta][phi], relative W/sr
    double frequency_hz = 0.0;

    double at(std::size_t i, std::size_t j) const { return intensity[i * grid.n_phi + j]; }
    double max_intensity() const;
};

struct ExcitationSet {
    std::vector<Complex> amplitudes;
    double spacing = 0.0;     // m, center to center
    double phase_step = 0.0;  // progressive phase beta, rad
};

// Uniform in-phase excitation for the geometry's N at pitch L + FL.
ExcitationSet uniform_excitation(const ArrayGeometry& g);

// Amplitudes proportional to the patch node voltages of the ladder at f.
ExcitationSet ladder_excitation(const LadderModel& model, double frequency_hz, double spacing);

// Two-slot patch element, normalized to 1 at broadside, zero for
// theta > pi/2 (infinite ground plane).
double element_pattern(double theta, double phi, double width, double effective_length,
                       double frequency_hz);

// AF = sum_n a_n exp(j n (k0 d sin(theta) cos(phi) + beta)).
Complex array_factor(const ExcitationSet& ex, double frequency_hz, double theta, double phi);

// Samples fn(theta, phi) over the grid (in parallel, deterministic output).
RadiationPattern sample_pattern(const AngularGrid& grid, double frequency_hz,
                                const std::function<double(double, double)>& fn,
                                unsigned threads = 0);

// Pattern multiplication U = |AF|^2 * U_element for the geometry's patch.
RadiationPattern total_pattern(const ArrayGeometry& g, const Substrate& s, const ExcitationSet& ex,
                               double frequency_hz, const AngularGrid& grid = {},
                               unsigned threads = 0);

// D = 4 pi U_max / integral(U dOmega), trapezoid in theta, periodic sum in phi.
double directivity(const RadiationPattern& p);

// 10 log10(efficiency * D).
double gain_dbi(double directivity, double efficiency);

enum class CutPlane { e_plane, h_plane };

// Principal-plane cut on signed angles -180..180 degrees; positive angles
// lie toward phi = 0 (E) or phi = 90 degrees (H).
struct PatternCut {
    CutPlane plane = CutPlane::e_plane;
    std::vector<double> angles_deg;
    std::vector<double> intensity;

    // Levels in dB relative to `reference` (defaults to the cut maximum).
    std::vector<double> levels_db(std::optional<double> reference = std::nullopt) const;
};

PatternCut extract_cut(const RadiationPattern& p, CutPlane plane);

struct BeamMetrics {
    double hpbw_deg = 0.0;
    std::optional<double> sll_db;  // absent when no lobe outside the main lobe
    double peak_direction_deg = 0.0;
};

// HPBW from -3 dB crossings around the cut peak (linear interpolation on
// dB), SLL as the highest local maximum outside the main lobe, peak
// direction by a 3-point parabolic fit. Throws MetricUndefined when either
// -3 dB crossing is missing.
BeamMetrics beam_metrics(const PatternCut& cut);
BeamMetrics beam_metrics(const RadiationPattern& p, CutPlane plane);

}  // namespace patcharray
