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

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "patcharray/media.hpp"
#include "patcharray/patch.hpp"

namespace patcharray {

struct ArrayGeometry;

// Chain matrix, port 1 on the feed side:
//   [V1]   [a b] [V2]
//   [I1] = [c d] [I2]
struct TwoPortAbcd {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};
    Complex c{0.0, 0.0};
    Complex d{1.0, 0.0};

    Complex determinant() const { return a * d - b * c; }
    static TwoPortAbcd identity() { return {}; }
};

TwoPortAbcd operator*(const TwoPortAbcd& lhs, const TwoPortAbcd& rhs);

// Lossless line of impedance z0 and electrical length theta (radians).
TwoPortAbcd abcd_line(double z0, double electrical_length);

// Shunt admittance y across the line.
TwoPortAbcd abcd_shunt(Complex y);

// Left-to-right product. Throws InvalidInput on an empty list.
TwoPortAbcd cascade(std::span<const TwoPortAbcd> elements);
TwoPortAbcd cascade(std::initializer_list<TwoPortAbcd> elements);

struct OpenCircuit {};
using Termination = std::variant<Complex, OpenCircuit>;

// Zin = (a ZL + b) / (c ZL + d); an open circuit gives a / c.
// Throws NumericalError when the denominator vanishes.
Complex input_impedance(const TwoPortAbcd& m, const Termination& load);

// Ladder elements, listed from the feed port outward.
struct PatchShunt {
    RlcLoad load;
};
struct LineSection {
    double z0 = 0.0;
    double length = 0.0;
    double eps_eff = 1.0;
};
struct ShuntImpedance {
    Complex z;
};
using LadderElement = std::variant<PatchShunt, LineSection, ShuntImpedance>;

// Quarter-wave transformer between the reference plane and the ladder.
struct MatchingTransformer {
    double z0 = 0.0;
    double width = 0.0;
    double length = 0.0;
    double eps_eff = 1.0;
    double residual_reactance = 0.0;  // Im(Zin) left untouched at f0
};

struct LadderModel {
    std::vector<LadderElement> elements;
    double reference_impedance = 50.0;
    std::optional<MatchingTransformer> transformer;

    std::size_t patch_count() const;
    // Chain matrix at one frequency, transformer first when present.
    TwoPortAbcd abcd(double frequency_hz) const;
    // Far end is open beyond the last element.
    Complex input_impedance(double frequency_hz) const;
    // Complex voltage across each patch for 1 V at the reference plane,
    // in feed-to-far-end order.
    std::vector<Complex> patch_voltages(double frequency_hz) const;
};

// Series-fed array: N patches (from analyze_patch at the geometry's W, L)
// joined by N-1 interconnects of FL x FW. Throws GeometryInfeasible when
// N L + (N-1) FL exceeds the ground length.
LadderModel build_series_fed_array(const ArrayGeometry& g, const Substrate& s);

struct BandEdges {
    double lower_hz = 0.0;
    double upper_hz = 0.0;
    bool lower_truncated = false;  // band touches the sweep start
    bool upper_truncated = false;  // band touches the sweep stop

    double bandwidth_hz() const { return upper_hz - lower_hz; }
    bool truncated() const { return lower_truncated || upper_truncated; }
};

struct FrequencySweep {
    std::vector<double> frequencies;
    std::vector<Complex> s11;
    double reference_impedance = 50.0;
    double f_at_min = 0.0;
    double min_s11_db = 0.0;
    std::optional<BandEdges> band_edges_10db;

    std::vector<double> s11_db() const;
};

// Uniform n_points grid over [f_start, f_stop]. Frequency points are
// evaluated in parallel (threads = 0: all cores); results are ordered by
// frequency. Numerical failures carry the offending frequency.
FrequencySweep s11_sweep(const LadderModel& model, double f_start_hz, double f_stop_hz,
                         std::size_t n_points, unsigned threads = 0);

// Builds a sweep from already computed samples and fills in its metrics.
FrequencySweep make_sweep(std::vector<double> frequencies, std::vector<Complex> s11,
                          double reference_impedance = 50.0);

// Global minimum and the contiguous -10 dB band around it; band edges are
// linearly interpolated on dB between adjacent samples.
void compute_sweep_metrics(FrequencySweep& sweep);

// Quarter-wave transformer z0t = sqrt(Re(Zin) Zref), length lambda_g/4 at f0.
MatchingTransformer synthesize_match(Complex z_in_at_f0, double z_ref, double f0_hz,
                                     const Substrate& s);

}  // namespace patcharray
