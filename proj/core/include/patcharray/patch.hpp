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

#include "patcharray/media.hpp"

namespace patcharray {

// Transmission-line model of an edge-fed rectangular patch: a resonant
// line section of length L terminated by two radiating slots of width W.
// Resonant length runs along x, slot width along y.

struct SlotConductances {
    double g1 = 0.0;   // self conductance of one radiating slot, S
    double g12 = 0.0;  // mutual conductance between the two slots, S
};

struct QualityFactors {
    double q_rad = 0.0;
    double q_cond = 0.0;
    double q_diel = 0.0;  // +inf for a lossless dielectric
    double q_total = 0.0;
    double efficiency = 0.0;  // q_total / q_rad
};

// Lumped parallel-resonant stand-in for one patch seen at its edge.
struct RlcLoad {
    double f0 = 0.0;
    double rin = 0.0;
    double q_total = 0.0;
};

struct PatchDesign {
    double width = 0.0;
    double length = 0.0;
    double eps_eff = 1.0;
    double delta_l = 0.0;
    double f0 = 0.0;
    double g1 = 0.0;
    double g12 = 0.0;
    double rin_edge = 0.0;
    double q_rad = 0.0;
    double q_cond = 0.0;
    double q_diel = 0.0;
    double q_total = 0.0;
    double efficiency = 0.0;

    double effective_length() const { return length + 2.0 * delta_l; }
    RlcLoad rlc() const { return {f0, rin_edge, q_total}; }
};

enum class Fringing { hammerstad, none };

// W = c0 / (2 f0) * sqrt(2 / (er + 1)).
double patch_width(double f0_hz, double eps_r);

// Open-end fringing extension per radiating edge.
double length_extension(double width, const Substrate& s);

// L = c0 / (2 f0 sqrt(eps_eff)) - 2 dL with eps_eff and dL taken at the
// synthesized width. Throws DesignInfeasible for L <= 0 or when dL
// reaches a quarter of the half-wave length.
double patch_length(double f0_hz, const Substrate& s, Fringing fringing = Fringing::hammerstad);

// f0 = c0 / (2 (L + 2 dL) sqrt(eps_eff)).
double resonant_frequency(double length, double width, const Substrate& s);

// Two-slot cavity conductances by adaptive Gauss-Kronrod quadrature
// (relative tolerance 1e-8). Throws NumericalError if the error estimate
// is not met.
SlotConductances slot_conductances(double width, double length, double f0_hz);

// Rin = 1 / (2 (G1 + G12)), in-phase slots.
double edge_resistance(double g1, double g12);

// g_total is G1 + G12.
QualityFactors quality_factors(double width, double length, const Substrate& s, double f0_hz,
                               double g_total);

// Z(f) = Rin / (1 + j Q (f/f0 - f0/f)).
Complex rlc_impedance(double frequency_hz, const RlcLoad& load);

// Full electrical model of a patch with the given dimensions.
PatchDesign analyze_patch(double width, double length, const Substrate& s);

// Synthesize W and L for f0, then analyze.
PatchDesign design_patch(double f0_hz, const Substrate& s);

}  // namespace patcharray
