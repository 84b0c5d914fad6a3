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

#include "patcharray/geometry.hpp"
#include "patcharray/network.hpp"
#include "patcharray/patch.hpp"
#include "patcharray/radiation.hpp"

namespace patcharray {

struct SweepOptions {
    double f_start_hz = 16e9;
    double f_stop_hz = 20e9;
    std::size_t points = 2001;
    bool match = false;
    unsigned threads = 0;
};

struct AnalysisResult {
    ArrayGeometry geometry;
    Substrate substrate;
    PatchDesign patch;
    LadderModel model;              // carries the transformer when matched
    Complex z_in_at_f0;             // unmatched ladder at the design frequency
    FrequencySweep unmatched_sweep;
    std::optional<FrequencySweep> matched_sweep;

    const FrequencySweep& sweep() const { return matched_sweep ? *matched_sweep : unmatched_sweep; }
};

// Ladder model, unmatched sweep and, with options.match, the quarter-wave
// match at the design frequency plus the matched sweep.
AnalysisResult run_analysis(const ArrayGeometry& g, const SweepOptions& options = {});

enum class ExcitationKind { uniform, ladder };

struct PatternOptions {
    ExcitationKind excitation = ExcitationKind::uniform;
    AngularGrid grid;
    unsigned threads = 0;
};

struct PatternResult {
    ExcitationSet excitation;
    RadiationPattern pattern;
    double directivity = 0.0;
    double efficiency = 0.0;
    double gain_dbi = 0.0;
    PatternCut e_cut;
    PatternCut h_cut;
    BeamMetrics e_metrics;
    BeamMetrics h_metrics;
};

// Array pattern at the design frequency; gain uses the patch efficiency.
PatternResult run_pattern(const ArrayGeometry& g, const PatternOptions& options = {});

}  // namespace patcharray
