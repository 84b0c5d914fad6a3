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

#include <string>
#include <vector>

#include "patcharray/geometry.hpp"

namespace patcharray {

// One computed-versus-published comparison. Every published value carries
// the citation of where it was stated.
struct ComparisonRow {
    std::string metric;
    std::string unit;
    double computed = 0.0;
    double published = 0.0;
    std::string citation;
    std::string note;

    double deviation() const { return computed - published; }
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;

    // Pipeline values behind the rows, plus the structural checks.
    double patch_resonance_hz = 0.0;
    double matched_min_s11_db = 0.0;
    double unmatched_min_s11_db = 0.0;
    double array_directivity_dbi = 0.0;
    double array_gain_dbi = 0.0;
    double single_patch_gain_dbi = 0.0;
    double efficiency = 0.0;
    double hpbw_e_deg = 0.0;  // array axis
    double hpbw_h_deg = 0.0;  // transverse

    bool array_gain_exceeds_patch() const { return array_gain_dbi > single_patch_gain_dbi; }
    bool fan_beam() const { return hpbw_e_deg < hpbw_h_deg; }
};

// Full pipeline: matched ladder sweep (16-20 GHz, 2001 points) and the
// uniform-excitation array and single-patch patterns.
ComparisonReport build_report(const ArrayGeometry& g, unsigned threads = 0);

std::string format_report(const ComparisonReport& report);

}  // namespace patcharray
