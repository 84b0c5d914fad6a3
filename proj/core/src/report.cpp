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

#include "patcharray/report.hpp"

#include <fmt/format.h>

#include <cmath>

#include "patcharray/pipeline.hpp"

namespace patcharray {

namespace {

constexpr const char* kAbstract = "reference design, abstract";
constexpr const char* kS11Results = "reference design, reflection-coefficient results";
constexpr const char* kComparisonTable = "reference design, comparison table";

}  // namespace

ComparisonReport build_report(const ArrayGeometry& g, unsigned threads) {
    SweepOptions sweep_opts;
    sweep_opts.match = true;
    sweep_opts.threads = threads;
    const AnalysisResult analysis = run_analysis(g, sweep_opts);
    const FrequencySweep& sweep = analysis.sweep();

    PatternOptions pattern_opts;
    pattern_opts.threads = threads;
    const PatternResult array = run_pattern(g, pattern_opts);

    ArrayGeometry single = g;
    single.element_count = 1;
    const PatternResult patch = run_pattern(single, pattern_opts);

    ComparisonReport r;
    r.patch_resonance_hz = analysis.patch.f0;
    r.matched_min_s11_db = sweep.min_s11_db;
    r.unmatched_min_s11_db = analysis.unmatched_sweep.min_s11_db;
    r.array_directivity_dbi = 10.0 * std::log10(array.directivity);
    r.array_gain_dbi = array.gain_dbi;
    r.single_patch_gain_dbi = patch.gain_dbi;
    r.efficiency = array.efficiency;
    r.hpbw_e_deg = array.e_metrics.hpbw_deg;
    r.hpbw_h_deg = array.h_metrics.hpbw_deg;

    std::string bw_note;
    double bw_ghz = 0.0;
    if (sweep.band_edges_10db) {
        bw_ghz = sweep.band_edges_10db->bandwidth_hz() * 1e-9;
        if (sweep.band_edges_10db->truncated()) bw_note = "lower bound: band extends past the sweep";
    } else {
        bw_note = "S11 never reaches -10 dB";
    }

    r.rows = {
        {"resonant frequency (S11 minimum)", "GHz", sweep.f_at_min * 1e-9, 18.0, kAbstract, ""},
        {"return loss (min S11)", "dB", sweep.min_s11_db, -16.0, kComparisonTable, ""},
        {"-10 dB impedance bandwidth", "GHz", bw_ghz, 0.7, kAbstract, bw_note},
        {"-10 dB impedance bandwidth", "GHz", bw_ghz, 1.0, kS11Results, bw_note},
        {"array gain", "dBi", array.gain_dbi, 7.51, kAbstract, ""},
        {"array gain", "dBi", array.gain_dbi, 7.91, kComparisonTable, ""},
    };
    return r;
}

std::string format_report(const ComparisonReport& r) {
    std::string out;
    out += fmt::format("{:<34} {:>10} {:>10} {:>10}  {}\n", "metric", "computed", "published", "deviation",
                       "source");
    for (const auto& row : r.rows) {
        out += fmt::format("{:<34} {:>10.3f} {:>10.3f} {:>+10.3f}  {} [{}]", row.metric, row.computed,
                           row.published, row.deviation(), row.citation, row.unit);
        if (!row.note.empty()) out += fmt::format(" ({})", row.note);
        out += '\n';
    }
    out += '\n';
    out += fmt::format("single-patch resonance (line model): {:.4f} GHz\n", r.patch_resonance_hz * 1e-9);
    out += fmt::format("min S11 unmatched / matched: {:.2f} dB / {:.2f} dB\n", r.unmatched_min_s11_db,
                       r.matched_min_s11_db);
    out += fmt::format("radiation efficiency: {:.4f}\n", r.efficiency);
    out += fmt::format("array directivity: {:.3f} dBi\n", r.array_directivity_dbi);
    out += fmt::format("array gain {:.3f} dBi vs single patch {:.3f} dBi: {}\n", r.array_gain_dbi,
                       r.single_patch_gain_dbi, r.array_gain_exceeds_patch() ? "PASS" : "FAIL");
    out += fmt::format("fan beam HPBW array axis {:.2f} deg < transverse {:.2f} deg: {}\n", r.hpbw_e_deg,
                       r.hpbw_h_deg, r.fan_beam() ? "PASS" : "FAIL");
    return out;
}

}  // namespace patcharray
