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

#include "patcharray/pipeline.hpp"

namespace patcharray {

AnalysisResult run_analysis(const ArrayGeometry& g, const SweepOptions& options) {
    validate_geometry(g);
    AnalysisResult r;
    r.geometry = g;
    r.substrate = substrate_of(g);
    r.patch = analyze_patch(g.patch_width(), g.patch_length(), r.substrate);
    r.model = build_series_fed_array(g, r.substrate);
    r.z_in_at_f0 = r.model.input_impedance(g.design_frequency());
    r.unmatched_sweep =
        s11_sweep(r.model, options.f_start_hz, options.f_stop_hz, options.points, options.threads);
    if (options.match) {
        r.model.transformer =
            synthesize_match(r.z_in_at_f0, r.model.reference_impedance, g.design_frequency(), r.substrate);
        r.matched_sweep =
            s11_sweep(r.model, options.f_start_hz, options.f_stop_hz, options.points, options.threads);
    }
    return r;
}

PatternResult run_pattern(const ArrayGeometry& g, const PatternOptions& options) {
    validate_geometry(g);
    const Substrate s = substrate_of(g);
    const double f0 = g.design_frequency();
    const PatchDesign patch = analyze_patch(g.patch_width(), g.patch_length(), s);

    PatternResult r;
    if (options.excitation == ExcitationKind::ladder)
        r.excitation = ladder_excitation(build_series_fed_array(g, s), f0, g.element_spacing());
    else
        r.excitation = uniform_excitation(g);

    r.pattern = total_pattern(g, s, r.excitation, f0, options.grid, options.threads);
    r.directivity = directivity(r.pattern);
    r.efficiency = patch.efficiency;
    r.gain_dbi = gain_dbi(r.directivity, r.efficiency);
    r.e_cut = extract_cut(r.pattern, CutPlane::e_plane);
    r.h_cut = extract_cut(r.pattern, CutPlane::h_plane);
    r.e_metrics = beam_metrics(r.e_cut);
    r.h_metrics = beam_metrics(r.h_cut);
    return r;
}

}  // namespace patcharray
