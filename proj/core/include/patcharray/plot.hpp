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
#include <string>

namespace patcharray {

struct FrequencySweep;
struct PatternCut;

struct PlotStyle {
    int width = 720;
    int height = 440;
    std::string title;
    // Visible dB range; samples below y_min are drawn on the bottom edge.
    std::optional<double> y_min_db;
    std::optional<double> y_max_db;
};

// SVG 1.1 line plots, one polyline per document with one point per
// sample. Output depends only on the inputs (byte-deterministic).
std::string render_svg(const FrequencySweep& sweep, const PlotStyle& style = {});
std::string render_svg(const PatternCut& cut, const PlotStyle& style = {});

// "angle_deg<TAB>level_db" rows after one "#" header line; levels are
// relative to the cut maximum.
std::string format_cut_table(const PatternCut& cut);

}  // namespace patcharray
