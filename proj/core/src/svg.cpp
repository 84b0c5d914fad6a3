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

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "patcharray/errors.hpp"
#include "patcharray/network.hpp"
#include "patcharray/plot.hpp"
#include "patcharray/radiation.hpp"

namespace patcharray {

namespace {

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Tick spacing from {1, 2, 5} x 10^k giving roughly `target` intervals.
double nice_step(double span, int target) {
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0})
        if (m * mag >= raw) return m * mag;
    return 10.0 * mag;
}

struct Axis {
    double lo;
    double hi;
    std::string label;
};

std::string render_xy(std::span<const double> xs, std::span<const double> ys, Axis x, Axis y,
                      const PlotStyle& style) {
    if (xs.empty() || xs.size() != ys.size()) throw InvalidInput("nothing to plot");
    if (!(x.hi > x.lo)) x.hi = x.lo + 1.0;
    if (!(y.hi > y.lo)) y.hi = y.lo + 1.0;

    const double left = 70, right = 20, top = 40, bottom = 55;
    const double pw = style.width - left - right;
    const double ph = style.height - top - bottom;
    auto px = [&](double v) { return left + (v - x.lo) / (x.hi - x.lo) * pw; };
    auto py = [&](double v) {
        v = std::clamp(v, y.lo, y.hi);
        return top + (y.hi - v) / (y.hi - y.lo) * ph;
    };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
        "viewBox=\"0 0 {} {}\">\n",
        style.width, style.height, style.width, style.height);
    out += "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!style.title.empty())
        out += fmt::format("<text x=\"{:.2f}\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
                           "font-size=\"15\">{}</text>\n",
                           left + pw / 2, escape_xml(style.title));

    out += "<g stroke=\"#dddddd\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"11\">\n";
    const double xstep = nice_step(x.hi - x.lo, 8);
    for (double v = std::ceil(x.lo / xstep) * xstep; v <= x.hi + 1e-9 * xstep; v += xstep) {
        out += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\"/>\n", px(v), top,
                           top + ph);
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\" stroke=\"none\" "
                           "fill=\"black\">{:g}</text>\n",
                           px(v), top + ph + 16, std::abs(v) < 1e-12 * xstep ? 0.0 : v);
    }
    const double ystep = nice_step(y.hi - y.lo, 6);
    for (double v = std::ceil(y.lo / ystep) * ystep; v <= y.hi + 1e-9 * ystep; v += ystep) {
        out += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\"/>\n", left, py(v),
                           left + pw);
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\" stroke=\"none\" "
                           "fill=\"black\">{:g}</text>\n",
                           left - 6, py(v) + 4, std::abs(v) < 1e-12 * ystep ? 0.0 : v);
    }
    out += "</g>\n";
    out += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"none\" "
                       "stroke=\"black\"/>\n",
                       left, top, pw, ph);
    out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\" font-family=\"sans-serif\" "
                       "font-size=\"13\">{}</text>\n",
                       left + pw / 2, static_cast<double>(style.height) - 12, escape_xml(x.label));
    out += fmt::format("<text x=\"18\" y=\"{0:.2f}\" text-anchor=\"middle\" font-family=\"sans-serif\" "
                       "font-size=\"13\" transform=\"rotate(-90 18 {0:.2f})\">{1}</text>\n",
                       top + ph / 2, escape_xml(y.label));

    out += "<polyline fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k > 0) out += ' ';
        out += fmt::format("{:.2f},{:.2f}", px(xs[k]), py(ys[k]));
    }
    out += "\"/>\n</svg>\n";
    return out;
}

}  // namespace

std::string render_svg(const FrequencySweep& sweep, const PlotStyle& style) {
    if (sweep.frequencies.empty()) throw InvalidInput("cannot plot an empty sweep");
    std::vector<double> ghz;
    ghz.reserve(sweep.frequencies.size());
    for (double f : sweep.frequencies) ghz.push_back(f * 1e-9);
    const std::vector<double> db = sweep.s11_db();

    const double lowest = *std::min_element(db.begin(), db.end());
    const double y_min = style.y_min_db.value_or(std::max(-60.0, 5.0 * std::floor(lowest / 5.0 - 1e-9)));
    const double y_max = style.y_max_db.value_or(0.0);
    PlotStyle s = style;
    if (s.title.empty()) s.title = "Reflection coefficient S11";
    return render_xy(ghz, db, {ghz.front(), ghz.back(), "Frequency (GHz)"}, {y_min, y_max, "|S11| (dB)"}, s);
}

std::string render_svg(const PatternCut& cut, const PlotStyle& style) {
    if (cut.intensity.empty()) throw InvalidInput("cannot plot an empty pattern cut");
    const std::vector<double> db = cut.levels_db();
    PlotStyle s = style;
    if (s.title.empty())
        s.title = cut.plane == CutPlane::e_plane ? "E-plane pattern (array axis)" : "H-plane pattern (transverse)";
    return render_xy(cut.angles_deg, db, {cut.angles_deg.front(), cut.angles_deg.back(), "Angle (deg)"},
                     {style.y_min_db.value_or(-40.0), style.y_max_db.value_or(0.0), "Relative intensity (dB)"}, s);
}

std::string format_cut_table(const PatternCut& cut) {
    const std::vector<double> db = cut.levels_db();
    std::string out = "# angle_deg\tlevel_db\n";
    for (std::size_t k = 0; k < db.size(); ++k) out += fmt::format("{:.2f}\t{:.4f}\n", cut.angles_deg[k], db[k]);
    return out;
}

}  // namespace patcharray
