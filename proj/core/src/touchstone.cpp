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

#include "patcharray/touchstone.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "patcharray/atomic_file.hpp"
#include "patcharray/errors.hpp"
#include "patcharray/network.hpp"

namespace patcharray {

std::string format_touchstone(const FrequencySweep& sweep, const TouchstoneHeader& header) {
    if (sweep.frequencies.empty() || sweep.frequencies.size() != sweep.s11.size())
        throw InvalidInput("cannot write an empty sweep");
    std::string out;
    out += fmt::format("! {} one-port S11\n", header.tool);
    if (header.geometry_hash) out += fmt::format("! geometry fnv1a64 {:016x}\n", *header.geometry_hash);
    out += fmt::format("# GHz S RI R {:.9g}\n", sweep.reference_impedance);
    for (std::size_t k = 0; k < sweep.frequencies.size(); ++k) {
        const Complex g = sweep.s11[k];
        out += fmt::format("{:.9g} {:.9g} {:.9g}\n", sweep.frequencies[k] * 1e-9, g.real(), g.imag());
    }
    return out;
}

void write_touchstone(const FrequencySweep& sweep, const std::filesystem::path& path,
                      const TouchstoneHeader& header) {
    write_file_atomic(path, format_touchstone(sweep, header));
}

TouchstoneData parse_touchstone(const std::string& text) {
    TouchstoneData data;
    double unit = 1e9;
    enum class Format { ri, ma, db } format = Format::ma;  // v1 default
    bool have_options = false;

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto bang = line.find('!'); bang != std::string::npos) line.erase(bang);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

        std::istringstream fields(line);
        if (line.find('#') != std::string::npos) {
            if (have_options) throw ParseError("duplicate option line", lineno);
            have_options = true;
            unit = 1e9;
            format = Format::ma;
            std::string tok;
            fields >> tok;  // '#'
            while (fields >> tok) {
                std::transform(tok.begin(), tok.end(), tok.begin(),
                               [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
                if (tok == "HZ") unit = 1.0;
                else if (tok == "KHZ") unit = 1e3;
                else if (tok == "MHZ") unit = 1e6;
                else if (tok == "GHZ") unit = 1e9;
                else if (tok == "RI") format = Format::ri;
                else if (tok == "MA") format = Format::ma;
                else if (tok == "DB") format = Format::db;
                else if (tok == "S") continue;
                else if (tok == "R") {
                    if (!(fields >> data.reference_impedance))
                        throw ParseError("missing reference impedance after R", lineno);
                } else {
                    throw ParseError("unsupported option '" + tok + "'", lineno);
                }
            }
            continue;
        }

        double f = 0.0, x = 0.0, y = 0.0;
        std::string extra;
        if (!(fields >> f >> x >> y) || (fields >> extra))
            throw ParseError("expected 'freq v1 v2' for a one-port row", lineno);
        Complex s;
        switch (format) {
            case Format::ri: s = {x, y}; break;
            case Format::ma: s = std::polar(x, y * std::numbers::pi / 180.0); break;
            case Format::db: s = std::polar(std::pow(10.0, x / 20.0), y * std::numbers::pi / 180.0); break;
        }
        if (!data.frequencies.empty() && !(f * unit > data.frequencies.back()))
            throw ParseError("frequencies must be strictly increasing", lineno);
        data.frequencies.push_back(f * unit);
        data.s11.push_back(s);
    }
    if (!have_options) throw ParseError("missing option line", lineno);
    return data;
}

TouchstoneData read_touchstone(const std::filesystem::path& path) {
    return parse_touchstone(read_file(path));
}

}  // namespace patcharray
