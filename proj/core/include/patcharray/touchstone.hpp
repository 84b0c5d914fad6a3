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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "patcharray/media.hpp"

namespace patcharray {

struct FrequencySweep;

// One-port Touchstone v1 contents.
struct TouchstoneData {
    std::vector<double> frequencies;  // Hz
    std::vector<Complex> s11;
    double reference_impedance = 50.0;
};

struct TouchstoneHeader {
    std::string tool = "patcharray";
    std::optional<std::uint64_t> geometry_hash;
};

// "# GHz S RI R <Zref>" followed by "f re im" rows, 9 significant digits,
// LF endings, '!' comment header. Throws InvalidInput on an empty sweep.
std::string format_touchstone(const FrequencySweep& sweep, const TouchstoneHeader& header = {});
void write_touchstone(const FrequencySweep& sweep, const std::filesystem::path& path,
                      const TouchstoneHeader& header = {});

// Reads one-port files with Hz/kHz/MHz/GHz units and RI, MA or DB data.
TouchstoneData parse_touchstone(const std::string& text);
TouchstoneData read_touchstone(const std::filesystem::path& path);

}  // namespace patcharray
