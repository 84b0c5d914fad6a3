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
#include <string>

#include "patcharray/media.hpp"

namespace patcharray {

// One-to-one image of the array dimension table. Lengths in millimeters,
// frequency in gigahertz; converted to SI by the accessors below.
struct ArrayGeometry {
    double patch_length_mm = 0.0;
    double patch_width_mm = 0.0;
    double ground_length_mm = 0.0;
    double ground_width_mm = 0.0;
    double ground_thickness_mm = 0.0;
    double feed_length_mm = 0.0;
    double feed_width_mm = 0.0;
    double substrate_height_mm = 0.0;
    double rel_permittivity = 1.0;
    double loss_tangent = 0.0;
    int element_count = 1;
    double design_frequency_ghz = 0.0;

    bool operator==(const ArrayGeometry&) const = default;

    double patch_length() const { return patch_length_mm * 1e-3; }
    double patch_width() const { return patch_width_mm * 1e-3; }
    double feed_length() const { return feed_length_mm * 1e-3; }
    double feed_width() const { return feed_width_mm * 1e-3; }
    double design_frequency() const { return design_frequency_ghz * 1e9; }
    // Center-to-center element pitch, L + FL.
    double element_spacing() const { return (patch_length_mm + feed_length_mm) * 1e-3; }
    double span_mm() const {
        return element_count * patch_length_mm + (element_count - 1) * feed_length_mm;
    }
};

// The six-element 18 GHz reference array on RO3003.
ArrayGeometry reference_geometry();

// Throws ValidationError naming the field (or constraint) that fails.
const ArrayGeometry& validate_geometry(const ArrayGeometry& g);

// Substrate described by the geometry, with copper conductors.
Substrate substrate_of(const ArrayGeometry& g);

// Strict JSON document <-> geometry. Unknown keys, missing keys and wrong
// types are rejected; syntax errors raise ParseError with a line number.
ArrayGeometry parse_geometry(const std::string& text);
ArrayGeometry load_geometry(const std::filesystem::path& path);
std::string geometry_to_json(const ArrayGeometry& g);
void write_geometry(const ArrayGeometry& g, const std::filesystem::path& path);

// FNV-1a of the canonical JSON form; stable across runs and platforms.
std::uint64_t geometry_hash(const ArrayGeometry& g);

}  // namespace patcharray
