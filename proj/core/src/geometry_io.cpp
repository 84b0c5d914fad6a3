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

#include <algorithm>
#include <array>
#include <cmath>
#include <json.hpp>
#include <string_view>

#include "patcharray/atomic_file.hpp"
#include "patcharray/errors.hpp"
#include "patcharray/geometry.hpp"

namespace patcharray {

namespace {

using json = nlohmann::ordered_json;

// Field order mirrors the dimension table.
constexpr std::array<std::string_view, 12> kFields = {
    "patch_length_mm",     "patch_width_mm",   "ground_length_mm", "ground_width_mm",
    "ground_thickness_mm", "feed_length_mm",   "feed_width_mm",    "substrate_height_mm",
    "rel_permittivity",    "loss_tangent",     "element_count",    "design_frequency_ghz",
};

std::size_t line_of(const std::string& text, std::size_t byte) {
    const auto end = text.begin() + static_cast<std::ptrdiff_t>(std::min(byte, text.size()));
    return 1 + static_cast<std::size_t>(std::count(text.begin(), end, '\n'));
}

double number_field(const json& doc, std::string_view name) {
    const auto& v = doc.at(std::string(name));
    if (!v.is_number()) throw ValidationError(std::string(name), "must be a number");
    return v.get<double>();
}

}  // namespace

ArrayGeometry parse_geometry(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), line_of(text, e.byte == 0 ? 0 : e.byte - 1));
    }
    if (!doc.is_object()) throw ParseError("geometry document must be a single JSON object", 1);

    for (const auto& [key, value] : doc.items()) {
        if (std::find(kFields.begin(), kFields.end(), key) == kFields.end())
            throw ValidationError(key, "unknown field");
    }
    for (std::string_view f : kFields)
        if (!doc.contains(std::string(f))) throw ValidationError(std::string(f), "missing field " + std::string(f));

    const auto& n = doc.at("element_count");
    if (!n.is_number_integer()) throw ValidationError("element_count", "must be an integer");

    ArrayGeometry g{
        .patch_length_mm = number_field(doc, "patch_length_mm"),
        .patch_width_mm = number_field(doc, "patch_width_mm"),
        .ground_length_mm = number_field(doc, "ground_length_mm"),
        .ground_width_mm = number_field(doc, "ground_width_mm"),
        .ground_thickness_mm = number_field(doc, "ground_thickness_mm"),
        .feed_length_mm = number_field(doc, "feed_length_mm"),
        .feed_width_mm = number_field(doc, "feed_width_mm"),
        .substrate_height_mm = number_field(doc, "substrate_height_mm"),
        .rel_permittivity = number_field(doc, "rel_permittivity"),
        .loss_tangent = number_field(doc, "loss_tangent"),
        .element_count = n.get<int>(),
        .design_frequency_ghz = number_field(doc, "design_frequency_ghz"),
    };
    validate_geometry(g);
    return g;
}

ArrayGeometry load_geometry(const std::filesystem::path& path) {
    return parse_geometry(read_file(path));
}

std::string geometry_to_json(const ArrayGeometry& g) {
    json doc;
    doc["patch_length_mm"] = g.patch_length_mm;
    doc["patch_width_mm"] = g.patch_width_mm;
    doc["ground_length_mm"] = g.ground_length_mm;
    doc["ground_width_mm"] = g.ground_width_mm;
    doc["ground_thickness_mm"] = g.ground_thickness_mm;
    doc["feed_length_mm"] = g.feed_length_mm;
    doc["feed_width_mm"] = g.feed_width_mm;
    doc["substrate_height_mm"] = g.substrate_height_mm;
    doc["rel_permittivity"] = g.rel_permittivity;
    doc["loss_tangent"] = g.loss_tangent;
    doc["element_count"] = g.element_count;
    doc["design_frequency_ghz"] = g.design_frequency_ghz;
    return doc.dump(2) + "\n";
}

void write_geometry(const ArrayGeometry& g, const std::filesystem::path& path) {
    validate_geometry(g);
    write_file_atomic(path, geometry_to_json(g));
}

}  // namespace patcharray
