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

#include "patcharray/geometry.hpp"

#include <cmath>

#include "patcharray/errors.hpp"

namespace patcharray {

ArrayGeometry reference_geometry() {
    return ArrayGeometry{
        .patch_length_mm = 3.85,
        .patch_width_mm = 5.89,
        .ground_length_mm = 29.5,
        .ground_width_mm = 7.0,
        .ground_thickness_mm = 0.5,
        .feed_length_mm = 1.0,
        .feed_width_mm = 0.2,
        .substrate_height_mm = 1.574,
        .rel_permittivity = 3.0,
        .loss_tangent = 0.0009,
        .element_count = 6,
        .design_frequency_ghz = 18.0,
    };
}

namespace {

void require_positive(double v, const char* field) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError(field, "must be > 0");
}

}  // namespace

const ArrayGeometry& validate_geometry(const ArrayGeometry& g) {
    require_positive(g.patch_length_mm, "patch_length_mm");
    require_positive(g.patch_width_mm, "patch_width_mm");
    require_positive(g.ground_length_mm, "ground_length_mm");
    require_positive(g.ground_width_mm, "ground_width_mm");
    if (!(g.ground_thickness_mm >= 0.0) || !std::isfinite(g.ground_thickness_mm))
        throw ValidationError("ground_thickness_mm", "must be >= 0");
    require_positive(g.feed_length_mm, "feed_length_mm");
    require_positive(g.feed_width_mm, "feed_width_mm");
    require_positive(g.substrate_height_mm, "substrate_height_mm");
    if (!(g.rel_permittivity >= 1.0)) throw ValidationError("rel_permittivity", "must be >= 1");
    if (!(g.loss_tangent >= 0.0)) throw ValidationError("loss_tangent", "must be >= 0");
    if (g.element_count < 1) throw ValidationError("element_count", "must be >= 1");
    require_positive(g.design_frequency_ghz, "design_frequency_ghz");
    // Small slack so a table value that exactly fills the board survives
    // its decimal round trip.
    if (g.span_mm() > g.ground_length_mm * (1.0 + 1e-12))
        throw ValidationError("ground_length_mm",
                              "element_count*patch_length_mm + (element_count-1)*feed_length_mm "
                              "exceeds ground_length_mm");
    if (g.patch_width_mm > g.ground_width_mm)
        throw ValidationError("ground_width_mm", "patch_width_mm exceeds ground_width_mm");
    return g;
}

Substrate substrate_of(const ArrayGeometry& g) {
    return validate_substrate(Substrate{
        .rel_permittivity = g.rel_permittivity,
        .loss_tangent = g.loss_tangent,
        .height = g.substrate_height_mm * 1e-3,
        .conductor_thickness = g.ground_thickness_mm * 1e-3,
        .conductivity = constants::copper_conductivity,
    });
}

std::uint64_t geometry_hash(const ArrayGeometry& g) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : geometry_to_json(g)) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace patcharray
