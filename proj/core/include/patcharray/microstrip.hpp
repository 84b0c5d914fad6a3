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

#include "patcharray/media.hpp"

namespace patcharray {

// Quasi-static microstrip, zero strip thickness, no dispersion
// (Hammerstad / Hammerstad-Jensen closed forms).

double eps_eff(double width, const Substrate& s);

double z0_microstrip(double width, const Substrate& s);

// Strip width realizing z0_target, by bisection on log(W/h) over
// [1e-3, 1e3]. Result satisfies |z0_microstrip(W) - target| <= 0.01 ohm.
// Throws OutOfRange outside 10..250 ohm or outside what the substrate
// can realize on that bracket, ConvergenceError after 200 halvings.
double synthesize_width(double z0_target, const Substrate& s);

double guided_wavelength(double frequency_hz, double width, const Substrate& s);

struct MicrostripLine {
    double width = 0.0;
    double length = 0.0;
    double eps_eff = 1.0;
    double z0 = 0.0;
};

MicrostripLine make_microstrip_line(double width, double length, const Substrate& s);

}  // namespace patcharray
