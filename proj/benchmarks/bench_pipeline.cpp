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

#include <benchmark/benchmark.h>

#include "patcharray/geometry.hpp"
#include "patcharray/network.hpp"
#include "patcharray/patch.hpp"
#include "patcharray/radiation.hpp"
#include "patcharray/report.hpp"

namespace {

using namespace patcharray;

void BM_SlotConductances(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(slot_conductances(5.89e-3, 3.85e-3, 18e9));
}
BENCHMARK(BM_SlotConductances);

void BM_LadderSweep(benchmark::State& state) {
    const ArrayGeometry g = reference_geometry();
    const LadderModel m = build_series_fed_array(g, substrate_of(g));
    const auto points = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(s11_sweep(m, 16e9, 20e9, points, 1));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LadderSweep)->Arg(201)->Arg(2001);

void BM_ArrayFactor(benchmark::State& state) {
    const ExcitationSet ex{std::vector<Complex>(6, 1.0), 4.85e-3, 0.0};
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(array_factor(ex, 18e9, t, 0.3));
        t = t > 1.5 ? 0.0 : t + 1e-3;
    }
}
BENCHMARK(BM_ArrayFactor);

void BM_TotalPattern(benchmark::State& state) {
    const ArrayGeometry g = reference_geometry();
    const Substrate s = substrate_of(g);
    const ExcitationSet ex = uniform_excitation(g);
    for (auto _ : state) benchmark::DoNotOptimize(total_pattern(g, s, ex, 18e9, {}, 1));
}
BENCHMARK(BM_TotalPattern)->Unit(benchmark::kMillisecond);

void BM_Directivity(benchmark::State& state) {
    const ArrayGeometry g = reference_geometry();
    const RadiationPattern p = total_pattern(g, substrate_of(g), uniform_excitation(g), 18e9);
    for (auto _ : state) benchmark::DoNotOptimize(directivity(p));
}
BENCHMARK(BM_Directivity)->Unit(benchmark::kMicrosecond);

void BM_Report(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_report(reference_geometry(), 1));
}
BENCHMARK(BM_Report)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
