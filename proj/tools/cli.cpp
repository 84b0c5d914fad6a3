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

#include "cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <ostream>

#include "patcharray/atomic_file.hpp"
#include "patcharray/errors.hpp"
#include "patcharray/geometry.hpp"
#include "patcharray/microstrip.hpp"
#include "patcharray/patch.hpp"
#include "patcharray/pipeline.hpp"
#include "patcharray/plot.hpp"
#include "patcharray/report.hpp"
#include "patcharray/touchstone.hpp"

namespace patcharray::cli {

namespace {

namespace fs = std::filesystem;

struct DesignArgs {
    double f0_ghz = 0.0;
    double er = 0.0;
    double h_mm = 0.0;
    double tand = 0.0009;
    int elements = 6;
    double feed_length_mm = 1.0;
    double feed_width_mm = 0.2;
    double ground_margin_mm = 0.7;
    std::string out = "design.json";
};

struct AnalyzeArgs {
    std::string geometry;
    double fstart_ghz = 16.0;
    double fstop_ghz = 20.0;
    std::size_t points = 2001;
    bool match = false;
    std::string out = ".";
};

struct PatternArgs {
    std::string geometry;
    std::string cut = "both";
    std::string excitation = "uniform";
    std::string out = ".";
};

double round_um(double mm) { return std::round(mm * 1000.0) / 1000.0; }

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory " + dir.string());
}

int cmd_design(const DesignArgs& a, std::ostream& out) {
    const Substrate s = validate_substrate({
        .rel_permittivity = a.er,
        .loss_tangent = a.tand,
        .height = a.h_mm * 1e-3,
        .conductor_thickness = 0.0,
        .conductivity = constants::copper_conductivity,
    });
    const double f0 = a.f0_ghz * 1e9;
    const PatchDesign d = design_patch(f0, s);

    out << fmt::format("patch design at {:.4f} GHz (er = {:g}, tan d = {:g}, h = {:g} mm)\n", a.f0_ghz, a.er,
                       a.tand, a.h_mm);
    out << fmt::format("  W         = {:.2f} mm\n", d.width * 1e3);
    out << fmt::format("  L         = {:.2f} mm\n", d.length * 1e3);
    out << fmt::format("  eps_eff   = {:.4f}\n", d.eps_eff);
    out << fmt::format("  delta_L   = {:.4f} mm\n", d.delta_l * 1e3);
    out << fmt::format("  f0        = {:.4f} GHz\n", d.f0 * 1e-9);
    out << fmt::format("  G1        = {:.6e} S\n", d.g1);
    out << fmt::format("  G12       = {:.6e} S\n", d.g12);
    out << fmt::format("  Rin(edge) = {:.2f} ohm\n", d.rin_edge);
    out << fmt::format("  Q rad/cond/diel/total = {:.3f} / {:.1f} / {:.1f} / {:.3f}\n", d.q_rad, d.q_cond,
                       d.q_diel, d.q_total);
    out << fmt::format("  efficiency = {:.4f}\n", d.efficiency);

    ArrayGeometry g{
        .patch_length_mm = round_um(d.length * 1e3),
        .patch_width_mm = round_um(d.width * 1e3),
        .ground_length_mm = 0.0,
        .ground_width_mm = 0.0,
        .ground_thickness_mm = 0.0,
        .feed_length_mm = a.feed_length_mm,
        .feed_width_mm = a.feed_width_mm,
        .substrate_height_mm = a.h_mm,
        .rel_permittivity = a.er,
        .loss_tangent = a.tand,
        .element_count = a.elements,
        .design_frequency_ghz = a.f0_ghz,
    };
    g.ground_length_mm = round_um(g.span_mm() + 2.0 * a.ground_margin_mm);
    g.ground_width_mm = round_um(g.patch_width_mm + 2.0 * a.ground_margin_mm);
    write_geometry(g, a.out);
    out << fmt::format("geometry written to {}\n", a.out);
    return kSuccess;
}

int cmd_analyze(const AnalyzeArgs& a, unsigned threads, std::ostream& out) {
    const ArrayGeometry g = load_geometry(a.geometry);
    SweepOptions opts;
    opts.f_start_hz = a.fstart_ghz * 1e9;
    opts.f_stop_hz = a.fstop_ghz * 1e9;
    opts.points = a.points;
    opts.match = a.match;
    opts.threads = threads;
    const AnalysisResult r = run_analysis(g, opts);
    const FrequencySweep& sweep = r.sweep();

    out << fmt::format("ladder: {} patches, Rin(edge) {:.2f} ohm, Q {:.3f}, patch f0 {:.4f} GHz\n",
                       r.model.patch_count(), r.patch.rin_edge, r.patch.q_total, r.patch.f0 * 1e-9);
    out << fmt::format("Zin at {:.3f} GHz (unmatched): {:.3f} {:+.3f}j ohm\n", g.design_frequency_ghz,
                       r.z_in_at_f0.real(), r.z_in_at_f0.imag());
    if (r.model.transformer) {
        const auto& t = *r.model.transformer;
        out << fmt::format("quarter-wave match: Z0 {:.3f} ohm, W {:.4f} mm, length {:.4f} mm, "
                           "residual reactance {:+.3f} ohm\n",
                           t.z0, t.width * 1e3, t.length * 1e3, t.residual_reactance);
        out << fmt::format("unmatched min S11: {:.3f} dB at {:.4f} GHz\n", r.unmatched_sweep.min_s11_db,
                           r.unmatched_sweep.f_at_min * 1e-9);
    }
    out << fmt::format("resonance (min S11): {:.4f} GHz\n", sweep.f_at_min * 1e-9);
    out << fmt::format("min S11: {:.3f} dB\n", sweep.min_s11_db);
    if (sweep.band_edges_10db) {
        const BandEdges& b = *sweep.band_edges_10db;
        out << fmt::format("-10 dB band: {:.4f} - {:.4f} GHz, bandwidth {:.1f} MHz{}\n", b.lower_hz * 1e-9,
                           b.upper_hz * 1e-9, b.bandwidth_hz() * 1e-6,
                           b.truncated() ? " (band extends past the sweep)" : "");
    } else {
        out << "-10 dB band: none (S11 stays above -10 dB)\n";
    }

    const fs::path dir(a.out);
    ensure_dir(dir);
    write_touchstone(sweep, dir / "array.s1p", {.tool = "patcharray analyze", .geometry_hash = geometry_hash(g)});
    write_file_atomic(dir / "s11.svg", render_svg(sweep));
    out << fmt::format("wrote {} and {}\n", (dir / "array.s1p").string(), (dir / "s11.svg").string());
    return kSuccess;
}

void print_metrics(std::ostream& out, const char* name, const BeamMetrics& m) {
    out << fmt::format("{}: HPBW {:.2f} deg, peak {:+.2f} deg, SLL {}\n", name, m.hpbw_deg, m.peak_direction_deg,
                       m.sll_db ? fmt::format("{:.2f} dB", *m.sll_db) : std::string("none"));
}

int cmd_pattern(const PatternArgs& a, unsigned threads, std::ostream& out) {
    const ArrayGeometry g = load_geometry(a.geometry);
    PatternOptions opts;
    opts.excitation = a.excitation == "ladder" ? ExcitationKind::ladder : ExcitationKind::uniform;
    opts.threads = threads;
    const PatternResult r = run_pattern(g, opts);

    out << fmt::format("excitation: {} ({} elements, pitch {:.3f} mm)\n", a.excitation,
                       r.excitation.amplitudes.size(), r.excitation.spacing * 1e3);
    out << fmt::format("directivity: {:.3f} dBi ({:.4f})\n", 10.0 * std::log10(r.directivity), r.directivity);
    out << fmt::format("efficiency: {:.4f}\n", r.efficiency);
    out << fmt::format("gain: {:.3f} dBi\n", r.gain_dbi);

    const fs::path dir(a.out);
    ensure_dir(dir);
    auto emit = [&](const PatternCut& cut, const BeamMetrics& m, const char* tag, const char* name) {
        print_metrics(out, name, m);
        write_file_atomic(dir / fmt::format("pattern_{}.tsv", tag), format_cut_table(cut));
        write_file_atomic(dir / fmt::format("pattern_{}.svg", tag), render_svg(cut));
    };
    if (a.cut != "h") emit(r.e_cut, r.e_metrics, "e", "E-plane (array axis)");
    if (a.cut != "e") emit(r.h_cut, r.h_metrics, "h", "H-plane (transverse)");
    return kSuccess;
}

int cmd_report(const std::string& path, unsigned threads, std::ostream& out) {
    const ArrayGeometry g = load_geometry(path);
    out << format_report(build_report(g, threads));
    return kSuccess;
}

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

int exit_code_for(const Error& e) {
    if (dynamic_cast<const IoError*>(&e)) return kIo;
    if (dynamic_cast<const ConvergenceError*>(&e) || dynamic_cast<const NumericalError*>(&e) ||
        dynamic_cast<const MetricUndefined*>(&e))
        return kNumerical;
    return kUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Design and analysis of series-fed microstrip patch arrays", "patcharray"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "Cap on worker threads (0 = all cores)");

    DesignArgs design;
    auto* design_cmd = app.add_subcommand("design", "Synthesize patch dimensions and write a geometry file");
    design_cmd->add_option("--f0-ghz", design.f0_ghz, "Design frequency (GHz)")->required();
    design_cmd->add_option("--er", design.er, "Relative permittivity")->required();
    design_cmd->add_option("--h-mm", design.h_mm, "Substrate height (mm)")->required();
    design_cmd->add_option("--tand", design.tand, "Loss tangent")->capture_default_str();
    design_cmd->add_option("--elements", design.elements, "Element count")->capture_default_str();
    design_cmd->add_option("--feed-length-mm", design.feed_length_mm, "Interconnect length")->capture_default_str();
    design_cmd->add_option("--feed-width-mm", design.feed_width_mm, "Interconnect width")->capture_default_str();
    design_cmd->add_option("--ground-margin-mm", design.ground_margin_mm, "Ground margin around the patches")
        ->capture_default_str();
    design_cmd->add_option("--out", design.out, "Geometry file to write")->capture_default_str();

    AnalyzeArgs analyze;
    auto* analyze_cmd = app.add_subcommand("analyze", "Sweep S11 of the series-fed ladder model");
    analyze_cmd->add_option("geometry", analyze.geometry, "Geometry JSON file")->required();
    analyze_cmd->add_option("--fstart-ghz", analyze.fstart_ghz)->capture_default_str();
    analyze_cmd->add_option("--fstop-ghz", analyze.fstop_ghz)->capture_default_str();
    analyze_cmd->add_option("--points", analyze.points)->capture_default_str();
    analyze_cmd->add_flag("--match", analyze.match, "Insert a quarter-wave 50 ohm transformer");
    analyze_cmd->add_option("--out", analyze.out, "Output directory")->capture_default_str();

    PatternArgs pattern;
    auto* pattern_cmd = app.add_subcommand("pattern", "Far-field pattern, directivity and beam metrics");
    pattern_cmd->add_option("geometry", pattern.geometry, "Geometry JSON file")->required();
    pattern_cmd->add_option("--cut", pattern.cut, "Principal cut to export (e, h; default both)")
        ->check(CLI::IsMember({"e", "h", "both"}));
    pattern_cmd->add_option("--excitation", pattern.excitation)
        ->check(CLI::IsMember({"uniform", "ladder"}))
        ->capture_default_str();
    pattern_cmd->add_option("--out", pattern.out, "Output directory")->capture_default_str();

    std::string report_path;
    auto* report_cmd = app.add_subcommand("report", "Compare the full pipeline with the published figures");
    report_cmd->add_option("geometry", report_path, "Geometry JSON file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error[usage]: " << one_line(e.what()) << '\n';
        err << app.help();
        return kUsage;
    }

    try {
        if (*design_cmd) return cmd_design(design, out);
        if (*analyze_cmd) return cmd_analyze(analyze, threads, out);
        if (*pattern_cmd) return cmd_pattern(pattern, threads, out);
        if (*report_cmd) return cmd_report(report_path, threads, out);
    } catch (const Error& e) {
        err << "error[" << e.kind() << "]: " << one_line(e.what()) << '\n';
        return exit_code_for(e);
    } catch (const fs::filesystem_error& e) {
        err << "error[io]: " << one_line(e.what()) << '\n';
        return kIo;
    }
    return kUsage;
}

}  // namespace patcharray::cli
