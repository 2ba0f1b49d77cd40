#include "goldbug/cli.hpp"

#include "goldbug/analysis.hpp"
#include "goldbug/json.hpp"
#include "goldbug/oracle.hpp"
#include "goldbug/render.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace goldbug::cli {

namespace {

using nlohmann::json;

// Bad flags, bad config, violated invariants: exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr const char* kDepthRejection =
    "hole depth is not modeled: whether the holes overlap is decided in plan view only "
    "(see README, \"Scope\")";

enum class Format { Text, Json };

std::string shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string fixed(double v, int digits) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
    return std::string(buf, res.ptr);
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

// "1595/456 ft (≈ 3.4978 ft)"
std::string feet_text(const Length& x) {
    return x.in_feet().str() + " ft (≈ " + x.in_feet().decimal(4) + " ft)";
}

// "250/91 ft (≈ 2.7473 ft, 2'9")"
std::string feet_inches_text(const Length& x) {
    std::string s = x.in_feet().str() + " ft (≈ " + x.in_feet().decimal(4) + " ft";
    if (!x.is_negative()) s += ", " + format_feet_inches(x, true);
    return s + ")";
}

// key = value lines; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    static const std::vector<std::string> known{"r", "L", "d", "E", "rA", "rB", "convention", "format"};
    std::map<std::string, std::string> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        const auto where = path + ":" + std::to_string(line_no);
        if (eq == std::string::npos) throw UsageError(where + ": expected 'key = value'");
        const auto key = trim(std::string_view(body).substr(0, eq));
        const auto value = trim(std::string_view(body).substr(eq + 1));
        if (key == "depth") throw UsageError(where + ": " + kDepthRejection);
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw UsageError(where + ": unknown key '" + key + "'");
        }
        out[key] = value;
    }
    return out;
}

// Scenario flags shared by the subcommands, resolved as
// command line > config file > built-in defaults.
struct ScenarioFlags {
    std::map<std::string, std::string> values;  // flag name (no dashes) -> text
    std::map<std::string, CLI::Option*> options;
    std::string format_text;
    CLI::Option* format_opt = nullptr;
    std::string config_path;
    CLI::Option* config_opt = nullptr;
    std::string depth;
    CLI::Option* depth_opt = nullptr;
    std::map<std::string, std::string> config;

    void attach(CLI::App* cmd, const std::vector<std::string>& names) {
        static const std::map<std::string, std::string> help{
            {"r", "trunk radius at the skull branch (e.g. 2in)"},
            {"L", "eye socket distance from the trunk (e.g. 3ft)"},
            {"d", "drop point separation (default 5/2in)"},
            {"E", "extension distance (default 50ft)"},
            {"rA", "first hole radius (default 2ft)"},
            {"rB", "second hole radius (default 2ft)"},
            {"convention", "from-drop-point (default) or from-trunk"},
        };
        for (const auto& n : names) options[n] = cmd->add_option("--" + n, values[n], help.at(n));
        format_opt = cmd->add_option("--format", format_text, "text (default) or json");
        config_opt = cmd->add_option("--config", config_path, "key = value config file (overrides GOLDBUG_CONFIG)");
        depth_opt = cmd->add_option("--depth", depth, "not supported");
    }

    void load(const Environment& env) {
        if (depth_opt && depth_opt->count() > 0) throw UsageError(std::string("--depth: ") + kDepthRejection);
        if (config_opt && config_opt->count() > 0) {
            config = read_config(config_path);
        } else if (env.config_path && !env.config_path->empty()) {
            config = read_config(*env.config_path);
        }
    }

    [[nodiscard]] std::optional<std::string> raw(const std::string& name) const {
        if (auto it = options.find(name); it != options.end() && it->second->count() > 0) return values.at(name);
        if (auto it = config.find(name); it != config.end()) return it->second;
        return std::nullopt;
    }

    [[nodiscard]] bool given(const std::string& name) const { return raw(name).has_value(); }

    [[nodiscard]] std::optional<Length> length(const std::string& name) const {
        const auto text = raw(name);
        if (!text) return std::nullopt;
        try {
            return parse_length(*text);
        } catch (const ParseError& e) {
            throw UsageError("--" + name + ": " + e.what());
        }
    }

    [[nodiscard]] Format format() const {
        std::string f = "text";
        if (format_opt && format_opt->count() > 0) {
            f = format_text;
        } else if (auto it = config.find("format"); it != config.end()) {
            f = it->second;
        }
        if (f == "text") return Format::Text;
        if (f == "json") return Format::Json;
        throw UsageError("--format: expected text or json, got '" + f + "'");
    }

    [[nodiscard]] Convention convention() const {
        const auto text = raw("convention");
        if (!text) return Convention::FromDropPoint;
        try {
            return parse_convention(*text);
        } catch (const InvalidScenario& e) {
            throw UsageError(std::string("--convention: ") + e.what());
        }
    }

    [[nodiscard]] Scenario scenario() const {
        Scenario s;
        if (auto v = length("r")) s.r = *v;
        if (auto v = length("L")) s.L = *v;
        if (auto v = length("d")) s.d = *v;
        if (auto v = length("E")) s.E = *v;
        if (auto v = length("rA")) s.r_A = *v;
        if (auto v = length("rB")) s.r_B = *v;
        s.convention = convention();
        return s;
    }
};

const std::vector<std::string> kScenarioFlags{"r", "L", "d", "E", "rA", "rB", "convention"};

// Validation failures name the flag they came from.
[[noreturn]] void rethrow_invalid(const InvalidScenario& e) { throw UsageError("--" + e.field() + ": " + e.what()); }

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// report ----------------------------------------------------------------------

int cmd_report(const ScenarioFlags& flags, std::ostream& out) {
    OverlapReport rep;
    try {
        rep = overlap_report(flags.scenario());
    } catch (const InvalidScenario& e) {
        rethrow_invalid(e);
    }
    if (flags.format() == Format::Json) {
        emit_json(out, rep);
        return kExitOk;
    }
    const auto& s = rep.scenario;
    out << "scenario:   r=" << format_exact(s.r) << " L=" << format_exact(s.L) << " d=" << format_exact(s.d)
        << " E=" << format_exact(s.E) << " rA=" << format_exact(s.r_A) << " rB=" << format_exact(s.r_B)
        << " convention=" << to_string(s.convention) << "\n";
    out << "ab:         " << feet_text(rep.ab) << "\n";
    out << "radii sum:  " << feet_text(rep.radii_sum) << "\n";
    out << "overlaps:   " << (rep.overlaps ? "true" : "false") << "\n";
    out << "margin:     " << feet_text(rep.margin) << "\n";
    out << "lens area:  " << fixed(rep.lens_area_sqft, 6) << " sq ft\n";
    return kExitOk;
}

// threshold -------------------------------------------------------------------

int cmd_threshold(const ScenarioFlags& flags, std::ostream& out) {
    const auto convention = flags.convention();
    if (convention == Convention::FromTrunk && !flags.given("r")) {
        throw UsageError("--r: required with --convention from-trunk");
    }
    const Scenario s = flags.scenario();
    LBound lb;
    try {
        lb = max_L_for_nonoverlap(s.r, s.r_A, s.r_B, s.d, s.E, convention);
    } catch (const InvalidScenario& e) {
        rethrow_invalid(e);
    }
    const auto& t = lb.reach_threshold;
    const bool with_r = flags.given("r");

    if (flags.format() == Format::Json) {
        json j{{"convention", std::string(to_string(convention))}, {"threshold", t}};
        if (with_r) j["L_bound"] = lb;
        emit_json(out, j);
        return kExitOk;
    }
    if (t.kind == Threshold::Kind::AlwaysNonoverlap) {
        out << "ALWAYS_NONOVERLAP (rA + rB <= d: the holes never overlap)\n";
        return kExitOk;
    }
    out << "r+L < " << feet_inches_text(*t.bound) << "\n";
    if (with_r) {
        if (lb.kind == LBound::Kind::Finite) {
            out << "L < " << feet_inches_text(*lb.bound) << "\n";
        } else {
            out << "L: " << to_string(lb.kind) << " (r alone exceeds the bound)\n";
        }
    }
    return kExitOk;
}

// verify-paper ----------------------------------------------------------------

int cmd_verify(Format format, bool inject_fault, std::ostream& out) {
    ClaimInputs inputs;
    if (inject_fault) inputs.d = Length::inches(3);  // wrong eye-socket spacing
    const auto claims = verify_paper_claims(inputs);
    const bool all_pass = std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.pass; });

    if (format == Format::Json) {
        emit_json(out, claims);
    } else {
        std::size_t w_exp = 8;
        std::size_t w_comp = 8;
        for (const auto& c : claims) {
            w_exp = std::max(w_exp, c.expected.size());
            w_comp = std::max(w_comp, c.computed.size());
        }
        auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, s.size()), ' '); };
        out << pad("id", 4) << pad("result", 8) << pad("expected", w_exp + 2) << pad("computed", w_comp + 2)
            << "claim\n";
        for (const auto& c : claims) {
            out << pad(c.id, 4) << pad(c.pass ? "PASS" : "FAIL", 8) << pad(c.expected, w_exp + 2)
                << pad(c.computed, w_comp + 2) << c.quote << "\n";
        }
        out << (all_pass ? "all claims reproduced\n" : "claim suite FAILED\n");
    }
    return all_pass ? kExitOk : kExitClaimFailure;
}

// sweep -----------------------------------------------------------------------

// param=start:stop:step, e.g. L=2.5ft:3ft:0.25ft
SweepAxis parse_axis(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) throw UsageError("--axis: expected param=start:stop:step, got '" + spec + "'");
    SweepAxis axis;
    try {
        axis.param = parse_sweep_param(trim(std::string_view(spec).substr(0, eq)));
    } catch (const SweepError& e) {
        throw UsageError(std::string("--axis: ") + e.what());
    }
    std::vector<std::string> parts;
    std::stringstream ss(spec.substr(eq + 1));
    std::string part;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() != 3) throw UsageError("--axis: expected param=start:stop:step, got '" + spec + "'");
    try {
        axis.start = parse_length(parts[0]);
        axis.stop = parse_length(parts[1]);
        axis.step = parse_length(parts[2]);
    } catch (const ParseError& e) {
        throw UsageError(std::string("--axis: ") + e.what());
    }
    return axis;
}

void print_sweep_text(const SweepTable& table, std::ostream& out) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header;
    for (const auto& a : table.axes) header.push_back(std::string(to_string(a.param)));
    for (const char* h : {"ab_ft", "margin_ft", "overlaps", "lens_sqft"}) header.emplace_back(h);
    cells.push_back(header);
    for (const auto& row : table.rows) {
        std::vector<std::string> line;
        for (const auto& v : row.values) line.push_back(format_exact(v));
        while (line.size() < table.axes.size()) line.emplace_back("-");
        if (row.report) {
            line.push_back(row.report->ab.in_feet().decimal(6));
            line.push_back(row.report->margin.in_feet().decimal(6));
            line.emplace_back(row.report->overlaps ? "true" : "false");
            line.push_back(fixed(row.report->lens_area_sqft, 6));
        } else {
            line.push_back("invalid: " + row.error);
        }
        cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size() && i + 1 < header.size(); ++i) width[i] = std::max(width[i], line[i].size());
    }
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            out << line[i];
            if (i + 1 < line.size()) out << std::string(width[i] - std::min(width[i], line[i].size()) + 2, ' ');
        }
        out << "\n";
    }
}

int cmd_sweep(const ScenarioFlags& flags, const std::vector<std::string>& axis_specs, std::ostream& out) {
    if (axis_specs.empty() || axis_specs.size() > 2) throw UsageError("--axis: give one or two axes");
    std::vector<SweepAxis> axes;
    for (const auto& spec : axis_specs) axes.push_back(parse_axis(spec));
    SweepTable table;
    try {
        table = sweep(flags.scenario(), axes);
    } catch (const SweepError& e) {
        throw UsageError(std::string("--axis: ") + e.what());
    } catch (const std::overflow_error& e) {
        throw UsageError(std::string("--axis: ") + e.what());
    }
    if (flags.format() == Format::Json) {
        emit_json(out, table);
    } else {
        print_sweep_text(table, out);
    }
    return kExitOk;
}

// render ----------------------------------------------------------------------

int cmd_render(const ScenarioFlags& flags, const CanvasSpec& canvas, const std::string& path, std::ostream& out) {
    std::string svg;
    try {
        svg = render_svg(flags.scenario(), canvas);
    } catch (const InvalidScenario& e) {
        rethrow_invalid(e);
    } catch (const CanvasTooSmall& e) {
        throw UsageError(std::string("canvas: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (path.empty() || path == "-") {
        out << svg;
        return kExitOk;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("--out: cannot open '" + path + "' for writing");
    file.write(svg.data(), static_cast<std::streamsize>(svg.size()));
    if (!file) throw UsageError("--out: write to '" + path + "' failed");
    return kExitOk;
}

// oracle ----------------------------------------------------------------------

int cmd_oracle_distance(const ScenarioFlags& flags, std::ostream& out) {
    Scenario s;
    try {
        s = flags.scenario();
        validate(s);
    } catch (const InvalidScenario& e) {
        rethrow_invalid(e);
    }
    const auto exact = center_distance(s);
    const double coords = center_distance_oracle(s);
    const double rel = std::abs(to_real_feet(exact) - coords) / to_real_feet(exact);
    if (flags.format() == Format::Json) {
        emit_json(out, json{{"closed_form", exact}, {"oracle_ft", coords}, {"relative_error", rel}});
    } else {
        out << "closed form: " << feet_text(exact) << "\n";
        out << "coordinates: " << shortest(coords) << " ft\n";
        out << "rel. error:  " << shortest(rel) << "\n";
    }
    return kExitOk;
}

int cmd_oracle_lens(const ScenarioFlags& flags, const std::string& ab_text, std::int64_t samples, std::uint64_t seed,
                    std::ostream& out) {
    Length ab;
    try {
        ab = parse_length(ab_text);
    } catch (const ParseError& e) {
        throw UsageError(std::string("--ab: ") + e.what());
    }
    const auto s = flags.scenario();
    const double ab_ft = to_real_feet(ab);
    const double rA = to_real_feet(s.r_A);
    const double rB = to_real_feet(s.r_B);
    if (ab.is_negative()) throw UsageError("--ab: must be >= 0");
    if (!s.r_A.is_positive()) throw UsageError("--rA: must be > 0");
    if (!s.r_B.is_positive()) throw UsageError("--rB: must be > 0");
    if (samples < kMinMcSamples) throw UsageError("--samples: need at least 1000");

    const auto mc = lens_area_mc(ab_ft, rA, rB, samples, seed);
    const double analytic = lens_area(ab_ft, rA, rB);
    if (flags.format() == Format::Json) {
        emit_json(out, json{{"monte_carlo", mc}, {"analytic_sqft", analytic}});
    } else {
        out << "monte carlo: " << fixed(mc.value, 6) << " ± " << fixed(mc.std_error, 6) << " sq ft (" << mc.samples
            << " samples, seed " << mc.seed << ")\n";
        out << "analytic:    " << fixed(analytic, 6) << " sq ft\n";
    }
    return kExitOk;
}

int cmd_oracle_grid(const ScenarioFlags& flags, int cells, std::ostream& out) {
    if (cells < kMinCellsPerFoot) throw UsageError("--cells: need at least 16 cells per foot");
    OverlapReport rep;
    try {
        rep = overlap_report(flags.scenario());
    } catch (const InvalidScenario& e) {
        rethrow_invalid(e);
    }
    const bool grid = overlap_oracle_grid(rep.scenario, cells);
    if (flags.format() == Format::Json) {
        emit_json(out, json{{"grid_overlaps", grid}, {"closed_form_overlaps", rep.overlaps}, {"cells_per_foot", cells}});
    } else {
        out << "grid oracle: " << (grid ? "overlap" : "no overlap found") << " (" << cells << " cells/ft)\n";
        out << "closed form: " << (rep.overlaps ? "overlap" : "no overlap") << "\n";
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
    CLI::App app{"Two-hole dig site geometry: overlap verdicts, thresholds, sweeps and diagrams", "goldbug"};
    app.require_subcommand(1);

    auto* report = app.add_subcommand("report", "overlap report for one scenario");
    ScenarioFlags report_flags;
    report_flags.attach(report, kScenarioFlags);

    auto* threshold = app.add_subcommand("threshold", "largest r+L (and L, given --r) that keeps the holes apart");
    ScenarioFlags threshold_flags;
    threshold_flags.attach(threshold, kScenarioFlags);

    auto* verify = app.add_subcommand("verify-paper", "recompute the published numeric claims");
    std::string verify_format = "text";
    bool inject_fault = false;
    verify->add_option("--format", verify_format, "text (default) or json");
    verify->add_flag("--inject-wrong-constant", inject_fault, "self test: run the claims with a wrong drop spacing");

    auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a grid of scenarios");
    ScenarioFlags sweep_flags;
    sweep_flags.attach(sweep_cmd, kScenarioFlags);
    std::vector<std::string> axis_specs;
    sweep_cmd->add_option("--axis", axis_specs, "param=start:stop:step (param in r, L, rA, rB, E); at most two")
        ->required();

    auto* render = app.add_subcommand("render", "write an SVG plan view of the dig site");
    ScenarioFlags render_flags;
    render_flags.attach(render, kScenarioFlags);
    CanvasSpec canvas;
    bool no_labels = false;
    std::string out_path;
    render->add_option("--width", canvas.width_px, "canvas width in px")->capture_default_str();
    render->add_option("--height", canvas.height_px, "canvas height in px")->capture_default_str();
    render->add_option("--margin", canvas.margin_px, "margin in px")->capture_default_str();
    render->add_option("--feet-per-px", canvas.feet_per_px, "scale")->capture_default_str();
    render->add_option("--exaggerate", canvas.angle_exaggeration, "display-only multiplier on the ray angle")
        ->capture_default_str();
    render->add_flag("--no-labels", no_labels, "omit text labels");
    render->add_option("--out", out_path, "output file (default: stdout)");

    auto* oracle = app.add_subcommand("oracle", "independent brute-force checks");
    oracle->require_subcommand(1);
    auto* o_dist = oracle->add_subcommand("distance", "hole spacing from explicit coordinates");
    ScenarioFlags dist_flags;
    dist_flags.attach(o_dist, kScenarioFlags);
    auto* o_lens = oracle->add_subcommand("lens", "Monte Carlo lens area");
    ScenarioFlags lens_flags;
    lens_flags.attach(o_lens, {"rA", "rB"});
    std::string ab_text;
    std::int64_t samples = 1'000'000;
    std::uint64_t seed = 1;
    o_lens->add_option("--ab", ab_text, "center distance")->required();
    o_lens->add_option("--samples", samples, "sample count")->capture_default_str();
    o_lens->add_option("--seed", seed, "generator seed (std::mt19937_64)")->capture_default_str();
    auto* o_grid = oracle->add_subcommand("grid", "rasterized overlap test");
    ScenarioFlags grid_flags;
    grid_flags.attach(o_grid, kScenarioFlags);
    int cells = 64;
    o_grid->add_option("--cells", cells, "cells per foot (>= 16)")->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        auto run_with = [&](ScenarioFlags& flags, auto&& fn) {
            flags.load(env);
            return fn(flags);
        };
        if (*report) return run_with(report_flags, [&](auto& f) { return cmd_report(f, out); });
        if (*threshold) return run_with(threshold_flags, [&](auto& f) { return cmd_threshold(f, out); });
        if (*verify) {
            if (verify_format != "text" && verify_format != "json") {
                throw UsageError("--format: expected text or json, got '" + verify_format + "'");
            }
            return cmd_verify(verify_format == "json" ? Format::Json : Format::Text, inject_fault, out);
        }
        if (*sweep_cmd) return run_with(sweep_flags, [&](auto& f) { return cmd_sweep(f, axis_specs, out); });
        if (*render) {
            canvas.show_labels = !no_labels;
            return run_with(render_flags, [&](auto& f) { return cmd_render(f, canvas, out_path, out); });
        }
        if (*o_dist) return run_with(dist_flags, [&](auto& f) { return cmd_oracle_distance(f, out); });
        if (*o_lens) {
            return run_with(lens_flags, [&](auto& f) { return cmd_oracle_lens(f, ab_text, samples, seed, out); });
        }
        if (*o_grid) return run_with(grid_flags, [&](auto& f) { return cmd_oracle_grid(f, cells, out); });
    } catch (const UsageError& e) {
        err << "goldbug: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidScenario& e) {
        err << "goldbug: --" << e.field() << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "goldbug: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace goldbug::cli
