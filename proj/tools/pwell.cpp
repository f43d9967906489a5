// pwell: command-line front end for the finite-well pressure library.
//
// Exit codes: 0 ok, 1 domain error, 2 numerical failure, 3 usage.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pwell/pwell.hpp"

namespace {

using nlohmann::json;
using namespace pwell;

constexpr int exit_ok = 0;
constexpr int exit_domain = 1;
constexpr int exit_numerical = 2;
constexpr int exit_usage = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Human tables and --json share one rounding so both show identical numbers.
double shown(double v) { return std::stod(format_number(v, 9)); }

/// Ordered key/value table rendered either as aligned text or a JSON object.
class Table {
public:
    void num(std::string key, double v) { rows_.push_back({std::move(key), shown(v)}); }
    void text(std::string key, std::string v) { rows_.push_back({std::move(key), std::move(v)}); }

    json as_json() const {
        json j = json::object();
        for (const auto& [k, v] : rows_) j[k] = v;
        return j;
    }

    void print(std::ostream& os) const {
        std::size_t width = 0;
        for (const auto& r : rows_) width = std::max(width, r.first.size());
        for (const auto& [k, v] : rows_) {
            os << k << std::string(width - k.size() + 2, ' ');
            if (v.is_string()) os << v.get<std::string>();
            else os << format_number(v.get<double>(), 9);
            os << '\n';
        }
    }

private:
    std::vector<std::pair<std::string, json>> rows_;
};

void emit(const Table& t, bool as_json) {
    if (as_json) std::cout << t.as_json().dump(2) << '\n';
    else t.print(std::cout);
}

struct WellFlags {
    std::string width, depth, mass, preset;
};

void add_well_flags(CLI::App* cmd, WellFlags& f) {
    cmd->add_option("--width", f.width, "well half-width, e.g. 0.529angstrom");
    cmd->add_option("--depth", f.depth, "well depth, e.g. 13.6058eV");
    cmd->add_option("--mass", f.mass, "particle mass, e.g. 1me");
    cmd->add_option("--preset", f.preset, "fill unset well parameters from a preset")
        ->check(CLI::IsMember({"hydrogen"}));
}

Quantity quantity_flag(const std::string& text, const char* flag, Dimension dim) {
    if (text.empty()) throw UsageError(std::string("missing required flag ") + flag);
    return require_dimension(parse_quantity(text), dim);
}

// Mass tokens may be given bare ("me") as shorthand for one electron mass.
std::string normalize_mass(const std::string& text) {
    return (text == "me" || text == "kg") ? "1" + text : text;
}

WellConfig resolve_well(const WellFlags& f, bool need_width = true) {
    WellConfig cfg{0, 0, 0};
    if (f.preset == "hydrogen")
        cfg = {HydrogenPreset::width(), HydrogenPreset::depth(), HydrogenPreset::mass()};
    const bool preset = !f.preset.empty();
    if (!f.width.empty() || (need_width && !preset))
        cfg.half_width = quantity_flag(f.width, "--width", Dimension::length).value;
    if (!f.depth.empty() || !preset) cfg.depth = quantity_flag(f.depth, "--depth", Dimension::energy).value;
    if (!f.mass.empty() || !preset) cfg.mass = quantity_flag(normalize_mass(f.mass), "--mass", Dimension::mass).value;
    return cfg;
}

FitCoefficients resolve_coefficients(const std::string& path, bool refit_default) {
    if (!path.empty()) return load_coefficients(path);
    if (refit_default) return refit(default_fit_grid);
    return paper_coefficients();
}

FitGrid parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() != 3) throw UsageError("--grid expects start:stop:count");
    FitGrid g;
    try {
        std::size_t pos = 0;
        g.n_start = std::stod(parts[0], &pos);
        if (pos != parts[0].size()) throw std::invalid_argument("start");
        g.n_stop = std::stod(parts[1], &pos);
        if (pos != parts[1].size()) throw std::invalid_argument("stop");
        g.n_count = std::stoi(parts[2], &pos);
        if (pos != parts[2].size()) throw std::invalid_argument("count");
    } catch (const std::logic_error&) {
        throw UsageError("--grid expects start:stop:count");
    }
    return g;
}

int cmd_spectrum(const WellFlags& flags, int branch, bool as_json) {
    const auto cfg = resolve_well(flags);
    const auto ws = well_strength(cfg);
    const auto s = energy_exact(cfg, branch);
    Table t;
    t.num("branch", branch);
    t.num("n", ws.n);
    t.num("K_m", ws.K);
    t.num("xi", s.xi);
    t.num("eta", s.eta);
    t.num("E_J", s.energy);
    t.num("E_eV", s.energy / constants.electronvolt);
    t.num("E_over_V0", s.energy / cfg.depth);
    emit(t, as_json);
    return exit_ok;
}

int cmd_fit(const std::string& grid_text, bool paper, const std::string& out, bool as_json) {
    FitCoefficients f;
    if (paper) {
        f = paper_coefficients();
    } else {
        const FitGrid grid = grid_text.empty() ? default_fit_grid : parse_grid(grid_text);
        f = refit(grid);
    }
    if (!out.empty()) save_coefficients(f, out);
    Table t;
    for (int i = 0; i < fit_terms; ++i) t.num("c" + std::to_string(i), f.c[static_cast<std::size_t>(i)]);
    t.num("sigma", f.sigma);
    t.text("source", f.source == FitSource::paper ? "paper" : "refit");
    if (f.grid) {
        t.num("grid_start", f.grid->n_start);
        t.num("grid_stop", f.grid->n_stop);
        t.num("grid_count", f.grid->n_count);
    }
    emit(t, as_json);
    return exit_ok;
}

int cmd_hydrogen(bool as_json) {
    const auto r = reproduce_hydrogen();
    Table t;
    t.num("V0_eV", r.depth_eV);
    t.num("V0_J", r.depth_J);
    t.num("mass_kg", r.mass_kg);
    t.num("K_m", r.K);
    t.num("K_published_m", PublishedValues::characteristic_length);
    t.num("K_rel_deviation", r.K_deviation);
    t.num("a0_m", r.a0);
    t.num("a0_published_m", PublishedValues::critical_width);
    t.num("a0_rel_deviation", r.a0_deviation);
    t.num("a_m", r.width_m);
    t.num("n", r.n);
    t.text("classification", to_string(r.classification.response));
    t.text("reproduced", r.reproduced() ? "yes" : "no");
    emit(t, as_json);
    return r.reproduced() ? exit_ok : exit_numerical;
}

struct SweepFlags {
    WellFlags well;
    std::string param, from, to, scale = "linear", coeffs;
    int steps = 0;
    double gamma = 0.5;
    bool printed = false, relative = false, refit = false;
};

int cmd_sweep(const SweepFlags& f, bool as_json) {
    SweepSpec spec;
    spec.parameter = parse_sweep_parameter(f.param);
    spec.steps = f.steps;
    spec.scale = f.scale == "log" ? SweepScale::log : SweepScale::linear;

    SweepContext ctx;
    ctx.well = resolve_well(f.well, spec.parameter != SweepParameter::width);
    ctx.coeffs = resolve_coefficients(f.coeffs, f.refit);
    ctx.gamma = f.gamma;
    ctx.variant = f.printed ? Variant::printed : Variant::consistent;
    detail::require(ctx.gamma >= 0 && ctx.gamma <= 1, "gamma must lie in [0, 1]");

    const auto dim = sweep_dimension(spec.parameter);
    if (f.from.empty() || f.to.empty()) throw UsageError("sweep needs --from and --to");
    if (f.relative) {
        if (spec.parameter != SweepParameter::width) throw UsageError("--relative applies to width sweeps only");
        const double K = characteristic_length(ctx.well.depth, ctx.well.mass);
        spec.from = {require_dimension(parse_quantity(f.from), Dimension::dimensionless).value * K, dim};
        spec.to = {require_dimension(parse_quantity(f.to), Dimension::dimensionless).value * K, dim};
    } else {
        const bool is_mass = spec.parameter == SweepParameter::mass;
        spec.from = parse_quantity(is_mass ? normalize_mass(f.from) : f.from);
        spec.to = parse_quantity(is_mass ? normalize_mass(f.to) : f.to);
    }
    spec.validate();

    const auto rows = run_sweep(spec, ctx);
    if (as_json) {
        json arr = json::array();
        auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
        for (const auto& r : rows) {
            arr.push_back({{"param", r.param}, {"a_m", r.a}, {"n", opt(r.n)}, {"K_m", opt(r.K)}, {"xi", opt(r.xi)},
                           {"E_J", opt(r.E)}, {"E_over_V0", opt(r.E_over_V0)}, {"P_N", opt(r.P)},
                           {"dEdP_m", opt(r.dEdP)}, {"R", opt(r.R)}, {"flags", r.flags}});
        }
        std::cout << arr.dump(2) << '\n';
    } else {
        write_csv(std::cout, rows);
    }
    bool all_failed = true;
    for (const auto& r : rows) all_failed = all_failed && r.failed;
    return all_failed ? exit_numerical : exit_ok;
}

int cmd_verify(bool as_json) {
    const auto rep = verify_published();
    if (as_json) {
        json j;
        j["checks"] = json::array();
        for (const auto& c : rep.checks)
            j["checks"].push_back({{"id", c.id},
                                   {"description", c.description},
                                   {"printed", shown(c.printed)},
                                   {"rederived", shown(c.rederived)},
                                   {"relative_deviation", shown(c.relative_deviation)},
                                   {"verdict", to_string(c.verdict)}});
        j["numerator_zero_a_over_K"] = shown(rep.numerator_zero_ratio);
        j["pole_a_over_K"] = shown(rep.pole_ratio);
        j["pole_printed_a_over_K"] = shown(rep.pole_ratio_printed);
        j["claimed_a0_over_K"] = PublishedValues::critical_ratio;
        std::cout << j.dump(2) << '\n';
        return exit_ok;
    }
    for (const auto& c : rep.checks) {
        std::cout << c.id << "  " << to_string(c.verdict) << "\n  " << c.description << "\n  printed "
                  << format_number(c.printed, 9) << "  rederived " << format_number(c.rederived, 9)
                  << "  relative_deviation " << format_number(c.relative_deviation, 9) << '\n';
    }
    Table t;
    t.num("numerator_zero_a_over_K", rep.numerator_zero_ratio);
    t.num("pole_a_over_K", rep.pole_ratio);
    t.num("pole_printed_a_over_K", rep.pole_ratio_printed);
    t.num("claimed_a0_over_K", PublishedValues::critical_ratio);
    t.print(std::cout);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite square well: bound states, inverse-power fit, 1D pressure and ionisation"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output")->configurable(false);

    WellFlags spectrum_flags;
    int branch = 0;
    auto* spectrum = app.add_subcommand("spectrum", "bound-state energy of one well");
    add_well_flags(spectrum, spectrum_flags);
    spectrum->add_option("--branch", branch, "even-parity branch (0 = ground state)");
    spectrum->add_flag("--json", as_json);

    std::string grid_text, out_path;
    bool paper = false;
    auto* fit = app.add_subcommand("fit", "inverse-power fit of ground-state energies");
    fit->add_option("--grid", grid_text, "sample grid start:stop:count (default 1:10:12)");
    fit->add_flag("--paper", paper, "emit the published coefficient set");
    fit->add_option("--out", out_path, "write the coefficient JSON document here");
    fit->add_flag("--json", as_json);

    auto* hydrogen = app.add_subcommand("hydrogen", "reproduce the hydrogen-like critical width");
    hydrogen->add_flag("--json", as_json);

    SweepFlags sf;
    auto* sweep = app.add_subcommand("sweep", "parameter sweep as CSV");
    add_well_flags(sweep, sf.well);
    sweep->add_option("--param", sf.param, "width | depth | mass | gamma")
        ->required()
        ->check(CLI::IsMember({"width", "depth", "mass", "gamma"}));
    sweep->add_option("--from", sf.from, "start value (unit grammar)");
    sweep->add_option("--to", sf.to, "stop value (unit grammar)");
    sweep->add_option("--steps", sf.steps, "number of rows (>= 2)")->required();
    sweep->add_option("--scale", sf.scale, "linear | log")->check(CLI::IsMember({"linear", "log"}));
    sweep->add_option("--gamma", sf.gamma, "interval fraction for R (default 0.5)");
    sweep->add_option("--coeffs", sf.coeffs, "coefficient JSON document (default: published set)");
    sweep->add_flag("--refit", sf.refit, "use a refit on the default grid instead of the published set");
    sweep->add_flag("--printed", sf.printed, "use the printed dE/dP form");
    sweep->add_flag("--relative", sf.relative, "width bounds are multiples of K");
    sweep->add_flag("--json", as_json);

    auto* verify = app.add_subcommand("verify", "check printed pressure formulas against re-derivations");
    verify->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*spectrum) return cmd_spectrum(spectrum_flags, branch, as_json);
        if (*fit) return cmd_fit(grid_text, paper, out_path, as_json);
        if (*hydrogen) return cmd_hydrogen(as_json);
        if (*sweep) return cmd_sweep(sf, as_json);
        if (*verify) return cmd_verify(as_json);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return exit_domain;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return exit_numerical;
    }
    return exit_usage;
}
