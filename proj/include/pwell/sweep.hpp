#pragma once

// Parameter sweeps producing one plot-ready row per step.
//
// CSV header: param,a_m,n,K_m,xi,E_J,E_over_V0,P_N,dEdP_m,R,flags
// Missing values are empty cells; flags are ';'-separated.

#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pwell/errors.hpp"
#include "pwell/fitseries.hpp"
#include "pwell/pressure.hpp"
#include "pwell/probability.hpp"
#include "pwell/spectrum.hpp"
#include "pwell/units.hpp"

namespace pwell {

enum class SweepParameter { width, depth, mass, gamma };
enum class SweepScale { linear, log };

inline SweepParameter parse_sweep_parameter(std::string_view s) {
    if (s == "width") return SweepParameter::width;
    if (s == "depth") return SweepParameter::depth;
    if (s == "mass") return SweepParameter::mass;
    if (s == "gamma") return SweepParameter::gamma;
    throw ParseError("unknown sweep parameter '" + std::string(s) + "'");
}

inline Dimension sweep_dimension(SweepParameter p) {
    switch (p) {
        case SweepParameter::width: return Dimension::length;
        case SweepParameter::depth: return Dimension::energy;
        case SweepParameter::mass: return Dimension::mass;
        case SweepParameter::gamma: return Dimension::dimensionless;
    }
    return Dimension::dimensionless;
}

struct SweepSpec {
    SweepParameter parameter = SweepParameter::width;
    Quantity from;
    Quantity to;
    int steps = 2;
    SweepScale scale = SweepScale::linear;

    void validate() const {
        const auto dim = sweep_dimension(parameter);
        require_dimension(from, dim);
        require_dimension(to, dim);
        detail::require(std::isfinite(from.value) && std::isfinite(to.value), "sweep bounds must be finite");
        detail::require(from.value < to.value, "sweep needs from < to");
        detail::require(steps >= 2, "sweep needs at least 2 steps");
        detail::require(scale == SweepScale::linear || from.value > 0, "log sweep needs from > 0");
    }

    std::vector<double> values() const {
        validate();
        std::vector<double> v(static_cast<std::size_t>(steps));
        for (int i = 0; i < steps; ++i) {
            const double f = static_cast<double>(i) / (steps - 1);
            v[static_cast<std::size_t>(i)] =
                scale == SweepScale::linear
                    ? from.value + f * (to.value - from.value)
                    : std::exp(std::log(from.value) + f * (std::log(to.value) - std::log(from.value)));
        }
        v.front() = from.value;
        v.back() = to.value;
        return v;
    }
};

/// Fixed inputs for the parameters not being swept.
struct SweepContext {
    WellConfig well;
    FitCoefficients coeffs = paper_coefficients();
    double gamma = 0.5;
    Variant variant = Variant::consistent;
};

struct SweepRow {
    double param = 0;
    double a = 0;
    std::optional<double> n, K, xi, E, E_over_V0, P, dEdP, R;
    std::vector<std::string> flags;
    bool failed = false;  // an error suppressed at least one column
    int pole_sign = 0;    // sign of the dE/dP denominator, 0 when unknown

    bool has_flag(std::string_view f) const {
        for (const auto& x : flags)
            if (x == f) return true;
        return false;
    }
    void add_flag(std::string f) {
        if (!has_flag(f)) flags.push_back(std::move(f));
    }
};

inline SweepRow evaluate_row(double param, SweepParameter which, const SweepContext& ctx) {
    SweepRow row;
    row.param = param;
    WellConfig cfg = ctx.well;
    double gamma = ctx.gamma;
    switch (which) {
        case SweepParameter::width: cfg.half_width = param; break;
        case SweepParameter::depth: cfg.depth = param; break;
        case SweepParameter::mass: cfg.mass = param; break;
        case SweepParameter::gamma: gamma = param; break;
    }
    row.a = cfg.half_width;

    try {
        const auto ws = well_strength(cfg);
        row.n = ws.n;
        row.K = ws.K;
        const auto state = energy_exact(cfg, 0);
        row.xi = state.xi;
        row.E = state.energy;
        row.E_over_V0 = state.energy / cfg.depth;

        row.P = pressure_1d(cfg.half_width, ws.K, ctx.coeffs, cfg.depth);
        const auto den = detail::eval_quartic(detail::denominator_quartic(ctx.coeffs, ctx.variant), ws.n);
        row.pole_sign = den.value > 0 ? 1 : (den.value < 0 ? -1 : 0);
        try {
            row.dEdP = denergy_dpressure(cfg.half_width, ws.K, ctx.coeffs, ctx.variant);
        } catch (const PoleSingularity&) {
            row.add_flag("near_pole");
            row.failed = true;
        }
        if (ctx.coeffs[4] != 0) {
            const auto cls = classify_response(cfg.half_width, ws.K, ctx.coeffs);
            row.add_flag(cls.response == Response::ionizes ? "ionizes" : "pushed_deeper");
            if (cls.boundary) row.add_flag("boundary");
        }
        try {
            const double beta = beta_from_fit(cfg.half_width, ws.K, ctx.coeffs, cfg.mass, cfg.depth);
            row.R = probability_interval(cfg.half_width, beta, gamma).R;
        } catch (const FitOutOfRange&) {
            row.add_flag("fit_out_of_range");
            row.failed = true;
        }
    } catch (const NumericalError&) {
        row.add_flag("numerical_error");
        row.failed = true;
    } catch (const DomainError&) {
        row.add_flag("domain_error");
        row.failed = true;
    }
    return row;
}

/// Rows in input order. Adjacent rows whose dE/dP denominators differ in sign
/// bracket a pole and are both flagged near_pole.
inline std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SweepContext& ctx) {
    std::vector<SweepRow> rows;
    for (double v : spec.values()) rows.push_back(evaluate_row(v, spec.parameter, ctx));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i - 1].pole_sign * rows[i].pole_sign < 0) {
            rows[i - 1].add_flag("near_pole");
            rows[i].add_flag("near_pole");
        }
    }
    return rows;
}

inline constexpr std::string_view csv_header = "param,a_m,n,K_m,xi,E_J,E_over_V0,P_N,dEdP_m,R,flags";

inline std::string csv_row(const SweepRow& r) {
    auto cell = [](const std::optional<double>& v) { return v ? format_number(*v, round_trip) : std::string(); };
    std::string out = format_number(r.param, round_trip) + ',' + format_number(r.a, round_trip);
    for (const auto* v : {&r.n, &r.K, &r.xi, &r.E, &r.E_over_V0, &r.P, &r.dEdP, &r.R}) out += ',' + cell(*v);
    out += ',';
    for (std::size_t i = 0; i < r.flags.size(); ++i) {
        if (i) out += ';';
        out += r.flags[i];
    }
    return out;
}

inline void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << csv_header << '\n';
    for (const auto& r : rows) os << csv_row(r) << '\n';
}

}  // namespace pwell
