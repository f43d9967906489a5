#pragma once

// One-dimensional pressure calculus on top of the inverse-power energy fit.
// With t = a/K the fitted energy is E(a) = V0 * sum c_i t^-i, the pressure is
// P = -dE/da and dE/dP = (dE/da) / (dP/da).
//
// Two dE/dP forms exist. `printed` carries a leading denominator term 2*c1*a^4
// and a small-K third term (c2^2 - c3^2); `consistent` is the re-derivation
// from the series, with c1*a^4 and (c2^2 - c1*c3). Both are kept so the
// published forms can be reproduced and checked.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "pwell/errors.hpp"
#include "pwell/fitseries.hpp"

namespace pwell {

enum class Variant { printed, consistent };

/// Relative size of the dE/dP denominator (against its largest term) below
/// which the expression is treated as sitting on its pole.
inline constexpr double pole_tolerance = 1e-12;

namespace detail {

inline void require_lengths(double a, double K) {
    require(std::isfinite(a) && a > 0, "well half-width a must be positive");
    require(std::isfinite(K) && K > 0, "characteristic length K must be positive");
}

// Coefficients of t^0..t^4 in the dE/dP quartics, t = a/K.
inline std::array<double, 5> numerator_quartic(const FitCoefficients& c) {
    return {5 * c[5], 4 * c[4], 3 * c[3], 2 * c[2], c[1]};
}

inline std::array<double, 5> denominator_quartic(const FitCoefficients& c, Variant v) {
    return {15 * c[5], 10 * c[4], 6 * c[3], 3 * c[2], (v == Variant::printed ? 2 : 1) * c[1]};
}

struct PolyValue {
    double value;
    double scale;  // largest |term|
};

inline PolyValue eval_quartic(const std::array<double, 5>& p, double t) {
    double value = 0, scale = 0, pw = 1;
    for (double coef : p) {
        const double term = coef * pw;
        value += term;
        scale = std::max(scale, std::abs(term));
        pw *= t;
    }
    return {value, scale};
}

// First root of p on (0, t_max]: sign scan over `samples` uniform points,
// then bisection to 1e-12.
inline std::optional<double> first_positive_root(const std::array<double, 5>& p, double t_max = 20.0,
                                                 int samples = 2000) {
    auto f = [&](double t) { return eval_quartic(p, t).value; };
    double prev_t = t_max / samples;
    double prev_f = f(prev_t);
    if (prev_f == 0) return prev_t;
    for (int k = 2; k <= samples; ++k) {
        const double t = t_max * k / samples;
        const double ft = f(t);
        if (ft == 0) return t;
        if ((ft < 0) != (prev_f < 0)) {
            double lo = prev_t, hi = t, flo = prev_f;
            while (hi - lo > 1e-12) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if (fm == 0) return mid;
                if ((fm < 0) == (flo < 0)) lo = mid, flo = fm;
                else hi = mid;
            }
            return 0.5 * (lo + hi);
        }
        prev_t = t;
        prev_f = ft;
    }
    return std::nullopt;
}

}  // namespace detail

/// Energy from the fitted series, E = V0 * sum c_i (K/a)^i.
inline double series_energy(double a, double K, const FitCoefficients& c, double V0) {
    detail::require_lengths(a, K);
    return V0 * eval_fit(c, a / K);
}

/// P = V0 * sum i c_i K^i / a^(i+1) [N]. The V0 factor follows from
/// differentiating V0 * sum c_i (K/a)^i; the printed form drops it.
inline double pressure_1d(double a, double K, const FitCoefficients& c, double V0) {
    detail::require_lengths(a, K);
    const double s = K / a;
    double acc = 0.0;
    for (int i = fit_terms - 1; i >= 1; --i) acc = acc * s + i * c[static_cast<std::size_t>(i)];
    return V0 * acc * s / a;
}

/// The pressure series without the V0 factor, exactly as published.
inline double pressure_printed(double a, double K, const FitCoefficients& c) {
    return pressure_1d(a, K, c, 1.0);
}

/// Relative magnitude |D| / max|term of D| of the dE/dP denominator.
inline double pole_margin(double a, double K, const FitCoefficients& c, Variant v = Variant::consistent) {
    detail::require_lengths(a, K);
    const auto d = detail::eval_quartic(detail::denominator_quartic(c, v), a / K);
    return d.scale > 0 ? std::abs(d.value) / d.scale : 0.0;
}

/// dE/dP [m] = (a/2) * N(a/K) / D(a/K).
inline double denergy_dpressure(double a, double K, const FitCoefficients& c,
                                Variant v = Variant::consistent) {
    detail::require_lengths(a, K);
    const double t = a / K;
    const auto num = detail::eval_quartic(detail::numerator_quartic(c), t);
    const auto den = detail::eval_quartic(detail::denominator_quartic(c, v), t);
    if (!(std::abs(den.value) >= pole_tolerance * den.scale) || den.scale == 0)
        throw PoleSingularity("dE/dP denominator vanishes at a/K = " + std::to_string(t));
    return 0.5 * a * num.value / den.value;
}

/// Small-width expansion a/6 + (c4/c5) a^2 / (45 K).
inline double expansion_small_width(double a, double K, const FitCoefficients& c) {
    detail::require_lengths(a, K);
    detail::require(c[5] != 0, "small-width expansion needs c5 != 0");
    return a / 6 + (c[4] / c[5]) * a * a / (45 * K);
}

/// Small-K expansion a/2 - K c2/(2 c1) + 3K^2/(2 a c1^2) * bracket, where the
/// bracket is c2^2 - c3^2 (printed) or c2^2 - c1 c3 (consistent).
inline double expansion_small_k(double a, double K, const FitCoefficients& c,
                                Variant v = Variant::consistent) {
    detail::require_lengths(a, K);
    detail::require(c[1] != 0, "small-K expansion needs c1 != 0");
    const double bracket = v == Variant::printed ? c[2] * c[2] - c[3] * c[3] : c[2] * c[2] - c[1] * c[3];
    return a / 2 - K * c[2] / (2 * c[1]) + 3 * K * K / (2 * a * c[1] * c[1]) * bracket;
}

struct PressureProfile {
    double a = 0;                       // [m]
    double P = 0;                       // [N]
    std::optional<double> dEdP;         // consistent form [m]
    std::optional<double> dEdP_printed; // [m]
    bool near_pole = false;
};

inline PressureProfile pressure_profile(double a, double K, const FitCoefficients& c, double V0) {
    PressureProfile p;
    p.a = a;
    p.P = pressure_1d(a, K, c, V0);
    p.near_pole = pole_margin(a, K, c, Variant::consistent) < pole_tolerance;
    if (!p.near_pole) p.dEdP = denergy_dpressure(a, K, c, Variant::consistent);
    if (pole_margin(a, K, c, Variant::printed) >= pole_tolerance)
        p.dEdP_printed = denergy_dpressure(a, K, c, Variant::printed);
    return p;
}

enum class WidthMethod { paper, numeric };

struct CriticalWidthReport {
    std::optional<double> a0_paper;      // -7.5 (c5/c4) K [m]
    std::optional<double> a0_numeric;    // zero of the full dE/dP numerator [m]
    std::optional<double> pole_location; // zero of the consistent denominator [m]
    WidthMethod classification_width_used = WidthMethod::paper;
};

/// Zero of the small-width expansion, a0 = -7.5 (c5/c4) K.
inline double critical_width_paper(double K, const FitCoefficients& c) {
    detail::require(std::isfinite(K) && K > 0, "characteristic length K must be positive");
    detail::require(c[4] != 0, "critical width needs c4 != 0");
    return -7.5 * (c[5] / c[4]) * K;
}

/// Largest t scanned for numerator and denominator roots.
inline constexpr double critical_scan_limit = 20.0;

inline CriticalWidthReport critical_width(double K, const FitCoefficients& c,
                                          WidthMethod method = WidthMethod::paper) {
    detail::require(std::isfinite(K) && K > 0, "characteristic length K must be positive");
    CriticalWidthReport r;
    r.classification_width_used = method;
    if (method == WidthMethod::paper) {
        r.a0_paper = critical_width_paper(K, c);
        return r;
    }
    if (c[4] != 0) r.a0_paper = critical_width_paper(K, c);
    const auto t0 = detail::first_positive_root(detail::numerator_quartic(c), critical_scan_limit);
    if (!t0) throw NoRoot("dE/dP numerator has no positive root on (0, 20]");
    r.a0_numeric = *t0 * K;
    if (auto tp = detail::first_positive_root(detail::denominator_quartic(c, Variant::consistent),
                                              critical_scan_limit))
        r.pole_location = *tp * K;
    return r;
}

enum class Response { ionizes, pushed_deeper };

struct Classification {
    Response response;
    bool boundary = false;  // a equals a0 to 1e-12 relative
    double a0 = 0;
};

/// Compression ionises the particle when a < a0 (paper method); a tie counts
/// as pushed deeper and sets `boundary`.
inline Classification classify_response(double a, double K, const FitCoefficients& c) {
    detail::require_lengths(a, K);
    const double a0 = critical_width_paper(K, c);
    Classification out{Response::pushed_deeper, false, a0};
    if (std::abs(a - a0) <= 1e-12 * std::abs(a0)) out.boundary = true;
    else if (a < a0) out.response = Response::ionizes;
    return out;
}

constexpr const char* to_string(Response r) {
    return r == Response::ionizes ? "Ionizes" : "PushedDeeper";
}

}  // namespace pwell
