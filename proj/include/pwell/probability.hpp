#pragma once

// In-well density u(x) = 2C cosh(beta x) on |x| <= a, its normalisation, the
// probability R of finding the particle in |x| <= gamma*a, and how R responds
// to pressure.
//
// Note the profile is cosh(beta x) with beta the exterior decay constant, as
// in the source model; the textbook interior solution would be cos(alpha x).
// All closed forms here are mutually consistent for the cosh profile.

#include <cmath>
#include <string>

#include "pwell/errors.hpp"
#include "pwell/fitseries.hpp"
#include "pwell/numdiff.hpp"
#include "pwell/pressure.hpp"
#include "pwell/spectrum.hpp"
#include "pwell/units.hpp"

namespace pwell {

struct WavefunctionNorm {
    double C;     // [m^-1/2]
    double beta;  // [1/m]
    double a;     // [m]
};

enum class ProbabilityMethod { closed_form, small_beta, quadrature };

struct ProbabilityResult {
    double R;
    double gamma;
    ProbabilityMethod method;
};

namespace detail {

// sinh(x)/x with a Taylor branch near zero.
inline double sinhc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 + x2 / 6.0 * (1.0 + x2 / 20.0);
    }
    return std::sinh(x) / x;
}

inline void require_probability_args(double a, double beta, double gamma) {
    require(std::isfinite(a) && a > 0, "well half-width a must be positive");
    require(std::isfinite(beta) && beta >= 0, "beta must be non-negative");
    require(std::isfinite(gamma) && gamma >= 0 && gamma <= 1, "gamma must lie in [0, 1]");
}

}  // namespace detail

/// beta = sqrt(2 m (V0 - E)) / hbar.
inline double beta_from_energy(double E, double m, double V0) {
    detail::require(std::isfinite(m) && m > 0, "particle mass must be positive");
    detail::require(std::isfinite(V0) && V0 > 0, "well depth must be positive");
    detail::require(std::isfinite(E) && E >= 0 && E <= V0, "energy must lie in [0, V0]");
    return std::sqrt(2.0 * m * (V0 - E)) / constants.hbar;
}

/// beta^2 = (2m/hbar^2) V0 [1 - sum c_i (K/a)^i], using the fitted energy.
inline double beta_from_fit(double a, double K, const FitCoefficients& c, double m, double V0) {
    detail::require_lengths(a, K);
    detail::require(std::isfinite(m) && m > 0, "particle mass must be positive");
    detail::require(std::isfinite(V0) && V0 > 0, "well depth must be positive");
    const double bracket = 1.0 - eval_fit(c, a / K);
    if (!(bracket >= 0))
        throw FitOutOfRange("fitted E/V0 exceeds 1 at a/K = " + std::to_string(a / K));
    return std::sqrt(2.0 * m * V0 * bracket) / constants.hbar;
}

/// C = (1 / 2 sqrt(a)) * (1 + sinh(2 a beta) / (2 a beta))^-1/2.
inline WavefunctionNorm normalization_constant(double a, double beta) {
    detail::require(std::isfinite(a) && a > 0, "well half-width a must be positive");
    detail::require(std::isfinite(beta) && beta >= 0, "beta must be non-negative");
    const double x = 2.0 * a * beta;
    double inv_sqrt_bracket;
    if (x < 700.0) {
        inv_sqrt_bracket = 1.0 / std::sqrt(1.0 + detail::sinhc(x));
    } else {
        // 1 + sinh(x)/x ~ e^x / 2x
        inv_sqrt_bracket = std::exp(-0.5 * (x - std::log(2.0 * x)));
    }
    return {inv_sqrt_bracket / (2.0 * std::sqrt(a)), beta, a};
}

inline double wavefunction(double x, const WavefunctionNorm& norm) {
    detail::require(std::isfinite(x) && std::abs(x) <= norm.a, "x must lie inside the well");
    return 2.0 * norm.C * std::cosh(norm.beta * x);
}

/// R = (2 a beta gamma + sinh(2 a beta gamma)) / (2 a beta + sinh(2 a beta)),
/// with R = gamma at beta = 0.
inline ProbabilityResult probability_interval(double a, double beta, double gamma) {
    detail::require_probability_args(a, beta, gamma);
    const double z = 2.0 * a * beta;
    double R;
    if (z < 600.0) {
        R = gamma * (1.0 + detail::sinhc(z * gamma)) / (1.0 + detail::sinhc(z));
    } else {
        // numerator and denominator scaled by 2 e^-z
        const double num = 2.0 * z * gamma * std::exp(-z) + std::exp(z * (gamma - 1.0)) -
                           std::exp(-z * (gamma + 1.0));
        const double den = 2.0 * z * std::exp(-z) + 1.0 - std::exp(-2.0 * z);
        R = num / den;
    }
    return {R, gamma, ProbabilityMethod::closed_form};
}

/// Small-beta limit R = gamma [1 + (a beta)^2 (gamma^2 - 1) / 3].
inline ProbabilityResult probability_small_beta(double a, double beta, double gamma) {
    detail::require_probability_args(a, beta, gamma);
    const double ab = a * beta;
    return {gamma * (1.0 + ab * ab * (gamma * gamma - 1.0) / 3.0), gamma, ProbabilityMethod::small_beta};
}

/// dR/dP [1/N] at the configured width, with beta taken from the fit.
/// Both dR/da and dP/da are symmetric differences with step h = rel_step * a.
inline double probability_pressure_derivative(const WellConfig& cfg, const FitCoefficients& c, double gamma,
                                              double rel_step = 1e-6) {
    cfg.validate();
    detail::require(std::isfinite(gamma) && gamma >= 0 && gamma <= 1, "gamma must lie in [0, 1]");
    const double K = characteristic_length(cfg.depth, cfg.mass);
    const double a = cfg.half_width;
    const double h = rel_step * a;
    if (pole_margin(a, K, c, Variant::consistent) < pole_tolerance)
        throw PoleSingularity("dP/da vanishes at a/K = " + std::to_string(a / K));

    auto R_of = [&](double w) {
        return probability_interval(w, beta_from_fit(w, K, c, cfg.mass, cfg.depth), gamma).R;
    };
    auto P_of = [&](double w) { return pressure_1d(w, K, c, cfg.depth); };

    const double dR = central_difference(R_of, a, h);
    const double dP = central_difference(P_of, a, h);
    if (dP == 0) throw PoleSingularity("dP/da vanishes at a/K = " + std::to_string(a / K));
    return dR / dP;
}

}  // namespace pwell
