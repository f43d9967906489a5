#pragma once

// Even-parity bound states of the finite square well
//
//   V(x) = 0 for |x| < a,  V0 otherwise.
//
// With xi = alpha*a and eta = beta*a the quantisation rule is
// xi*tan(xi) = eta, xi^2 + eta^2 = n^2, and E = (xi/n)^2 * V0.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pwell/errors.hpp"
#include "pwell/units.hpp"

namespace pwell {

struct WellConfig {
    double half_width;  // a [m]
    double depth;       // V0 [J]
    double mass;        // m [kg]

    void validate() const {
        detail::require(std::isfinite(half_width) && half_width > 0, "well half-width must be positive");
        detail::require(std::isfinite(depth) && depth > 0, "well depth must be positive");
        detail::require(std::isfinite(mass) && mass > 0, "particle mass must be positive");
    }
};

/// n = a/K is the dimensionless strength, K = hbar/sqrt(2 m V0) the
/// characteristic length of the well.
struct WellStrength {
    double n;
    double K;
};

struct BoundState {
    int branch = 0;
    double xi = 0;     // alpha * a
    double eta = 0;    // beta * a
    double alpha = 0;  // [1/m]
    double beta = 0;   // [1/m]
    double energy = 0; // [J]
};

/// K = hbar / sqrt(2 m V0) [m].
inline double characteristic_length(double depth, double mass) {
    detail::require(std::isfinite(depth) && depth > 0, "well depth must be positive");
    detail::require(std::isfinite(mass) && mass > 0, "particle mass must be positive");
    return constants.hbar / std::sqrt(2.0 * mass * depth);
}

inline WellStrength well_strength(const WellConfig& cfg) {
    cfg.validate();
    const double root = std::sqrt(2.0 * cfg.mass * cfg.depth);
    return {cfg.half_width * root / constants.hbar, constants.hbar / root};
}

/// Residual of the even-parity condition in its pole-free form,
/// xi*sin(xi) - cos(xi)*sqrt(n^2 - xi^2). It has the same roots as
/// xi*tan(xi) - sqrt(n^2 - xi^2) inside each branch bracket.
inline double even_residual(double n, double xi) {
    const double eta = std::sqrt(std::max(0.0, (n - xi) * (n + xi)));
    return xi * std::sin(xi) - std::cos(xi) * eta;
}

/// xi*tan(xi) - sqrt(n^2 - xi^2), the condition as usually written.
inline double even_condition(double n, double xi) {
    return xi * std::tan(xi) - std::sqrt(std::max(0.0, (n - xi) * (n + xi)));
}

inline constexpr double root_tolerance = 1e-12;

/// Root of the even-parity condition on the bracket
/// (branch*pi, min(branch*pi + pi/2, n)). Bisection guards a Newton step on
/// the pole-free residual.
inline double solve_even_root(double n, int branch = 0) {
    detail::require(std::isfinite(n) && n > 0, "well strength n must be positive");
    detail::require(branch >= 0, "branch index must be non-negative");

    const double pi = std::numbers::pi;
    double lo = branch * pi;
    double hi = std::min(lo + pi / 2, n);
    if (!(n > lo))
        throw NoSuchBranch("no even bound state for branch " + std::to_string(branch) +
                           " at n = " + std::to_string(n));

    const double tol = root_tolerance * std::max(1.0, n);
    auto g = [n](double x) { return even_residual(n, x); };
    auto dg = [n](double x) {
        const double eta = std::sqrt(std::max(0.0, (n - x) * (n + x)));
        const double s = std::sin(x), c = std::cos(x);
        double d = s + x * c + s * eta;
        if (eta > 0) d += c * x / eta;
        return d;
    };
    // The tan form is ill-conditioned near pi/2; check it only once the
    // bracket has collapsed.
    auto converged = [&](double x) { return std::abs(even_condition(n, x)) <= tol; };

    const double g_lo = g(lo);
    const bool rising = g_lo < 0;  // orientation flips on odd branches
    double x = 0.5 * (lo + hi);
    double prev_step = hi - lo;
    for (int iter = 0; iter < 400; ++iter) {
        const double gx = g(x);
        if (gx == 0) return x;
        if ((gx < 0) == rising) lo = x;
        else hi = x;

        const double slope = dg(x);
        double next = (slope != 0) ? x - gx / slope : lo;
        if (!(next > lo && next < hi) || std::abs(next - x) > 0.5 * prev_step)
            next = 0.5 * (lo + hi);
        prev_step = std::abs(next - x);
        if (next == x || hi - lo <= 4 * std::numeric_limits<double>::epsilon() * hi) {
            x = next;
            break;
        }
        x = next;
    }
    if (!converged(x))
        throw ConvergenceFailure("even-parity root did not reach tolerance at n = " + std::to_string(n));
    return x;
}

/// Full bound state for `branch` (0 = ground state).
inline BoundState energy_exact(const WellConfig& cfg, int branch = 0) {
    const auto ws = well_strength(cfg);
    const double xi = solve_even_root(ws.n, branch);
    BoundState s;
    s.branch = branch;
    s.xi = xi;
    s.eta = std::sqrt((ws.n - xi) * (ws.n + xi));
    s.alpha = xi / cfg.half_width;
    s.beta = s.eta / cfg.half_width;
    const double ratio = xi / ws.n;
    s.energy = ratio * ratio * cfg.depth;
    return s;
}

/// Ground-state E/V0 as a function of n alone.
inline double ground_energy_ratio(double n) {
    const double xi = solve_even_root(n, 0);
    return (xi / n) * (xi / n);
}

}  // namespace pwell
