#pragma once

// Degree-5 inverse-power fit of the ground-state energy,
//
//   E/V0 = sum_{i=0}^{5} c_i / n^i,
//
// solved as an ordinary polynomial in u = 1/n by column-pivoted Householder
// QR. The 1/n Vandermonde matrix is badly conditioned near n = 1, so the
// normal equations are never formed.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pwell/errors.hpp"
#include "pwell/spectrum.hpp"

namespace pwell {

inline constexpr int fit_terms = 6;

struct FitGrid {
    double n_start = 1.0;
    double n_stop = 10.0;
    int n_count = 12;

    void validate() const {
        detail::require(std::isfinite(n_start) && std::isfinite(n_stop), "fit grid bounds must be finite");
        detail::require(n_start >= 1.0, "fit grid must start at n >= 1");
        detail::require(n_start < n_stop, "fit grid needs n_start < n_stop");
        detail::require(n_count >= 12, "fit grid needs at least 12 points");
    }

    friend bool operator==(const FitGrid&, const FitGrid&) = default;
};

/// Default sampling: 12 uniform points on [1, 10], endpoints included.
inline constexpr FitGrid default_fit_grid{1.0, 10.0, 12};

enum class FitSource { paper, refit };

struct FitCoefficients {
    std::array<double, fit_terms> c{};
    double sigma = 0.0;
    FitSource source = FitSource::refit;
    std::optional<FitGrid> grid;

    double operator[](std::size_t i) const { return c[i]; }
};

/// The published coefficient set with its quoted standard deviation.
inline FitCoefficients paper_coefficients() {
    return {{-0.000618, 0.018006, 2.259278, -3.678692, 2.908830, -0.960535}, 2.2e-6, FitSource::paper,
            std::nullopt};
}

inline FitCoefficients make_coefficients(const std::array<double, fit_terms>& c) {
    return {c, 0.0, FitSource::refit, std::nullopt};
}

struct EnergySample {
    double n;
    double energy_ratio;  // E/V0
};

inline std::vector<double> grid_points(const FitGrid& grid) {
    grid.validate();
    std::vector<double> ns(static_cast<std::size_t>(grid.n_count));
    const double step = (grid.n_stop - grid.n_start) / (grid.n_count - 1);
    for (int i = 0; i < grid.n_count; ++i) ns[static_cast<std::size_t>(i)] = grid.n_start + i * step;
    ns.back() = grid.n_stop;
    return ns;
}

/// Exact ground-state E/V0 at each grid point.
inline std::vector<EnergySample> sample_energies(const FitGrid& grid) {
    std::vector<EnergySample> out;
    for (double n : grid_points(grid)) out.push_back({n, ground_energy_ratio(n)});
    return out;
}

/// Horner evaluation of the series in 1/n.
inline double eval_fit(const FitCoefficients& coeffs, double n) {
    detail::require(std::isfinite(n) && n > 0, "fit evaluation needs n > 0");
    const double u = 1.0 / n;
    double acc = 0.0;
    for (int i = fit_terms - 1; i >= 0; --i) acc = acc * u + coeffs.c[static_cast<std::size_t>(i)];
    return acc;
}

/// Least-squares fit of the inverse-power series; sigma is the RMS residual.
inline FitCoefficients fit_inverse_poly(std::span<const EnergySample> points,
                                        std::optional<FitGrid> grid = std::nullopt) {
    const auto rows = static_cast<Eigen::Index>(points.size());
    detail::require(rows >= 12, "inverse-power fit needs at least 12 points");
    {
        std::vector<double> ns;
        for (const auto& p : points) ns.push_back(p.n);
        std::sort(ns.begin(), ns.end());
        detail::require(std::adjacent_find(ns.begin(), ns.end()) == ns.end(),
                        "inverse-power fit needs distinct n values");
    }

    Eigen::MatrixXd design(rows, fit_terms);
    Eigen::VectorXd rhs(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const auto& p = points[static_cast<std::size_t>(r)];
        detail::require(std::isfinite(p.n) && p.n > 0, "fit abscissae must be positive");
        detail::require(std::isfinite(p.energy_ratio), "fit ordinates must be finite");
        const double u = 1.0 / p.n;
        double pw = 1.0;
        for (int j = 0; j < fit_terms; ++j, pw *= u) design(r, j) = pw;
        rhs(r) = p.energy_ratio;
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < fit_terms)
        throw SingularSystem("inverse-power design matrix is rank deficient (rank " +
                             std::to_string(qr.rank()) + ")");
    const Eigen::VectorXd sol = qr.solve(rhs);

    FitCoefficients out;
    for (int j = 0; j < fit_terms; ++j) out.c[static_cast<std::size_t>(j)] = sol(j);
    const Eigen::VectorXd resid = design * sol - rhs;
    out.sigma = std::sqrt(resid.squaredNorm() / static_cast<double>(rows));
    out.source = FitSource::refit;
    out.grid = grid;
    return out;
}

inline FitCoefficients refit(const FitGrid& grid = default_fit_grid) {
    const auto samples = sample_energies(grid);
    return fit_inverse_poly(samples, grid);
}

}  // namespace pwell
