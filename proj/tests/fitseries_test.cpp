#include <gtest/gtest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "pwell/fitseries.hpp"

using namespace pwell;

namespace {

std::vector<EnergySample> synthetic(const std::array<double, 6>& c, const FitGrid& grid) {
    std::vector<EnergySample> pts;
    for (double n : grid_points(grid)) pts.push_back({n, eval_fit(make_coefficients(c), n)});
    return pts;
}

double ratio(const FitCoefficients& f) { return -7.5 * f.c[5] / f.c[4]; }

}  // namespace

TEST(FitGrid, Validation) {
    EXPECT_NO_THROW(default_fit_grid.validate());
    EXPECT_THROW((FitGrid{1.0, 10.0, 11}.validate()), DomainError);
    EXPECT_THROW((FitGrid{0.5, 10.0, 20}.validate()), DomainError);
    EXPECT_THROW((FitGrid{5.0, 5.0, 20}.validate()), DomainError);
}

TEST(SampleEnergies, GridConstruction) {
    const auto pts = sample_energies({1.0, 10.0, 91});
    ASSERT_EQ(pts.size(), 91u);
    EXPECT_EQ(pts.front().n, 1.0);
    EXPECT_EQ(pts.back().n, 10.0);
    for (const auto& p : pts) {
        EXPECT_GT(p.energy_ratio, 0);
        EXPECT_LT(p.energy_ratio, 1);
    }
    // n = 2 is the 11th point
    EXPECT_NEAR(pts[10].n, 2.0, 1e-14);
    const double xi = oracle::ground_xi_bisection(2.0);
    EXPECT_NEAR(pts[10].energy_ratio, xi * xi / 4, 1e-12);
    EXPECT_NEAR(pts[10].energy_ratio, 0.2652, 1e-4);
}

TEST(EvalFit, PaperSetAtTwo) {
    const auto p = paper_coefficients();
    // -0.000618 + 0.018006/2 + 2.259278/4 - 3.678692/8 + 2.908830/16 - 0.960535/32
    EXPECT_NEAR(eval_fit(p, 2.0), 0.26515315625, 1e-14);
    EXPECT_NEAR(eval_fit(p, 2.0), 0.265153, 1e-6);
    EXPECT_LE(std::abs(eval_fit(p, 2.0) - ground_energy_ratio(2.0)), 1e-4);
}

TEST(EvalFit, ConstantSeriesAndDomain) {
    const auto one = make_coefficients({1, 0, 0, 0, 0, 0});
    for (double n : {0.3, 1.0, 7.0}) EXPECT_EQ(eval_fit(one, n), 1.0);
    EXPECT_THROW(eval_fit(one, 0.0), DomainError);
    EXPECT_THROW(eval_fit(one, -2.0), DomainError);
}

TEST(PaperCoefficients, PublishedValues) {
    const auto p = paper_coefficients();
    EXPECT_EQ(p.c, (std::array<double, 6>{-0.000618, 0.018006, 2.259278, -3.678692, 2.908830, -0.960535}));
    EXPECT_EQ(p.sigma, 2.2e-6);
    EXPECT_EQ(p.source, FitSource::paper);
    EXPECT_FALSE(p.grid.has_value());
}

TEST(FitInversePoly, DefaultGridRefit) {
    const auto f = refit();
    EXPECT_EQ(f.source, FitSource::refit);
    ASSERT_TRUE(f.grid.has_value());
    EXPECT_EQ(*f.grid, default_fit_grid);
    EXPECT_LE(f.sigma, 1e-5);
    EXPECT_NEAR(f.sigma, 5.160090662969852e-06, 1e-9);
    EXPECT_NEAR(f.c[2] / 2.259278, 1.0, 0.15);
    EXPECT_NEAR(ratio(f), 2.357303624953452, 1e-6);
}

// Uniform 0.1 spacing cannot get below 1e-5: its least-squares optimum is 5.0e-5.
TEST(FitInversePoly, DenseGridResidualFloor) {
    const auto f = refit({1.0, 10.0, 91});
    EXPECT_NEAR(f.sigma, 5.0162202939139416e-05, 1e-8);
    EXPECT_NEAR(f.c[2] / 2.259278, 1.0, 0.15);
}

TEST(FitInversePoly, ResidualsBoundedBySigma) {
    for (const FitGrid& g : {default_fit_grid, FitGrid{1.0, 10.0, 91}, FitGrid{1.0, 5.0, 41}}) {
        const auto f = refit(g);
        for (const auto& p : sample_energies(g)) EXPECT_LE(std::abs(eval_fit(f, p.n) - p.energy_ratio), 10 * f.sigma);
    }
}

TEST(FitInversePoly, RecoversExactModel) {
    const auto p = paper_coefficients();
    const auto f = fit_inverse_poly(synthetic(p.c, default_fit_grid));
    for (int i = 0; i < 6; ++i) EXPECT_NEAR(f.c[static_cast<std::size_t>(i)], p.c[static_cast<std::size_t>(i)], 1e-9);
    EXPECT_LT(f.sigma, 1e-12);
}

TEST(FitInversePoly, RecoversRandomModels) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> dist(-10, 10);
    const FitGrid grid{1.0, 10.0, 91};
    for (int k = 0; k < 100; ++k) {
        std::array<double, 6> c;
        for (auto& x : c) x = dist(rng);
        const auto f = fit_inverse_poly(synthetic(c, grid), grid);
        for (std::size_t i = 0; i < 6; ++i) ASSERT_NEAR(f.c[i], c[i], 1e-9) << k << ' ' << i;
    }
}

TEST(FitInversePoly, RatioStableAcrossGrids) {
    const double r1 = ratio(refit({1.0, 10.0, 12}));
    const double r2 = ratio(refit({1.0, 9.0, 12}));
    const double r3 = ratio(refit({1.0, 10.0, 14}));
    for (double r : {r1, r2, r3}) EXPECT_NEAR(r / 2.476601, 1.0, 0.10);
    const double hi = std::max({r1, r2, r3}), lo = std::min({r1, r2, r3});
    EXPECT_LE(hi / lo - 1.0, 0.10);
}

TEST(FitInversePoly, PreconditionsAndSingularity) {
    std::vector<EnergySample> few(11, EnergySample{2.0, 0.3});
    for (std::size_t i = 0; i < few.size(); ++i) few[i].n = 1.0 + static_cast<double>(i);
    EXPECT_THROW(fit_inverse_poly(few), DomainError);

    auto dup = synthetic(paper_coefficients().c, default_fit_grid);
    dup[3].n = dup[2].n;
    EXPECT_THROW(fit_inverse_poly(dup), DomainError);

    // higher powers of 1/n underflow to zero, leaving a rank-deficient design
    std::vector<EnergySample> degenerate;
    for (int i = 0; i < 12; ++i) degenerate.push_back({1e200 * (1 + i), 0.1});
    EXPECT_THROW(fit_inverse_poly(degenerate), SingularSystem);
}
