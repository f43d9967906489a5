#include <gtest/gtest.h>

#include <random>

#include "pwell/units.hpp"

using namespace pwell;

TEST(Units, ConstantsArePositive) {
    EXPECT_GT(constants.hbar, 0);
    EXPECT_GT(constants.electron_mass, 0);
    EXPECT_GT(constants.electronvolt, 0);
}

TEST(Units, ParsesElectronvolts) {
    const auto q = parse_quantity("13.6058eV");
    EXPECT_EQ(q.dimension, Dimension::energy);
    EXPECT_DOUBLE_EQ(q.value, 13.6058 * 1.602176634e-19);
    EXPECT_NEAR(q.value, 2.17989e-18, 1e-23);
}

TEST(Units, ParsesLengths) {
    EXPECT_EQ(parse_quantity("1m"), (Quantity{1.0, Dimension::length}));
    const auto a = parse_quantity("0.529angstrom");
    EXPECT_EQ(a.dimension, Dimension::length);
    EXPECT_DOUBLE_EQ(a.value, 0.529e-10);
    EXPECT_DOUBLE_EQ(parse_quantity("2.5nm").value, 2.5e-9);
    EXPECT_DOUBLE_EQ(parse_quantity("1e-10m").value, 1e-10);
    EXPECT_DOUBLE_EQ(parse_quantity(" 3 m ").value, 3.0);
}

TEST(Units, ParsesMassForceAndBareNumbers) {
    EXPECT_EQ(parse_quantity("1me"), (Quantity{constants.electron_mass, Dimension::mass}));
    EXPECT_EQ(parse_quantity("2kg").dimension, Dimension::mass);
    EXPECT_EQ(parse_quantity("4.5N"), (Quantity{4.5, Dimension::force}));
    EXPECT_EQ(parse_quantity("0.25"), (Quantity{0.25, Dimension::dimensionless}));
    EXPECT_EQ(parse_quantity("1eV").dimension, Dimension::energy);
    EXPECT_DOUBLE_EQ(parse_quantity("-1m").value, -1.0);
}

TEST(Units, RejectsBadInput) {
    EXPECT_THROW(parse_quantity("3furlong"), UnknownUnit);
    EXPECT_THROW(parse_quantity("3 Ev"), UnknownUnit);
    EXPECT_THROW(parse_quantity("abc"), MalformedNumber);
    EXPECT_THROW(parse_quantity(""), MalformedNumber);
    EXPECT_THROW(parse_quantity("inf"), MalformedNumber);
    EXPECT_THROW(parse_quantity("nan"), MalformedNumber);
    EXPECT_THROW(parse_quantity("1.2.3m"), MalformedNumber);
}

TEST(Units, DimensionalSafety) {
    const auto len = parse_quantity("1nm");
    EXPECT_THROW(to_unit(len, Unit::eV), DomainError);
    EXPECT_THROW(require_dimension(len, Dimension::mass), DomainError);
    EXPECT_DOUBLE_EQ(to_unit(len, Unit::angstrom), 10.0);
}

TEST(Units, ConversionRoundTripWithinOneStep) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> mant(1.0, 10.0);
    std::uniform_int_distribution<int> expo(-30, 30);
    for (const auto& info : unit_table) {
        for (int k = 0; k < 200; ++k) {
            const double v = mant(rng) * std::pow(10.0, expo(rng));
            const auto q = from_unit(v, info.unit);
            const double back = to_unit(q, info.unit);
            EXPECT_LE(std::abs(back - v), std::abs(std::nextafter(v, 2 * v) - v)) << info.symbol;
        }
    }
}

TEST(Units, FormatParseRoundTrip) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> mant(-10.0, 10.0);
    std::uniform_int_distribution<int> expo(-40, 40);
    const Dimension dims[] = {Dimension::length, Dimension::energy, Dimension::mass, Dimension::force,
                              Dimension::dimensionless};
    for (auto d : dims) {
        for (int k = 0; k < 200; ++k) {
            const Quantity q{mant(rng) * std::pow(10.0, expo(rng)), d};
            const auto back = parse_quantity(format_quantity(q, round_trip));
            EXPECT_EQ(back.dimension, d);
            EXPECT_LE(std::abs(back.value - q.value), 1e-15 * std::abs(q.value));
        }
    }
}

TEST(Units, DefaultFormattingHasNineDigits) {
    EXPECT_EQ(format_quantity({0.529e-10, Dimension::length}), "5.29e-11m");
    EXPECT_EQ(format_quantity({1.0 / 3.0, Dimension::energy}), "0.333333333J");
    EXPECT_EQ(format_quantity({2.0, Dimension::dimensionless}), "2");
}

TEST(Units, HydrogenPreset) {
    EXPECT_DOUBLE_EQ(HydrogenPreset::width(), 0.529e-10);
    EXPECT_DOUBLE_EQ(HydrogenPreset::depth(), parse_quantity("13.6058eV").value);
    EXPECT_DOUBLE_EQ(HydrogenPreset::mass(), parse_quantity("1me").value);
}
