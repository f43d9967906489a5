#pragma once

// SI constants, the small unit grammar accepted at the CLI boundary, and the
// hydrogen-like preset. Everything past parsing works in SI.

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>

#include "pwell/errors.hpp"

namespace pwell {

/// CODATA 2018 values. The electronvolt is exact by SI definition.
struct PhysicalConstants {
    double hbar;           // J s
    double electron_mass;  // kg
    double electronvolt;   // J
};

inline constexpr PhysicalConstants constants{
    1.054571817e-34,
    9.1093837015e-31,
    1.602176634e-19,
};

enum class Dimension { length, energy, mass, force, dimensionless };

enum class Unit { m, nm, angstrom, J, eV, kg, me, N, none };

struct UnitInfo {
    Unit unit;
    std::string_view symbol;
    Dimension dimension;
    double to_si;
};

inline constexpr std::array<UnitInfo, 9> unit_table{{
    {Unit::m, "m", Dimension::length, 1.0},
    {Unit::nm, "nm", Dimension::length, 1e-9},
    {Unit::angstrom, "angstrom", Dimension::length, 1e-10},
    {Unit::J, "J", Dimension::energy, 1.0},
    {Unit::eV, "eV", Dimension::energy, constants.electronvolt},
    {Unit::kg, "kg", Dimension::mass, 1.0},
    {Unit::me, "me", Dimension::mass, constants.electron_mass},
    {Unit::N, "N", Dimension::force, 1.0},
    {Unit::none, "", Dimension::dimensionless, 1.0},
}};

constexpr const UnitInfo& info(Unit u) {
    return unit_table[static_cast<std::size_t>(u)];
}

constexpr std::string_view si_symbol(Dimension d) {
    switch (d) {
        case Dimension::length: return "m";
        case Dimension::energy: return "J";
        case Dimension::mass: return "kg";
        case Dimension::force: return "N";
        case Dimension::dimensionless: return "";
    }
    return "";
}

constexpr std::string_view dimension_name(Dimension d) {
    switch (d) {
        case Dimension::length: return "length";
        case Dimension::energy: return "energy";
        case Dimension::mass: return "mass";
        case Dimension::force: return "force";
        case Dimension::dimensionless: return "dimensionless";
    }
    return "";
}

/// A value in SI units tagged with its dimension.
struct Quantity {
    double value = 0.0;
    Dimension dimension = Dimension::dimensionless;

    friend bool operator==(const Quantity&, const Quantity&) = default;
};

inline Unit parse_unit(std::string_view symbol) {
    for (const auto& u : unit_table)
        if (u.symbol == symbol) return u.unit;
    throw UnknownUnit("unknown unit '" + std::string(symbol) + "'");
}

inline Quantity from_unit(double value, Unit u) {
    const auto& ui = info(u);
    return {value * ui.to_si, ui.dimension};
}

/// Value of `q` expressed in unit `u`; rejects mismatched dimensions.
inline double to_unit(const Quantity& q, Unit u) {
    const auto& ui = info(u);
    if (ui.dimension != q.dimension)
        throw DomainError("cannot express " + std::string(dimension_name(q.dimension)) +
                          " in " + std::string(dimension_name(ui.dimension)) + " unit '" +
                          std::string(ui.symbol) + "'");
    return q.value / ui.to_si;
}

inline Quantity require_dimension(const Quantity& q, Dimension d) {
    if (q.dimension != d)
        throw DomainError("expected a " + std::string(dimension_name(d)) + " quantity, got " +
                          std::string(dimension_name(q.dimension)));
    return q;
}

/// Parses `<number><unit>`, e.g. "13.6058eV", "0.529angstrom", "1me", "0.5".
/// Whitespace between the number and the unit is allowed.
inline Quantity parse_quantity(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    const char* first = text.data();
    const char* last = first + text.size();
    // from_chars does not accept a leading '+'
    if (first != last && *first == '+') ++first;

    double value = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
    if (ec != std::errc{} || !std::isfinite(value))
        throw MalformedNumber("malformed number in '" + std::string(text) + "'");

    std::string_view rest(ptr, static_cast<std::size_t>(last - ptr));
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front())))
        rest.remove_prefix(1);
    // Alphabetic tails like "inf" are caught above; anything non-alpha left
    // here is a broken number rather than an unknown unit.
    for (char ch : rest)
        if (!std::isalpha(static_cast<unsigned char>(ch)))
            throw MalformedNumber("malformed number in '" + std::string(text) + "'");

    return from_unit(value, parse_unit(rest));
}

/// Significant digits for formatting; 0 selects the shortest string that
/// parses back to the identical double.
inline constexpr int round_trip = 0;

inline std::string format_number(double v, int significant_digits = 9) {
    if (significant_digits == round_trip) {
        std::array<char, 64> buf{};
        auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
        (void)ec;
        return std::string(buf.data(), ptr);
    }
    std::array<char, 64> buf{};
    const int len = std::snprintf(buf.data(), buf.size(), "%.*g", significant_digits, v);
    return std::string(buf.data(), static_cast<std::size_t>(len));
}

inline std::string format_quantity(const Quantity& q, int significant_digits = 9) {
    return format_number(q.value, significant_digits) + std::string(si_symbol(q.dimension));
}

/// Inputs of the hydrogen-like illustration: Bohr-radius half-width, a
/// 13.6058 eV deep well and a bare electron.
struct HydrogenPreset {
    static constexpr double depth_ev = 13.6058;
    static constexpr double width_m = 0.529e-10;

    static constexpr double depth() { return depth_ev * constants.electronvolt; }
    static constexpr double mass() { return constants.electron_mass; }
    static constexpr double width() { return width_m; }
};

}  // namespace pwell
