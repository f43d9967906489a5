#pragma once

// Coefficient-set JSON documents. Layout:
//
//   {"c": [c0, ..., c5], "sigma": s, "source": "paper" | "refit",
//    "grid": null | {"n_start": .., "n_stop": .., "n_count": ..}}

#include <cmath>
#include <fstream>
#include <iterator>
#include <string>

#include <json.hpp>

#include "pwell/errors.hpp"
#include "pwell/fitseries.hpp"

namespace pwell {

inline nlohmann::json to_json(const FitCoefficients& f) {
    nlohmann::json j;
    j["c"] = f.c;
    j["sigma"] = f.sigma;
    j["source"] = f.source == FitSource::paper ? "paper" : "refit";
    if (f.grid)
        j["grid"] = {{"n_start", f.grid->n_start}, {"n_stop", f.grid->n_stop}, {"n_count", f.grid->n_count}};
    else
        j["grid"] = nullptr;
    return j;
}

inline FitCoefficients coefficients_from_json(const nlohmann::json& j) {
    try {
        FitCoefficients f;
        const auto& c = j.at("c");
        detail::require(c.is_array() && c.size() == fit_terms, "coefficient document needs exactly 6 values in 'c'");
        for (std::size_t i = 0; i < fit_terms; ++i) {
            f.c[i] = c[i].get<double>();
            detail::require(std::isfinite(f.c[i]), "coefficients must be finite");
        }
        f.sigma = j.at("sigma").get<double>();
        detail::require(std::isfinite(f.sigma) && f.sigma >= 0, "sigma must be non-negative");
        const auto source = j.at("source").get<std::string>();
        if (source == "paper") f.source = FitSource::paper;
        else if (source == "refit") f.source = FitSource::refit;
        else throw DomainError("unknown coefficient source '" + source + "'");
        if (j.contains("grid") && !j["grid"].is_null()) {
            const auto& g = j["grid"];
            FitGrid grid{g.at("n_start").get<double>(), g.at("n_stop").get<double>(), g.at("n_count").get<int>()};
            grid.validate();
            f.grid = grid;
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("invalid coefficient document: ") + e.what());
    }
}

inline FitCoefficients parse_coefficients(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("invalid coefficient document: ") + e.what());
    }
    return coefficients_from_json(j);
}

inline FitCoefficients load_coefficients(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open coefficient file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_coefficients(text);
}

inline void save_coefficients(const FitCoefficients& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write coefficient file '" + path + "'");
    out << to_json(f).dump(2) << '\n';
}

}  // namespace pwell
