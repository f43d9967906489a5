#pragma once

#include <cmath>

namespace pwell {

/// Symmetric difference (f(x+h) - f(x-h)) / 2h.
template <class F>
double central_difference(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace pwell
