#pragma once

#include <cmath>
#include <utility>

namespace subord {

/// Result of a 1-D minimization: location and value.
struct MinResult {
    double argmin = 0.0;
    double value = 0.0;
};

/// Golden-section search on [a, b]; f must be unimodal there.
template <typename F>
MinResult golden_section_min(F&& f, double a, double b, double tol = 1e-12) {
    static const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    const double x = 0.5 * (a + b);
    return MinResult{x, f(x)};
}

/// Coarse uniform grid over [a, b] followed by golden-section refinement
/// around the best cell.
template <typename F>
MinResult grid_then_golden_min(F&& f, double a, double b, int grid_points, double tol = 1e-12) {
    if (grid_points < 3) grid_points = 3;
    const double h = (b - a) / static_cast<double>(grid_points - 1);
    int best = 0;
    double best_val = f(a);
    for (int i = 1; i < grid_points; ++i) {
        const double v = f(a + h * static_cast<double>(i));
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    const double lo = a + h * static_cast<double>(best > 0 ? best - 1 : 0);
    const double hi = a + h * static_cast<double>(best < grid_points - 1 ? best + 1 : grid_points - 1);
    MinResult refined = golden_section_min(f, lo, hi, tol);
    if (best_val < refined.value) return MinResult{a + h * static_cast<double>(best), best_val};
    return refined;
}

} // namespace subord
