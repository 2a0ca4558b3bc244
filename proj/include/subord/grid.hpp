#pragma once

#include <numbers>
#include <stdexcept>
#include <vector>

#include "subord/power_series.hpp"

namespace subord {

/// Polar sampling of the unit disk: radial_steps rings of angular_steps
/// points each, outermost ring at `radius`. Rings are visited from the
/// outside in, where subordination failures show up first.
struct GridSpec {
    double radius = 0.99;
    int radial_steps = 64;
    int angular_steps = 512;

    void validate() const {
        if (!(radius > 0.0) || radius > 0.999)
            throw std::invalid_argument("GridSpec: radius must be in (0, 0.999]");
        if (radial_steps < 1) throw std::invalid_argument("GridSpec: radial_steps must be >= 1");
        if (angular_steps < 16) throw std::invalid_argument("GridSpec: angular_steps must be >= 16");
    }

    long point_count() const {
        return static_cast<long>(radial_steps) * static_cast<long>(angular_steps);
    }

    std::vector<Complex> points() const {
        validate();
        std::vector<Complex> pts;
        pts.reserve(static_cast<size_t>(point_count()));
        for (int i = radial_steps; i >= 1; --i) {
            const double r = radius * static_cast<double>(i) / static_cast<double>(radial_steps);
            for (int j = 0; j < angular_steps; ++j) {
                const double t =
                    2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angular_steps);
                pts.emplace_back(r * std::cos(t), r * std::sin(t));
            }
        }
        return pts;
    }
};

} // namespace subord
