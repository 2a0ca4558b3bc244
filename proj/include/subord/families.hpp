#pragma once

#include <random>
#include <string>

#include "subord/domains.hpp"
#include "subord/power_series.hpp"

namespace subord {

/// Deterministic test-function families with p(0) = 1. All members are
/// generated from explicit grids, so the same spec always produces the
/// same family.
enum class FamilyKind { Linear, Quadratic, ScaledTarget };

struct FamilySpec {
    FamilyKind kind = FamilyKind::Linear;
    double coeff_min = -0.2; // grid range for the linear / quadratic coefficients
    double coeff_max = 0.2;
    int count = 41;   // linear: members; quadratic: members per axis
    int order = 24;   // truncation for scaled-target members

    static FamilySpec linear(double lo = -0.2, double hi = 0.2, int count = 81) {
        return FamilySpec{FamilyKind::Linear, lo, hi, count, PowerSeries::kDefaultOrder};
    }
    static FamilySpec quadratic(double lo = -0.15, double hi = 0.15, int per_axis = 11) {
        return FamilySpec{FamilyKind::Quadratic, lo, hi, per_axis, PowerSeries::kDefaultOrder};
    }
    static FamilySpec scaled_target(int count = 16, int order = PowerSeries::kDefaultOrder) {
        return FamilySpec{FamilyKind::ScaledTarget, 0.0, 1.0, count, order};
    }
};

inline bool parse_family_kind(const std::string& s, FamilyKind& out) {
    if (s == "linear") out = FamilyKind::Linear;
    else if (s == "quadratic") out = FamilyKind::Quadratic;
    else if (s == "scaled") out = FamilyKind::ScaledTarget;
    else return false;
    return true;
}

/// Materialize a family. The scaled-target family 1 + lambda (q - 1),
/// lambda in (0, 1], needs the conclusion target's series.
inline std::vector<PowerSeries> build_family(const FamilySpec& spec, const TargetDomain& target) {
    std::vector<PowerSeries> family;
    auto grid_value = [&](int i) {
        return spec.coeff_min +
               (spec.coeff_max - spec.coeff_min) * static_cast<double>(i) /
                   static_cast<double>(spec.count - 1);
    };
    switch (spec.kind) {
        case FamilyKind::Linear: {
            if (spec.count < 2) throw std::invalid_argument("build_family: count must be >= 2");
            family.reserve(static_cast<size_t>(spec.count));
            for (int i = 0; i < spec.count; ++i)
                family.push_back(PowerSeries{Complex(1.0), Complex(grid_value(i))});
            break;
        }
        case FamilyKind::Quadratic: {
            if (spec.count < 2) throw std::invalid_argument("build_family: count must be >= 2");
            family.reserve(static_cast<size_t>(spec.count) * static_cast<size_t>(spec.count));
            for (int i = 0; i < spec.count; ++i)
                for (int j = 0; j < spec.count; ++j)
                    family.push_back(
                        PowerSeries{Complex(1.0), Complex(grid_value(i)), Complex(grid_value(j))});
            break;
        }
        case FamilyKind::ScaledTarget: {
            if (spec.count < 1) throw std::invalid_argument("build_family: count must be >= 1");
            const PowerSeries q = generator_series(target, spec.order);
            const PowerSeries one = PowerSeries::constant(1.0, spec.order);
            family.reserve(static_cast<size_t>(spec.count));
            for (int i = 1; i <= spec.count; ++i) {
                const double lambda = static_cast<double>(i) / static_cast<double>(spec.count);
                family.push_back(one + lambda * (q - one));
            }
            break;
        }
    }
    return family;
}

/// Random normalized f = z + a2 z^2 + ... with |a_k| <= 1/(2 k^2), so f/z
/// keeps its reciprocal well-conditioned on the disk. Real and imaginary
/// parts are drawn uniformly from a square inscribed in that modulus bound.
inline PowerSeries random_normalized_series(int degree, std::mt19937& rng) {
    if (degree < 1) throw std::invalid_argument("random_normalized_series: degree must be >= 1");
    std::vector<Complex> c(static_cast<size_t>(degree) + 1, Complex(0.0));
    c[1] = 1.0;
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int k = 2; k <= degree; ++k) {
        const double bound = 1.0 / (2.0 * static_cast<double>(k) * static_cast<double>(k));
        const double half_side = bound / std::sqrt(2.0);
        c[static_cast<size_t>(k)] = Complex(half_side * unit(rng), half_side * unit(rng));
    }
    return PowerSeries(std::move(c));
}

} // namespace subord
