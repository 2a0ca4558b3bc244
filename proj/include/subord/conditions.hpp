#pragma once

#include <numbers>
#include <optional>
#include <utility>

#include "subord/admissibility.hpp"
#include "subord/operators.hpp"

namespace subord {

/// (m, k) scale pair for the third-order conditions, k >= m >= 2.
/// The weakest admissible pair (2, 2) is the default.
struct MKPair {
    int m = 2;
    int k = 2;

    MKPair() = default;
    MKPair(int m_, int k_) : m(m_), k(k_) {
        if (m < 2 || k < m) throw InvalidMK("MKPair: requires k >= m >= 2");
    }
};

/// Identifies one sufficient-condition inequality: the dominant (sine or
/// petal), the subordination order, and the majorant h.
struct TheoremId {
    Target target = Target::Sine;
    int order = 2;
    DomainKind h_kind = DomainKind::Lemniscate;
    std::optional<std::pair<double, double>> janowski; // (C, D) when h is Janowski

    TheoremId() : TheoremId(Target::Sine, 2, DomainKind::Lemniscate) {}

    TheoremId(Target target_, int order_, DomainKind h,
              std::optional<std::pair<double, double>> jan = std::nullopt)
        : target(target_), order(order_), h_kind(h), janowski(jan) {
        if (order != 2 && order != 3) throw std::invalid_argument("TheoremId: order must be 2 or 3");
        if (target == Target::Petal && order == 3)
            throw std::invalid_argument("no third-order petal theorems");
        if (h_kind == DomainKind::Janowski) {
            if (!janowski) throw InvalidJanowskiParams("TheoremId: janowski h requires (C, D)");
            const auto [C, D] = *janowski;
            if (!(D > -1.0) || !(D < C) || !(C <= 1.0))
                throw InvalidJanowskiParams("TheoremId: requires -1 < D < C <= 1");
        } else if (janowski) {
            throw std::invalid_argument("TheoremId: (C, D) only valid for janowski h");
        }
    }

    TargetDomain h_domain() const {
        if (h_kind == DomainKind::Janowski)
            return TargetDomain::janowski(janowski->first, janowski->second);
        return TargetDomain::of_kind(h_kind);
    }

    TargetDomain conclusion_domain() const { return target_domain(target); }
};

/// Verdict of one sufficient-condition inequality, with both sides and the
/// signed margin (lhs - rhs; holds iff margin >= 0). Flags note hypothesis
/// violations that do not enter the arithmetic, e.g. a beta equal to zero.
struct ConditionReport {
    bool holds = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    TheoremId theorem;
    std::vector<std::string> hypothesis_flags;
};

namespace detail {

inline void flag_zero_betas(const OperatorParams& params, bool need_beta3,
                            std::vector<std::string>& flags) {
    if (params.beta1 == 0.0) flags.push_back("beta1_zero_outside_theorem_hypothesis");
    if (params.beta2 == 0.0) flags.push_back("beta2_zero_outside_theorem_hypothesis");
    if (need_beta3 && params.beta3 && *params.beta3 == 0.0)
        flags.push_back("beta3_zero_outside_theorem_hypothesis");
}

/// lhs/rhs for the sine-target conditions, as functions of the core
/// quantity X = nu0 (beta1 + beta2 nu1 [+ beta3 (...)]).
inline std::pair<double, double> sine_sides(const TheoremId& id, double X) {
    switch (id.h_kind) {
        case DomainKind::Lemniscate: return {X * (X - 2.0), 1.0};
        case DomainKind::Janowski: {
            const auto [C, D] = *id.janowski;
            return {X * (1.0 - D * D), (C - D) * (1.0 + std::abs(D))};
        }
        case DomainKind::Sigmoid: return {X, solve_r0()};
        case DomainKind::Crescent: return {X, std::sqrt(2.0)};
        case DomainKind::Cardioid: return {X, std::numbers::e};
        case DomainKind::Petal: return {2.0 * X, std::numbers::pi};
        case DomainKind::Exponential: return {X, std::numbers::e - 1.0};
        case DomainKind::Sine: return {X, std::sinh(1.0)};
    }
    return {0.0, 0.0};
}

/// lhs/rhs for the petal-target conditions, as functions of W = 2 beta1 - beta2.
inline std::pair<double, double> petal_sides(const TheoremId& id, double W) {
    const double s2 = std::sqrt(2.0);
    switch (id.h_kind) {
        case DomainKind::Lemniscate: return {W * (W - 4.0 * s2), 8.0};
        case DomainKind::Janowski: {
            const auto [C, D] = *id.janowski;
            return {W * (1.0 - D * D), 2.0 * s2 * (C - D) * (1.0 + std::abs(D))};
        }
        case DomainKind::Sigmoid: return {W, 2.0 * s2 * solve_r0()};
        case DomainKind::Crescent: return {W, 4.0};
        case DomainKind::Sine: return {W, 2.0 * s2 * std::sinh(1.0)};
        case DomainKind::Cardioid: return {W, 2.0 * s2 * std::numbers::e};
        case DomainKind::Exponential: return {W, 2.0 * s2 * (std::numbers::e - 1.0)};
        case DomainKind::Petal: return {W, s2 * std::numbers::pi};
    }
    return {0.0, 0.0};
}

inline ConditionReport make_report(const TheoremId& id, double lhs, double rhs,
                                   std::vector<std::string> flags) {
    ConditionReport r{false, lhs, rhs, lhs - rhs, id, std::move(flags)};
    r.holds = r.margin >= 0.0;
    return r;
}

} // namespace detail

/// Second-order condition toward p < 1 + sin z.
inline ConditionReport sine_second_order(const TheoremId& id, const OperatorParams& params) {
    if (id.target != Target::Sine || id.order != 2)
        throw std::invalid_argument("sine_second_order: theorem id mismatch");
    std::vector<std::string> flags;
    detail::flag_zero_betas(params, false, flags);
    const double X = sine_nu0() * (params.beta1 + params.beta2 * sine_nu1());
    const auto [lhs, rhs] = detail::sine_sides(id, X);
    return detail::make_report(id, lhs, rhs, std::move(flags));
}

/// Third-order condition toward p < 1 + sin z with scale pair (m, k).
inline ConditionReport sine_third_order(const TheoremId& id, const OperatorParams& params,
                                        const MKPair& mk = MKPair()) {
    if (id.target != Target::Sine || id.order != 3)
        throw std::invalid_argument("sine_third_order: theorem id mismatch");
    if (!params.beta3) throw MissingBeta3();
    if (mk.m < 2 || mk.k < mk.m) throw InvalidMK("sine_third_order: requires k >= m >= 2");
    std::vector<std::string> flags;
    detail::flag_zero_betas(params, true, flags);
    const double m = static_cast<double>(mk.m), k = static_cast<double>(mk.k);
    const double nu1 = sine_nu1();
    const double Y =
        sine_nu0() * (params.beta1 + params.beta2 * nu1 + *params.beta3 * (-m * m + 3.0 * m * (k - 1.0) * nu1));
    const auto [lhs, rhs] = detail::sine_sides(id, Y);
    return detail::make_report(id, lhs, rhs, std::move(flags));
}

/// Second-order condition toward p < 1 + asinh z.
inline ConditionReport petal_second_order(const TheoremId& id, const OperatorParams& params) {
    if (id.target != Target::Petal || id.order != 2)
        throw std::invalid_argument("petal_second_order: theorem id mismatch");
    std::vector<std::string> flags;
    detail::flag_zero_betas(params, false, flags);
    const double W = 2.0 * params.beta1 - params.beta2;
    const auto [lhs, rhs] = detail::petal_sides(id, W);
    return detail::make_report(id, lhs, rhs, std::move(flags));
}

/// Dispatch on the theorem id.
inline ConditionReport evaluate_condition(const TheoremId& id, const OperatorParams& params,
                                          const MKPair& mk = MKPair()) {
    if (id.target == Target::Sine && id.order == 2) return sine_second_order(id, params);
    if (id.target == Target::Sine && id.order == 3) return sine_third_order(id, params, mk);
    return petal_second_order(id, params);
}

/// One cell of a parameter-region scan.
struct ScanCell {
    double beta1 = 0.0;
    double beta2 = 0.0;
    double margin = 0.0;
    bool holds = false;
};

/// Raster of condition margins over a (beta1, beta2) rectangle, row-major
/// with beta1 varying slowest. For third-order theorems beta3 and (m, k)
/// are held fixed.
inline std::vector<ScanCell> region_scan(const TheoremId& id, double beta1_min, double beta1_max,
                                         double beta2_min, double beta2_max, int resolution,
                                         double beta3 = 0.0, const MKPair& mk = MKPair()) {
    if (resolution < 2) throw std::invalid_argument("region_scan: resolution must be >= 2");
    if (!(beta1_max >= beta1_min) || !(beta2_max >= beta2_min))
        throw std::invalid_argument("region_scan: empty range");
    std::vector<ScanCell> cells;
    cells.reserve(static_cast<size_t>(resolution) * static_cast<size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
        const double b1 =
            beta1_min + (beta1_max - beta1_min) * static_cast<double>(i) / static_cast<double>(resolution - 1);
        for (int j = 0; j < resolution; ++j) {
            const double b2 =
                beta2_min + (beta2_max - beta2_min) * static_cast<double>(j) / static_cast<double>(resolution - 1);
            const OperatorParams params = id.order == 3 ? OperatorParams::third_order(b1, b2, beta3)
                                                        : OperatorParams::second_order(b1, b2);
            const ConditionReport r = evaluate_condition(id, params, mk);
            cells.push_back(ScanCell{b1, b2, r.margin, r.holds});
        }
    }
    return cells;
}

} // namespace subord
