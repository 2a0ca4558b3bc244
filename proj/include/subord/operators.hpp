#pragma once

#include <optional>

#include "subord/power_series.hpp"

namespace subord {

/// Coefficients of the differential operators. Strict positivity is the
/// theorem hypothesis; zeros are accepted here so that limiting/threshold
/// studies can run, and the condition evaluators raise a flag for them.
struct OperatorParams {
    double beta1 = 0.0;
    double beta2 = 0.0;
    std::optional<double> beta3;

    static OperatorParams second_order(double b1, double b2) {
        OperatorParams p;
        p.beta1 = b1;
        p.beta2 = b2;
        p.validate();
        return p;
    }

    static OperatorParams third_order(double b1, double b2, double b3) {
        OperatorParams p;
        p.beta1 = b1;
        p.beta2 = b2;
        p.beta3 = b3;
        p.validate();
        return p;
    }

    void validate() const {
        auto check = [](double b, const char* name) {
            if (!std::isfinite(b) || b < 0.0)
                throw std::invalid_argument(std::string(name) + " must be finite and >= 0");
        };
        check(beta1, "beta1");
        check(beta2, "beta2");
        if (beta3) check(*beta3, "beta3");
    }
};

inline constexpr double kUnitConstantTolerance = 1e-12;

inline void require_unit_constant(const PowerSeries& p) {
    if (std::abs(p.coeff(0) - Complex(1.0)) > kUnitConstantTolerance)
        throw std::invalid_argument("operator input must satisfy p(0) = 1");
}

/// 1 + beta1 z p' + beta2 z^2 p''. Constant term is exactly 1.
inline PowerSeries phi2(const PowerSeries& p, const OperatorParams& params) {
    require_unit_constant(p);
    const PowerSeries d1 = euler_derivative(p);
    const PowerSeries d2 = weighted_derivative(p, 2);
    PowerSeries out = PowerSeries::constant(1.0, p.order()) + params.beta1 * d1 + params.beta2 * d2;
    return out;
}

/// 1 + beta1 z p' + beta2 z^2 p'' + beta3 z^3 p'''.
inline PowerSeries phi3(const PowerSeries& p, const OperatorParams& params) {
    if (!params.beta3) throw MissingBeta3();
    const PowerSeries d3 = weighted_derivative(p, 3);
    return phi2(p, params) + *params.beta3 * d3;
}

/// f in A: f(z) = z + a2 z^2 + ... with a0 = 0 and a1 = 1 exactly.
class NormalizedFunction {
public:
    explicit NormalizedFunction(PowerSeries series) : series_(std::move(series)) {
        if (series_.order() < 1)
            throw std::invalid_argument("NormalizedFunction: order must be >= 1");
        if (series_.coeff(0) != Complex(0.0) || series_.coeff(1) != Complex(1.0))
            throw std::invalid_argument("NormalizedFunction: requires a0 = 0 and a1 = 1 exactly");
    }

    const PowerSeries& series() const { return series_; }
    int order() const { return series_.order(); }

private:
    PowerSeries series_;
};

/// S_j = z^j f^(j)(z) / f(z) for j = 1..4.
struct StarlikeFunctionals {
    PowerSeries S1;
    PowerSeries S2;
    PowerSeries S3;
    PowerSeries S4;
};

/// Compute the four quotients via (z^j f^(j) / z) * (f/z)^{-1}.
/// For normalized f the divisor f/z has constant term exactly 1, so the
/// reciprocal always exists; each result has order reduced by one.
inline StarlikeFunctionals starlike_functionals(const NormalizedFunction& f) {
    const PowerSeries& s = f.series();
    const PowerSeries ginv = reciprocal(shift_down(s));
    auto quotient = [&](int j) { return shift_down(weighted_derivative(s, j)) * ginv; };
    return StarlikeFunctionals{quotient(1), quotient(2), quotient(3), quotient(4)};
}

/// S_f = 1 + beta1 (S2 - S1^2 + S1) + beta2 (S3 + 2 S2 + 2 S1^3 - 2 S1^2 - 3 S1 S2).
/// Coefficientwise equal to phi2 applied to p = z f'/f.
inline PowerSeries S_f_operator(const NormalizedFunction& f, const OperatorParams& params) {
    const StarlikeFunctionals S = starlike_functionals(f);
    const PowerSeries S1sq = S.S1 * S.S1;
    const PowerSeries b1_bracket = S.S2 - S1sq + S.S1;
    const PowerSeries b2_bracket =
        S.S3 + 2.0 * S.S2 + 2.0 * (S.S1 * S1sq) - 2.0 * S1sq - 3.0 * (S.S1 * S.S2);
    return PowerSeries::constant(1.0, S.S1.order()) + params.beta1 * b1_bracket +
           params.beta2 * b2_bracket;
}

/// Theta_f = 1 + beta1 S1 + (beta1 + 2 beta2)(S2 - S1^2)
///             + (beta2 + 3 beta3)(2 S1^3 - 3 S1 S2 + 3 S3)
///             + beta3 (S4 - 3 S2^2 - 6 S1^4 - 4 S1 S3 + 12 S1^2 S2).
inline PowerSeries Theta_f_operator(const NormalizedFunction& f, const OperatorParams& params) {
    if (!params.beta3) throw MissingBeta3();
    const double b1 = params.beta1, b2 = params.beta2, b3 = *params.beta3;
    const StarlikeFunctionals S = starlike_functionals(f);
    const PowerSeries S1sq = S.S1 * S.S1;
    const PowerSeries S1cu = S.S1 * S1sq;
    const PowerSeries bracket_a = S.S2 - S1sq;
    const PowerSeries bracket_b = 2.0 * S1cu - 3.0 * (S.S1 * S.S2) + 3.0 * S.S3;
    const PowerSeries bracket_c = S.S4 - 3.0 * (S.S2 * S.S2) - 6.0 * (S1sq * S1sq) -
                                  4.0 * (S.S1 * S.S3) + 12.0 * (S1sq * S.S2);
    return PowerSeries::constant(1.0, S.S1.order()) + b1 * S.S1 + (b1 + 2.0 * b2) * bracket_a +
           (b2 + 3.0 * b3) * bracket_b + b3 * bracket_c;
}

/// The starlike quotient p = z f'(z)/f(z), i.e. S1.
inline PowerSeries starlike_quotient(const NormalizedFunction& f) {
    const PowerSeries& s = f.series();
    return shift_down(euler_derivative(s)) * reciprocal(shift_down(s));
}

/// Observed coefficientwise difference Theta_f - phi3(z f'/f). The two
/// expressions are not identical: the gap is 2 (beta2 + 3 beta3) S3, and the
/// identity checker reports residuals against this baseline.
inline PowerSeries theta_identity_baseline(const NormalizedFunction& f,
                                           const OperatorParams& params) {
    if (!params.beta3) throw MissingBeta3();
    const StarlikeFunctionals S = starlike_functionals(f);
    return (2.0 * (params.beta2 + 3.0 * *params.beta3)) * S.S3;
}

} // namespace subord
