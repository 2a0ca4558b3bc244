#pragma once

#include <numbers>
#include <optional>

#include "subord/domains.hpp"
#include "subord/grid.hpp"
#include "subord/minimize.hpp"
#include "subord/power_series.hpp"

namespace subord {

/// The two dominants with worked-out admissibility profiles.
enum class Target { Sine, Petal };

inline TargetDomain target_domain(Target t) {
    return t == Target::Sine ? TargetDomain::sine() : TargetDomain::petal();
}

inline std::string target_name(Target t) { return t == Target::Sine ? "sine" : "petal"; }

// Boundary extremal functions. theta parametrizes zeta = e^{i theta}.

/// |q'(zeta)| for q = 1 + sin z.
inline double n1(double theta) {
    const double ch = std::cosh(std::sin(theta));
    const double sn = std::sin(std::cos(theta));
    return std::sqrt(ch * ch - sn * sn);
}

/// Re(zeta q''/q') for q = 1 + sin z.
inline double n2(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return (-c * std::sin(2.0 * c) + s * std::sinh(2.0 * s)) /
           (std::cos(2.0 * c) + std::cosh(2.0 * s));
}

/// Re(zeta^2 q'''/q') for q = 1 + sin z.
inline double n3(double theta) { return -std::cos(2.0 * theta); }

inline constexpr double kSingularCosTolerance = 1e-9;

/// |q'(zeta)| for q = 1 + asinh z. The derivative modulus is
/// 1/sqrt(2|cos theta|); |cos theta| because |1 + e^{2 i theta}| = 2|cos theta|.
/// Angles with cos theta ~ 0 are singular (q' blows up at zeta = +-i).
inline double n4(double theta) {
    const double ac = std::abs(std::cos(theta));
    if (ac < kSingularCosTolerance)
        throw SingularTheta("n4: |cos theta| below exclusion tolerance");
    return 1.0 / (std::sqrt(2.0) * std::sqrt(ac));
}

/// Re(zeta q''/q') for q = 1 + asinh z: constant -1/2.
inline double n5(double theta) {
    (void)theta;
    return -0.5;
}

/// Direct evaluation of Re(-e^{2 i theta} / (1 + e^{2 i theta})), the
/// quantity n5 abbreviates; used to cross-check the constancy claim.
/// The denominator is formed as 2 cos^2 + 2 i sin cos, which equals
/// 1 + e^{2 i theta} without the cancellation that would otherwise swamp
/// the tiny real part near the poles.
inline double n5_from_generator(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    const Complex num(-std::cos(2.0 * theta), -std::sin(2.0 * theta));
    const Complex den(2.0 * c * c, 2.0 * s * c);
    return (num / den).real();
}

inline double sine_nu0() { return std::sqrt(1.0 - std::sin(1.0) * std::sin(1.0)); }
inline double sine_nu1() { return -std::sin(2.0) / (1.0 + std::cos(2.0)); }
inline double petal_nu0() { return 1.0 / std::sqrt(2.0); }
inline double petal_nu1() { return -0.5; }

/// Per-target extremal constants: nu0 = min |q'| over the boundary,
/// nu1 = min Re(zeta q''/q'), plus excluded angles where the profile is
/// singular.
struct AdmissibilityProfile {
    Target target = Target::Sine;
    double nu0 = 0.0;
    double nu1 = 0.0;
    std::vector<double> theta_exclusions;
};

/// Closed-form constants, cross-checked against a grid + golden-section
/// minimization of the boundary functions (agreement to 1e-8).
inline AdmissibilityProfile nu_constants(Target target) {
    AdmissibilityProfile p;
    p.target = target;
    const double two_pi = 2.0 * std::numbers::pi;
    if (target == Target::Sine) {
        p.nu0 = sine_nu0();
        p.nu1 = sine_nu1();
        const MinResult m1 = grid_then_golden_min([](double t) { return n1(t); }, 0.0, two_pi, 100000);
        const MinResult m2 = grid_then_golden_min([](double t) { return n2(t); }, 0.0, two_pi, 100000);
        if (std::abs(m1.value - p.nu0) > 1e-8 || std::abs(m2.value - p.nu1) > 1e-8)
            throw Error("nu_constants: numeric minimization disagrees with closed form");
    } else {
        p.nu0 = petal_nu0();
        p.nu1 = petal_nu1();
        p.theta_exclusions = {std::numbers::pi / 2.0, 3.0 * std::numbers::pi / 2.0};
        // n4 is even about 0 and singular at pi/2; minimize on a safe interval.
        const MinResult m4 =
            grid_then_golden_min([](double t) { return n4(t); }, -1.2, 1.2, 100000);
        if (std::abs(m4.value - p.nu0) > 1e-8)
            throw Error("nu_constants: numeric minimization disagrees with closed form");
    }
    return p;
}

/// Positive root of r^2 + 2 cot(1) r - 1 = 0, by bisection plus one Newton
/// polish; residual below 1e-12.
inline double solve_r0() {
    const double cot1 = std::cos(1.0) / std::sin(1.0);
    auto g = [cot1](double r) { return r * r + 2.0 * cot1 * r - 1.0; };
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    double r = 0.5 * (lo + hi);
    for (int i = 0; i < 3; ++i) r -= g(r) / (2.0 * r + 2.0 * cot1);
    return r;
}

/// Boundary tuple (r, s, t[, u]) for the admissibility inequalities.
/// r and s are determined by the target's generator at zeta = e^{i theta}
/// and the scale factor m; t and u are free inputs to be tested.
struct AdmissibilityTuple {
    Complex r;
    Complex s;
    Complex t;
    std::optional<Complex> u;
    double theta = 0.0;
    int m = 1;
    std::optional<int> k;
};

inline Complex boundary_q(Target target, double theta) {
    const Complex zeta(std::cos(theta), std::sin(theta));
    if (target == Target::Sine) return Complex(1.0) + std::sin(zeta);
    return Complex(1.0) + std::asinh(zeta);
}

inline Complex boundary_zeta_qprime(Target target, double theta) {
    const Complex zeta(std::cos(theta), std::sin(theta));
    if (target == Target::Sine) return zeta * std::cos(zeta);
    const Complex root = std::sqrt(Complex(1.0) + zeta * zeta);
    if (std::abs(root) < 1e-7)
        throw SingularTheta("boundary_zeta_qprime: q' singular at theta");
    return zeta / root;
}

/// Tuple with r = q(zeta), s = m zeta q'(zeta) filled in from the formulas.
inline AdmissibilityTuple make_boundary_tuple(Target target, double theta, int m, Complex t,
                                              std::optional<Complex> u = std::nullopt,
                                              std::optional<int> k = std::nullopt) {
    AdmissibilityTuple tup;
    tup.theta = theta;
    tup.m = m;
    tup.k = k;
    tup.r = boundary_q(target, theta);
    tup.s = static_cast<double>(m) * boundary_zeta_qprime(target, theta);
    tup.t = t;
    tup.u = u;
    return tup;
}

inline constexpr double kTupleMatchTolerance = 1e-9;
inline constexpr double kDegenerateSTolerance = 1e-12;

/// Second-order admissibility: the tuple must sit on the boundary
/// (r = q(zeta), s = m zeta q'(zeta), each to 1e-9) and satisfy
/// Re(1 + t/s) >= m (1 + n2) for sine, resp. m (1 + n5) for petal.
inline bool admissible_second_order(const AdmissibilityTuple& tuple, Target target) {
    if (tuple.m < 1) throw std::invalid_argument("admissible_second_order: m must be >= 1");
    if (std::abs(tuple.s) < kDegenerateSTolerance)
        throw DegenerateS("admissible_second_order: |s| below tolerance");
    if (std::abs(tuple.r - boundary_q(target, tuple.theta)) > kTupleMatchTolerance) return false;
    const Complex s_expected =
        static_cast<double>(tuple.m) * boundary_zeta_qprime(target, tuple.theta);
    if (std::abs(tuple.s - s_expected) > kTupleMatchTolerance) return false;
    const double bound = target == Target::Sine ? n2(tuple.theta) : n5(tuple.theta);
    const double lhs = (Complex(1.0) + tuple.t / tuple.s).real();
    return lhs >= static_cast<double>(tuple.m) * (1.0 + bound);
}

/// Third-order admissibility (sine target only): the second-order check
/// plus Re(u/s) >= m^2 n3 + 3 m (k-1) n2, with k >= m >= 2.
inline bool admissible_third_order(const AdmissibilityTuple& tuple, Target target) {
    if (target != Target::Sine)
        throw std::invalid_argument("admissible_third_order: only the sine target has a third-order profile");
    if (!tuple.u) throw MissingU();
    if (!tuple.k) throw InvalidMK("admissible_third_order: k is required");
    const int m = tuple.m, k = *tuple.k;
    if (m < 2 || k < m) throw InvalidMK("admissible_third_order: requires k >= m >= 2");
    if (std::abs(tuple.s) < kDegenerateSTolerance)
        throw DegenerateS("admissible_third_order: |s| below tolerance");
    if (!admissible_second_order(tuple, target)) return false;
    const double md = static_cast<double>(m);
    const double threshold = md * md * n3(tuple.theta) + 3.0 * md * static_cast<double>(k - 1) * n2(tuple.theta);
    return (*tuple.u / tuple.s).real() >= threshold;
}

/// sup_{z in grid} |z p'(z)| <= m * min_{zeta} |q'(zeta)| = m nu0.
/// This is the derivative-growth hypothesis of the third-order machinery.
inline bool derivative_bound_check(const PowerSeries& p, Target target, int m,
                                   const GridSpec& grid) {
    if (std::abs(p.coeff(0) - Complex(1.0)) > 1e-12)
        throw std::invalid_argument("derivative_bound_check: requires p(0) = 1");
    const PowerSeries zp = euler_derivative(p);
    double sup = 0.0;
    for (const Complex& z : grid.points()) sup = std::max(sup, std::abs(evaluate(zp, z)));
    const double nu0 = target == Target::Sine ? sine_nu0() : petal_nu0();
    return sup <= static_cast<double>(m) * nu0;
}

} // namespace subord
