#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <vector>

#include "subord/errors.hpp"

namespace subord {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Truncated Taylor expansion about 0: a0 + a1 z + ... + aN z^N.
///
/// Immutable after construction. Binary operations truncate to the smaller
/// of the two orders; coefficients beyond a series' order are unknown, not
/// zero, so padding would fabricate data.
class PowerSeries {
public:
    static constexpr int kDefaultOrder = 24;

    explicit PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("PowerSeries: need at least the constant term");
        for (const Complex& c : coeffs_)
            if (!is_finite(c))
                throw std::invalid_argument("PowerSeries: non-finite coefficient");
    }

    PowerSeries(std::initializer_list<Complex> coeffs)
        : PowerSeries(std::vector<Complex>(coeffs)) {}

    static PowerSeries zero(int order) {
        return PowerSeries(std::vector<Complex>(static_cast<size_t>(order) + 1, Complex(0.0)));
    }

    static PowerSeries constant(Complex a0, int order) {
        std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(0.0));
        c[0] = a0;
        return PowerSeries(std::move(c));
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    Complex coeff(int k) const { return coeffs_[static_cast<size_t>(k)]; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    /// Copy truncated (or identical if new_order >= order).
    PowerSeries truncated(int new_order) const {
        if (new_order >= order()) return *this;
        if (new_order < 0) throw std::invalid_argument("truncated: negative order");
        return PowerSeries(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
    }

private:
    std::vector<Complex> coeffs_;
};

inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Complex> out(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) out[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
    return PowerSeries(std::move(out));
}

inline PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Complex> out(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) out[static_cast<size_t>(k)] = a.coeff(k) - b.coeff(k);
    return PowerSeries(std::move(out));
}

inline PowerSeries operator-(const PowerSeries& a) {
    std::vector<Complex> out(a.coeffs());
    for (Complex& c : out) c = -c;
    return PowerSeries(std::move(out));
}

/// Cauchy product truncated at the smaller order.
inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Complex> out(static_cast<size_t>(n) + 1, Complex(0.0));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n - i; ++j)
            out[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    return PowerSeries(std::move(out));
}

inline PowerSeries operator*(Complex scale, const PowerSeries& a) {
    std::vector<Complex> out(a.coeffs());
    for (Complex& c : out) c *= scale;
    return PowerSeries(std::move(out));
}

inline PowerSeries operator*(double scale, const PowerSeries& a) {
    return Complex(scale) * a;
}

/// Series r with a*r = 1 up to the truncation order. Requires a(0) != 0.
inline PowerSeries reciprocal(const PowerSeries& a, double tolerance = 1e-14) {
    const Complex a0 = a.coeff(0);
    if (std::abs(a0) < tolerance)
        throw ZeroConstantTerm("reciprocal: constant term below tolerance");
    const int n = a.order();
    std::vector<Complex> r(static_cast<size_t>(n) + 1);
    r[0] = 1.0 / a0;
    for (int k = 1; k <= n; ++k) {
        Complex s(0.0);
        for (int j = 1; j <= k; ++j) s += a.coeff(j) * r[static_cast<size_t>(k - j)];
        r[static_cast<size_t>(k)] = -s / a0;
    }
    return PowerSeries(std::move(r));
}

/// z d/dz: coefficient k*a_k at degree k.
inline PowerSeries euler_derivative(const PowerSeries& a) {
    std::vector<Complex> out(a.coeffs());
    for (int k = 0; k <= a.order(); ++k) out[static_cast<size_t>(k)] *= static_cast<double>(k);
    return PowerSeries(std::move(out));
}

/// z^j d^j/dz^j: coefficient k(k-1)...(k-j+1) * a_k at degree k.
/// j = 4 is needed for the fourth starlike functional.
inline PowerSeries weighted_derivative(const PowerSeries& a, int j) {
    if (j < 1 || j > 4)
        throw std::invalid_argument("weighted_derivative: j must be in 1..4");
    std::vector<Complex> out(a.coeffs());
    for (int k = 0; k <= a.order(); ++k) {
        double falling = 1.0;
        for (int t = 0; t < j; ++t) falling *= static_cast<double>(k - t);
        out[static_cast<size_t>(k)] *= falling;
    }
    return PowerSeries(std::move(out));
}

/// Horner evaluation of the truncated polynomial.
inline Complex evaluate(const PowerSeries& a, Complex z) {
    Complex acc = a.coeff(a.order());
    for (int k = a.order() - 1; k >= 0; --k) acc = acc * z + a.coeff(k);
    return acc;
}

/// Divide by z, dropping the constant term. Requires a(0) = 0 (checked
/// against tolerance); the result has order reduced by one.
inline PowerSeries shift_down(const PowerSeries& a, double tolerance = 1e-14) {
    if (std::abs(a.coeff(0)) > tolerance)
        throw std::invalid_argument("shift_down: nonzero constant term");
    if (a.order() < 1)
        throw std::invalid_argument("shift_down: order too small");
    std::vector<Complex> out(a.coeffs().begin() + 1, a.coeffs().end());
    return PowerSeries(std::move(out));
}

} // namespace subord
