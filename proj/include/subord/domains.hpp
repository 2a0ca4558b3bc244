#pragma once

#include <algorithm>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "subord/errors.hpp"
#include "subord/power_series.hpp"

namespace subord {

enum class DomainKind { Lemniscate, Janowski, Sigmoid, Crescent, Cardioid, Exponential, Sine, Petal };

enum class Membership { Inside, Outside, Boundary };

/// Strict-inequality classification of a point against a target region.
/// distance_hint is |defining functional - threshold| (for the winding
/// oracle: distance to the sampled curve). Flags record soft diagnostics
/// such as a branch disagreement resolved by the winding oracle.
struct MembershipVerdict {
    Membership status = Membership::Outside;
    double distance_hint = 0.0;
    std::vector<std::string> flags;
};

struct EnclosingDisk {
    Complex center;
    double radius = 0.0;
};

inline constexpr double kBoundaryBand = 1e-9;
inline constexpr int kBoundaryCacheSamples = 4096;

namespace detail {

/// Signed winding number of a closed polygon around w, by counting signed
/// crossings of the rightward horizontal ray (equals the angle-summation
/// winding number for closed curves, without transcendentals).
inline long winding_number(const std::vector<Complex>& polygon, Complex w) {
    long wn = 0;
    const size_t n = polygon.size();
    double ax = polygon[n - 1].real() - w.real();
    double ay = polygon[n - 1].imag() - w.imag();
    for (size_t i = 0; i < n; ++i) {
        const double bx = polygon[i].real() - w.real();
        const double by = polygon[i].imag() - w.imag();
        if (ay <= 0.0) {
            if (by > 0.0 && ax * by - ay * bx > 0.0) ++wn;
        } else {
            if (by <= 0.0 && ax * by - ay * bx < 0.0) --wn;
        }
        ax = bx;
        ay = by;
    }
    return wn;
}

inline double point_segment_distance(Complex p, Complex a, Complex b) {
    const Complex ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = ((p.real() - a.real()) * ab.real() + (p.imag() - a.imag()) * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

inline double min_distance_to_polygon(const std::vector<Complex>& polygon, Complex w) {
    double best = std::numeric_limits<double>::infinity();
    const size_t n = polygon.size();
    for (size_t i = 0; i < n; ++i)
        best = std::min(best, point_segment_distance(w, polygon[i], polygon[(i + 1) % n]));
    return best;
}

/// Cached boundary geometry shared by all copies of a TargetDomain.
/// Every generator is univalent with image starlike about 1 (Ma-Minda),
/// so the boundary has a single-valued radial profile rho(alpha) about 1.
/// The polygon is the canonical winding-oracle sampling; the profile is a
/// denser sampling used only to pre-classify points far from the curve.
struct DomainCache {
    std::once_flag built;
    std::vector<Complex> polygon;
    std::vector<std::pair<double, double>> profile; // (angle about 1, radius), sorted
    double inner_radius = 0.0;  // over the polygon samples
    double outer_radius = 0.0;
    double profile_inner = 0.0; // over the profile samples
    double profile_outer = 0.0;

    /// Classify rho against the boundary radii bracketing direction alpha.
    /// Between two profile samples the boundary stays within the bracketing
    /// radii up to the sample chord length (the curve cannot wander farther
    /// than the distance between its endpoints times a small factor, even
    /// through a cusp), so verdicts outside that band are safe and anything
    /// inside it defers to the exact predicate.
    std::optional<Membership> radial_preclassify(double alpha, double rho) const {
        const auto& pr = profile;
        const size_t n = pr.size();
        auto it = std::upper_bound(pr.begin(), pr.end(), std::make_pair(alpha, -1.0));
        double a0, r0, a1, r1;
        if (it == pr.begin() || it == pr.end()) {
            a0 = pr[n - 1].first - 2.0 * std::numbers::pi;
            r0 = pr[n - 1].second;
            a1 = pr[0].first;
            r1 = pr[0].second;
            if (it == pr.end()) {
                a0 = pr[n - 1].first;
                a1 = pr[0].first + 2.0 * std::numbers::pi;
            }
        } else {
            a0 = (it - 1)->first;
            r0 = (it - 1)->second;
            a1 = it->first;
            r1 = it->second;
        }
        const double span = a1 - a0;
        const double chord2 = (r0 - r1) * (r0 - r1) + r0 * r1 * span * span;
        const double band = std::max(2.0 * std::sqrt(chord2), 1e-3);
        if (rho < std::min(r0, r1) - band) return Membership::Inside;
        if (rho > std::max(r0, r1) + band) return Membership::Outside;
        return std::nullopt;
    }
};

inline constexpr int kProfileSamples = 16384;

} // namespace detail

/// One of the eight Ma-Minda target generators, with evaluation, membership,
/// boundary sampling and enclosing-disk queries. Immutable; queries are pure
/// and thread-safe (boundary geometry is memoized once per instance).
class TargetDomain {
public:
    static TargetDomain lemniscate() { return TargetDomain(DomainKind::Lemniscate); }
    static TargetDomain sigmoid() { return TargetDomain(DomainKind::Sigmoid); }
    static TargetDomain crescent() { return TargetDomain(DomainKind::Crescent); }
    static TargetDomain cardioid() { return TargetDomain(DomainKind::Cardioid); }
    static TargetDomain exponential() { return TargetDomain(DomainKind::Exponential); }
    static TargetDomain sine() { return TargetDomain(DomainKind::Sine); }
    static TargetDomain petal() { return TargetDomain(DomainKind::Petal); }

    static TargetDomain janowski(double C, double D) {
        if (!(D > -1.0) || !(D < C) || !(C <= 1.0))
            throw InvalidJanowskiParams("janowski requires -1 < D < C <= 1");
        TargetDomain d(DomainKind::Janowski);
        d.C_ = C;
        d.D_ = D;
        return d;
    }

    static TargetDomain of_kind(DomainKind kind, double C = 1.0, double D = 0.0) {
        if (kind == DomainKind::Janowski) return janowski(C, D);
        return TargetDomain(kind);
    }

    DomainKind kind() const { return kind_; }
    double janowski_C() const { return C_; }
    double janowski_D() const { return D_; }

    /// phi(z) on the closed unit disk; principal branches throughout.
    Complex generate(Complex z) const {
        switch (kind_) {
            case DomainKind::Lemniscate: return std::sqrt(Complex(1.0) + z);
            case DomainKind::Janowski: return (Complex(1.0) + C_ * z) / (Complex(1.0) + D_ * z);
            case DomainKind::Sigmoid: return 2.0 / (Complex(1.0) + std::exp(-z));
            case DomainKind::Crescent: return z + std::sqrt(Complex(1.0) + z * z);
            case DomainKind::Cardioid: return Complex(1.0) + z * std::exp(z);
            case DomainKind::Exponential: return std::exp(z);
            case DomainKind::Sine: return Complex(1.0) + std::sin(z);
            case DomainKind::Petal: return Complex(1.0) + std::asinh(z);
        }
        return Complex(0.0);
    }

    /// phi(e^{i theta_k}) for theta_k uniform in [0, 2 pi), first point at 0.
    std::vector<Complex> boundary(int samples) const {
        if (samples < 8) throw std::invalid_argument("boundary: samples must be >= 8");
        std::vector<Complex> pts;
        pts.reserve(static_cast<size_t>(samples));
        for (int k = 0; k < samples; ++k) {
            const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
            pts.push_back(generate(Complex(std::cos(t), std::sin(t))));
        }
        return pts;
    }

    /// Membership by the defining functional of the region. The cardioid has
    /// no closed-form inequality and is decided by the winding oracle; the
    /// sine region is cross-checked against the winding oracle where the
    /// principal arcsin branch could in principle disagree.
    MembershipVerdict contains(Complex w) const {
        if (!is_finite(w)) throw std::invalid_argument("contains: w must be finite");
        switch (kind_) {
            case DomainKind::Lemniscate:
                // right loop only: the functional alone also admits the
                // mirror loop around -1
                return half_plane_guarded(w, std::abs(w * w - Complex(1.0)), 1.0);
            case DomainKind::Janowski: {
                const double denom = 1.0 - D_ * D_;
                const Complex center((1.0 - C_ * D_) / denom, 0.0);
                return functional_verdict(std::abs(w - center), (C_ - D_) / denom);
            }
            case DomainKind::Sigmoid: {
                if (std::abs(w) < 1e-300 || std::abs(Complex(2.0) - w) < 1e-300)
                    return MembershipVerdict{Membership::Outside, 1e300, {}};
                return functional_verdict(std::abs(std::log(w / (Complex(2.0) - w))), 1.0);
            }
            case DomainKind::Crescent:
                // same mirror-lobe caveat as the lemniscate
                return half_plane_guarded(w, std::abs(w * w - Complex(1.0)), 2.0 * std::abs(w));
            case DomainKind::Cardioid:
                return winding_verdict_cached(w);
            case DomainKind::Exponential: {
                if (std::abs(w) < 1e-300) return MembershipVerdict{Membership::Outside, 1e300, {}};
                return functional_verdict(std::abs(std::log(w)), 1.0);
            }
            case DomainKind::Sine: {
                MembershipVerdict closed =
                    functional_verdict(std::abs(std::asin(w - Complex(1.0))), 1.0);
                if (std::abs(w.real() - 1.0) > 1.0) {
                    MembershipVerdict wind = winding_verdict_cached(w);
                    if (wind.status != closed.status) {
                        wind.flags.push_back("branch_ambiguity");
                        return wind;
                    }
                }
                return closed;
            }
            case DomainKind::Petal: {
                // sinh is i pi periodic, so the functional alone admits
                // copies of the region around 1 + i pi k; the image of the
                // disk under 1 + asinh lies in the principal strip
                MembershipVerdict v =
                    functional_verdict(std::abs(std::sinh(w - Complex(1.0))), 1.0);
                const double strip_excess = std::abs(w.imag()) - std::numbers::pi / 2.0;
                if (strip_excess > 0.0 && v.status != Membership::Outside) {
                    v.status = Membership::Outside;
                    v.distance_hint = std::max(v.distance_hint, strip_excess);
                }
                return v;
            }
        }
        return MembershipVerdict{};
    }

    /// Membership by winding number of the sampled boundary polygon (the
    /// memoized one at the default sample count, a fresh one otherwise).
    /// All eight generators are univalent on the disk, so the sampled curve
    /// is a Jordan curve and Inside means winding number 1.
    MembershipVerdict winding_membership(Complex w, int samples = kBoundaryCacheSamples) const {
        const std::vector<Complex> own =
            samples == kBoundaryCacheSamples ? std::vector<Complex>{} : boundary(samples);
        const std::vector<Complex>& polygon =
            samples == kBoundaryCacheSamples ? cache().polygon : own;
        const double dist = approximate_distance(polygon, w);
        if (dist < kBoundaryBand)
            throw TooCloseToBoundary("winding_membership: query point within band of sampled curve");
        const long wn = detail::winding_number(polygon, w);
        return MembershipVerdict{wn == 1 ? Membership::Inside : Membership::Outside, dist, {}};
    }

    /// Smallest disk about 1 covering the region: closed-form radius where
    /// one is known (sine, petal, cardioid), else the sampled maximum of
    /// |phi(e^{i theta}) - 1|.
    EnclosingDisk enclosing_disk() const {
        const detail::DomainCache& c = cache();
        double radius = c.outer_radius;
        switch (kind_) {
            case DomainKind::Sine: radius = std::sinh(1.0); break;
            case DomainKind::Petal: radius = std::numbers::pi / 2.0; break;
            case DomainKind::Cardioid: radius = std::numbers::e; break;
            default: break;
        }
        if (c.outer_radius > radius + kBoundaryBand)
            throw Error("enclosing_disk: boundary sample escapes the disk");
        return EnclosingDisk{Complex(1.0), radius};
    }

    /// Largest sampled radius of a disk about 1 inside the region.
    double inner_radius() const { return cache().inner_radius; }
    /// Sampled maximum of |phi(e^{i theta}) - 1|.
    double outer_radius() const { return cache().outer_radius; }

    /// Fast membership for bulk scans: radial-profile prefilter with a
    /// safety band, falling back to the exact predicate near the curve.
    /// Agrees with contains() wherever the prefilter decides.
    Membership classify(Complex w) const {
        static constexpr double kSafety = 1e-3;
        const detail::DomainCache& c = cache();
        const Complex d = w - Complex(1.0);
        const double rho = std::abs(d);
        if (rho <= c.profile_inner - kSafety) return Membership::Inside;
        if (rho >= c.profile_outer + kSafety) return Membership::Outside;
        const std::optional<Membership> pre =
            c.radial_preclassify(std::atan2(d.imag(), d.real()), rho);
        if (pre) return *pre;
        return contains(w).status;
    }

    std::string name() const {
        switch (kind_) {
            case DomainKind::Lemniscate: return "lemniscate";
            case DomainKind::Janowski: return "janowski";
            case DomainKind::Sigmoid: return "sigmoid";
            case DomainKind::Crescent: return "crescent";
            case DomainKind::Cardioid: return "cardioid";
            case DomainKind::Exponential: return "exponential";
            case DomainKind::Sine: return "sine";
            case DomainKind::Petal: return "petal";
        }
        return "?";
    }

private:
    explicit TargetDomain(DomainKind kind)
        : kind_(kind), cache_(std::make_shared<detail::DomainCache>()) {}

    /// Vertex-distance pass, refined with exact point-segment distances only
    /// when the query is near the curve (vertex minimum overestimates the
    /// curve distance by at most one segment length).
    double approximate_distance(const std::vector<Complex>& polygon, Complex w) const {
        double vmin2 = std::numeric_limits<double>::infinity();
        for (const Complex& p : polygon) {
            const double dx = p.real() - w.real();
            const double dy = p.imag() - w.imag();
            vmin2 = std::min(vmin2, dx * dx + dy * dy);
        }
        if (vmin2 < 0.02 * 0.02) return detail::min_distance_to_polygon(polygon, w);
        return std::sqrt(vmin2);
    }

    MembershipVerdict half_plane_guarded(Complex w, double functional, double threshold) const {
        MembershipVerdict v = functional_verdict(functional, threshold);
        if (w.real() < 0.0 && v.status != Membership::Outside) {
            v.status = Membership::Outside;
            v.distance_hint = std::max(v.distance_hint, -w.real());
        }
        return v;
    }

    MembershipVerdict functional_verdict(double functional, double threshold) const {
        const double band = kBoundaryBand * std::max(1.0, std::abs(threshold));
        const double diff = functional - threshold;
        MembershipVerdict v;
        v.distance_hint = std::abs(diff);
        if (std::abs(diff) < band)
            v.status = Membership::Boundary;
        else
            v.status = diff < 0.0 ? Membership::Inside : Membership::Outside;
        return v;
    }

    MembershipVerdict winding_verdict_cached(Complex w) const {
        const detail::DomainCache& c = cache();
        const double dist = approximate_distance(c.polygon, w);
        MembershipVerdict v;
        v.distance_hint = dist;
        if (dist < kBoundaryBand) {
            v.status = Membership::Boundary;
            return v;
        }
        const long wn = detail::winding_number(c.polygon, w);
        v.status = wn == 1 ? Membership::Inside : Membership::Outside;
        return v;
    }

    const detail::DomainCache& cache() const {
        detail::DomainCache& c = *cache_;
        std::call_once(c.built, [&] {
            c.polygon = boundary(kBoundaryCacheSamples);
            double inner = std::numeric_limits<double>::infinity();
            double outer = 0.0;
            for (const Complex& p : c.polygon) {
                const double rho = std::abs(p - Complex(1.0));
                inner = std::min(inner, rho);
                outer = std::max(outer, rho);
            }
            c.inner_radius = inner;
            c.outer_radius = outer;

            const std::vector<Complex> dense = boundary(detail::kProfileSamples);
            c.profile.reserve(dense.size());
            double pinner = std::numeric_limits<double>::infinity();
            double pouter = 0.0;
            for (const Complex& p : dense) {
                const Complex d = p - Complex(1.0);
                const double rho = std::abs(d);
                c.profile.emplace_back(std::atan2(d.imag(), d.real()), rho);
                pinner = std::min(pinner, rho);
                pouter = std::max(pouter, rho);
            }
            std::sort(c.profile.begin(), c.profile.end());
            c.profile_inner = pinner;
            c.profile_outer = pouter;
        });
        return c;
    }

    DomainKind kind_;
    double C_ = 1.0;
    double D_ = 0.0;
    std::shared_ptr<detail::DomainCache> cache_;
};

/// Taylor coefficients of a generator about 0, for building test functions
/// and scaled-target families.
inline PowerSeries generator_series(const TargetDomain& domain, int order) {
    if (order < 1) throw std::invalid_argument("generator_series: order must be >= 1");
    std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(0.0));
    switch (domain.kind()) {
        case DomainKind::Lemniscate: {
            // binomial series of (1+z)^{1/2}
            double b = 1.0;
            c[0] = 1.0;
            for (int n = 1; n <= order; ++n) {
                b *= (0.5 - static_cast<double>(n - 1)) / static_cast<double>(n);
                c[static_cast<size_t>(n)] = b;
            }
            break;
        }
        case DomainKind::Janowski: {
            const double C = domain.janowski_C(), D = domain.janowski_D();
            c[0] = 1.0;
            double geom = 1.0;
            for (int n = 1; n <= order; ++n) {
                c[static_cast<size_t>(n)] = (C - D) * geom;
                geom *= -D;
            }
            break;
        }
        case DomainKind::Sigmoid: {
            // 2 / (1 + e^{-z}) via series reciprocal
            std::vector<Complex> denom(static_cast<size_t>(order) + 1);
            double fact = 1.0;
            denom[0] = 2.0;
            for (int n = 1; n <= order; ++n) {
                fact *= static_cast<double>(n);
                denom[static_cast<size_t>(n)] = ((n % 2) ? -1.0 : 1.0) / fact;
            }
            return 2.0 * reciprocal(PowerSeries(std::move(denom)));
        }
        case DomainKind::Crescent: {
            // z + (1+z^2)^{1/2}
            double b = 1.0;
            c[0] = 1.0;
            for (int n = 1; 2 * n <= order; ++n) {
                b *= (0.5 - static_cast<double>(n - 1)) / static_cast<double>(n);
                c[static_cast<size_t>(2 * n)] = b;
            }
            c[1] += 1.0;
            break;
        }
        case DomainKind::Cardioid: {
            c[0] = 1.0;
            double fact = 1.0;
            for (int n = 1; n <= order; ++n) {
                c[static_cast<size_t>(n)] = 1.0 / fact;
                fact *= static_cast<double>(n);
            }
            break;
        }
        case DomainKind::Exponential: {
            double fact = 1.0;
            c[0] = 1.0;
            for (int n = 1; n <= order; ++n) {
                fact *= static_cast<double>(n);
                c[static_cast<size_t>(n)] = 1.0 / fact;
            }
            break;
        }
        case DomainKind::Sine: {
            c[0] = 1.0;
            double fact = 1.0;
            for (int n = 1; n <= order; ++n) {
                fact *= static_cast<double>(n);
                if (n % 2 == 1) c[static_cast<size_t>(n)] = (((n - 1) / 2) % 2 ? -1.0 : 1.0) / fact;
            }
            break;
        }
        case DomainKind::Petal: {
            // 1 + asinh z = 1 + sum (-1)^n (2n-1)!!/(2n)!! z^{2n+1}/(2n+1)
            c[0] = 1.0;
            double ratio = 1.0;
            for (int n = 0; 2 * n + 1 <= order; ++n) {
                if (n > 0) ratio *= static_cast<double>(2 * n - 1) / static_cast<double>(2 * n);
                c[static_cast<size_t>(2 * n + 1)] =
                    (n % 2 ? -1.0 : 1.0) * ratio / static_cast<double>(2 * n + 1);
            }
            break;
        }
    }
    return PowerSeries(std::move(c));
}

inline bool parse_domain_kind(const std::string& s, DomainKind& out) {
    if (s == "lemniscate") out = DomainKind::Lemniscate;
    else if (s == "janowski") out = DomainKind::Janowski;
    else if (s == "sigmoid") out = DomainKind::Sigmoid;
    else if (s == "crescent") out = DomainKind::Crescent;
    else if (s == "cardioid") out = DomainKind::Cardioid;
    else if (s == "exponential") out = DomainKind::Exponential;
    else if (s == "sine") out = DomainKind::Sine;
    else if (s == "petal") out = DomainKind::Petal;
    else return false;
    return true;
}

} // namespace subord
