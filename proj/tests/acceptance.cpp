// Acceptance suite: one pass/fail line per criterion, each with its pinned
// tolerance and runtime budget. Run with no arguments for all criteria, or
// with a single criterion number. Exit code is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "subord/admissibility.hpp"
#include "subord/conditions.hpp"
#include "subord/verifier.hpp"

using namespace subord;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << (detail.tellp() > 0 ? "; " : "") << what;
        }
    }
};

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// ---------------------------------------------------------------- criterion 1
bool criterion_constants(Check& c) {
    const AdmissibilityProfile sine = nu_constants(Target::Sine);
    const double r0 = solve_r0();
    c.expect(std::abs(sine.nu0 - 0.540302) <= 1e-5, "nu0 off");
    c.expect(std::abs(sine.nu1 - (-1.55741)) <= 1e-4, "nu1 off");
    c.expect(std::abs(r0 - 0.546302) <= 1e-5, "r0 off");
    const double cot1 = std::cos(1.0) / std::sin(1.0);
    c.expect(std::abs(r0 * r0 + 2.0 * cot1 * r0 - 1.0) < 1e-12, "r0 residual too large");
    c.detail << "nu0=" << sine.nu0 << " nu1=" << sine.nu1 << " r0=" << r0;
    return c.ok;
}

// ---------------------------------------------------------------- criterion 2
bool criterion_extremal_minima(Check& c) {
    // full-circle grid: n1 and n2 are pi periodic, so the minimum shows up
    // at both 0 and pi; the argmin must land on one of the two
    auto full_scan = [&](double (*f)(double)) {
        double best = 1e300, arg = 0.0;
        for (int i = 0; i < 100000; ++i) {
            const double t = kTwoPi * i / 100000;
            const double v = f(t);
            if (v < best) {
                best = v;
                arg = t;
            }
        }
        return MinResult{arg, best};
    };
    const MinResult g1 = full_scan(&n1);
    const MinResult g2 = full_scan(&n2);
    const double step = kTwoPi / 100000;
    auto near_zero_mod_pi = [&](double t) {
        const double r = std::fmod(t, std::numbers::pi);
        return std::min(r, std::numbers::pi - r) <= 2.0 * step;
    };
    c.expect(near_zero_mod_pi(g1.argmin), "grid argmin n1 not at 0 (mod pi)");
    c.expect(near_zero_mod_pi(g2.argmin), "grid argmin n2 not at 0 (mod pi)");

    // golden refinement in the fundamental window around 0
    const MinResult m1 = grid_then_golden_min([](double t) { return n1(t); }, -1.5, 1.5, 30000);
    const MinResult m2 = grid_then_golden_min([](double t) { return n2(t); }, -1.5, 1.5, 30000);
    c.expect(std::abs(m1.value - sine_nu0()) <= 1e-8, "min n1 != nu0");
    c.expect(std::abs(m2.value - sine_nu1()) <= 1e-8, "min n2 != nu1");
    c.expect(std::abs(m1.argmin) <= 1e-6, "argmin n1 not at 0");
    c.expect(std::abs(m2.argmin) <= 1e-6, "argmin n2 not at 0");

    int checked = 0;
    for (int i = 0; i < 10000; ++i) {
        const double t = kTwoPi * i / 10000;
        if (std::abs(std::cos(t)) < 1e-6) continue;
        ++checked;
        if (std::abs(n5_from_generator(t) - (-0.5)) > 1e-12) {
            c.expect(false, "n5 deviates from -1/2");
            break;
        }
    }
    c.detail << "min n1=" << m1.value << " at " << m1.argmin << ", min n2=" << m2.value << " at "
             << m2.argmin << ", n5 constant on " << checked << " samples";
    return c.ok;
}

// ---------------------------------------------------------------- criterion 3
bool criterion_enclosing_disks(Check& c) {
    const double sine_max = TargetDomain::sine().outer_radius();
    const double petal_max = TargetDomain::petal().outer_radius();
    const double cardioid_max = TargetDomain::cardioid().outer_radius();
    c.expect(std::abs(sine_max - std::sinh(1.0)) <= 1e-6, "sine radius != sinh 1");
    c.expect(std::abs(petal_max - std::numbers::pi / 2.0) <= 1e-6, "petal radius != pi/2");
    c.expect(std::abs(cardioid_max - std::numbers::e) <= 1e-6, "cardioid radius != e");
    c.detail << "sine=" << sine_max << " petal=" << petal_max << " cardioid=" << cardioid_max;
    return c.ok;
}

// ---------------------------------------------------------------- criterion 4
bool criterion_lemma_criteria(Check& c) {
    const double r0 = solve_r0();
    auto min_log_ratio = [](double R) {
        double best = 1e300;
        for (int k = 0; k < 20000; ++k) {
            const double t = kTwoPi * k / 20000;
            const Complex z = R * Complex(std::cos(t), std::sin(t));
            best = std::min(best, std::abs(std::log((Complex(1.0) + z) / (Complex(1.0) - z))));
        }
        return best;
    };
    c.expect(min_log_ratio(r0 - 1e-3) < 1.0, "log-ratio threshold holds below r0");
    c.expect(min_log_ratio(r0 + 1e-3) >= 1.0, "log-ratio threshold fails above r0");

    auto min_log = [](double rho) {
        double best = 1e300;
        for (int k = 0; k < 20000; ++k) {
            const double t = kTwoPi * k / 20000;
            best = std::min(best,
                            std::abs(std::log(Complex(1.0) + rho * Complex(std::cos(t), std::sin(t)))));
        }
        return best;
    };
    const double em1 = std::numbers::e - 1.0;
    c.expect(min_log(em1 - 1e-3) < 1.0, "log threshold holds below e-1");
    c.expect(min_log(em1 + 1e-3) >= 1.0, "log threshold fails above e-1");
    c.detail << "flips confirmed at r0 +- 1e-3 and (e-1) +- 1e-3";
    return c.ok;
}

// ---------------------------------------------------------------- criterion 5
bool criterion_operator_identity(Check& c) {
    const IdentityReport sf =
        identity_test(IdentityKind::Sf, 100, 12, 20240811, OperatorParams::second_order(1.0, 1.0));
    c.expect(sf.max_deviation < 1e-9, "S_f route deviates from phi2 route");

    const IdentityReport theta = identity_test(IdentityKind::Thetaf, 100, 12, 20240811,
                                               OperatorParams::third_order(1.0, 1.0, 1.0));
    // the printed third-order combination is not identical to phi3; its
    // deviation is pinned to the 2 (beta2 + 3 beta3) S3 baseline
    c.expect(theta.baseline_residual < 1e-9, "Theta_f deviation drifted from pinned baseline");
    const IdentityReport replay = identity_test(IdentityKind::Thetaf, 100, 12, 20240811,
                                                OperatorParams::third_order(1.0, 1.0, 1.0));
    c.expect(theta.max_deviation == replay.max_deviation, "deviation report not deterministic");
    c.detail << "sf max dev=" << sf.max_deviation << ", thetaf raw dev=" << theta.max_deviation
             << ", baseline residual=" << theta.baseline_residual;
    return c.ok;
}

// ---------------------------------------------------------------- criterion 6
bool criterion_inequality_chain(Check& c) {
    const int n = 100000;
    std::vector<double> v1(n), v2(n), v4(n);
    std::vector<bool> singular(n, false);
    for (int i = 0; i < n; ++i) {
        const double t = kTwoPi * i / n;
        v1[static_cast<size_t>(i)] = n1(t);
        v2[static_cast<size_t>(i)] = n2(t);
        if (std::abs(std::cos(t)) < 1e-9) {
            singular[static_cast<size_t>(i)] = true;
        } else {
            v4[static_cast<size_t>(i)] = n4(t);
        }
    }
    const double nu0 = sine_nu0(), nu1 = sine_nu1();

    std::mt19937 rng(60221023);
    std::uniform_real_distribution<double> beta(1e-6, 10.0);
    int petal_pairs = 0;
    for (int pair = 0; pair < 50; ++pair) {
        const double b1 = beta(rng), b2 = beta(rng);
        double lo = 1e300;
        for (int i = 0; i < n; ++i)
            lo = std::min(lo, v1[static_cast<size_t>(i)] * (b1 + b2 * v2[static_cast<size_t>(i)]));
        if (lo < nu0 * (b1 + b2 * nu1) - 1e-9) {
            c.expect(false, "sine chain violated");
            break;
        }
        // petal chain: its bound (2 b1 - b2)/(2 sqrt 2) presumes the factor
        // beta1 + beta2 n5 = beta1 - beta2/2 is nonnegative, as in every
        // theorem hypothesis; enforce that premise on the sampled pair
        if (2.0 * b1 - b2 < 0.0) continue;
        ++petal_pairs;
        double lop = 1e300;
        for (int i = 0; i < n; ++i) {
            if (singular[static_cast<size_t>(i)]) continue;
            lop = std::min(lop, v4[static_cast<size_t>(i)] * (b1 - 0.5 * b2));
        }
        if (lop < (2.0 * b1 - b2) / (2.0 * std::sqrt(2.0)) - 1e-9) {
            c.expect(false, "petal chain violated");
            break;
        }
    }
    c.detail << "50 sine pairs, " << petal_pairs << " petal pairs with 2 b1 >= b2";
    return c.ok;
}

// ---------------------------------------------------------------- criterion 7
bool criterion_soundness_harness(Check& c) {
    const std::vector<FamilySpec> families = {FamilySpec::linear(-0.2, 0.2, 81),
                                              FamilySpec::quadratic(-0.15, 0.15, 11),
                                              FamilySpec::scaled_target(16)};
    const int family_total = 81 + 11 * 11 + 16;
    const GridSpec grid{0.99, 64, 512};
    const double nu0 = sine_nu0(), nu1 = sine_nu1();
    const MKPair mk(2, 2);
    const double third_multiplier = -4.0 + 6.0 * nu1;

    const std::vector<DomainKind> h_kinds = {
        DomainKind::Lemniscate, DomainKind::Janowski, DomainKind::Sigmoid, DomainKind::Crescent,
        DomainKind::Cardioid,   DomainKind::Petal,    DomainKind::Exponential, DomainKind::Sine};
    const std::pair<double, double> janowski_cd{0.8, -0.4};

    // the core-quantity threshold for each h: the smallest X (sine targets)
    // or W (petal target) at which the condition just holds
    auto x_threshold = [&](const TheoremId& id) {
        switch (id.h_kind) {
            case DomainKind::Lemniscate:
                return id.target == Target::Sine ? 1.0 + std::sqrt(2.0) : 4.0 + 2.0 * std::sqrt(2.0);
            case DomainKind::Janowski: {
                const auto [C, D] = *id.janowski;
                const double base = (C - D) * (1.0 + std::abs(D)) / (1.0 - D * D);
                return id.target == Target::Sine ? base : 2.0 * std::sqrt(2.0) * base;
            }
            case DomainKind::Sigmoid:
                return id.target == Target::Sine ? solve_r0() : 2.0 * std::sqrt(2.0) * solve_r0();
            case DomainKind::Crescent: return id.target == Target::Sine ? std::sqrt(2.0) : 4.0;
            case DomainKind::Cardioid:
                return id.target == Target::Sine ? std::numbers::e
                                                 : 2.0 * std::sqrt(2.0) * std::numbers::e;
            case DomainKind::Petal:
                return id.target == Target::Sine ? std::numbers::pi / 2.0
                                                 : std::sqrt(2.0) * std::numbers::pi;
            case DomainKind::Exponential:
                return id.target == Target::Sine ? std::numbers::e - 1.0
                                                 : 2.0 * std::sqrt(2.0) * (std::numbers::e - 1.0);
            case DomainKind::Sine:
                return id.target == Target::Sine ? std::sinh(1.0)
                                                 : 2.0 * std::sqrt(2.0) * std::sinh(1.0);
        }
        return 0.0;
    };

    // parameters hitting a requested core quantity
    auto params_for = [&](const TheoremId& id, double core, double b2, double b3) {
        if (id.target == Target::Petal) return OperatorParams::second_order((core + b2) / 2.0, b2);
        if (id.order == 2) return OperatorParams::second_order(core / nu0 - b2 * nu1, b2);
        return OperatorParams::third_order(core / nu0 - b2 * nu1 - b3 * third_multiplier, b2, b3);
    };

    const double offsets[] = {1e-10, 0.25, 0.5, 1.0, 2.0};
    const double b2_grid[] = {0.1, 0.2, 0.3, 0.4, 0.5};
    long total_premises = 0;
    int margin_zero_points = 0, runs = 0;

    auto run_block = [&](Target target, int order) {
        for (const DomainKind h : h_kinds) {
            const TheoremId id(target, order, h,
                               h == DomainKind::Janowski
                                   ? std::optional<std::pair<double, double>>(janowski_cd)
                                   : std::nullopt);
            const double threshold = x_threshold(id);
            for (int point = 0; point < 5; ++point) {
                const OperatorParams params =
                    params_for(id, threshold + offsets[point], b2_grid[point],
                               order == 3 ? 0.05 : 0.0);
                const ImplicationReport r = implication_test(id, params, families, grid, mk);
                ++runs;
                if (!r.condition.holds) {
                    c.expect(false, "condition unexpectedly fails for " + id.h_domain().name());
                    return;
                }
                if (std::abs(r.condition.margin) <= 1e-9 ||
                    (point == 0 && r.condition.margin <= 1e-8))
                    ++margin_zero_points;
                total_premises += r.premise_true_count;
                if (r.family_size != family_total) {
                    c.expect(false, "family size mismatch");
                    return;
                }
                if (!r.violations.empty()) {
                    std::ostringstream what;
                    what << "violations for target=" << target_name(target) << " order=" << order
                         << " h=" << id.h_domain().name() << " at point " << point;
                    c.expect(false, what.str());
                    return;
                }
            }
        }
    };

    run_block(Target::Sine, 2);
    if (c.ok) run_block(Target::Sine, 3);
    if (c.ok) run_block(Target::Petal, 2);
    c.expect(margin_zero_points >= 24, "missing margin-zero points");
    c.detail << runs << " theorem/point runs, " << family_total
             << " members each, premise-true total " << total_premises << ", "
             << margin_zero_points << " margin-zero points";
    return c.ok;
}

// ---------------------------------------------------------------- criterion 8
bool criterion_membership_cross_validation(Check& c) {
    const std::vector<TargetDomain> domains = {
        TargetDomain::lemniscate(), TargetDomain::janowski(0.8, -0.5),
        TargetDomain::sigmoid(),    TargetDomain::crescent(),
        TargetDomain::exponential(), TargetDomain::sine(),
        TargetDomain::petal()};
    std::mt19937 rng(1618033);
    std::uniform_real_distribution<double> rx(-1.0, 4.0), ry(-2.5, 2.5);
    long compared = 0;
    for (const TargetDomain& d : domains) {
        int done = 0;
        long guard = 0;
        while (done < 10000 && guard < 200000) {
            ++guard;
            const Complex w(rx(rng), ry(rng));
            const MembershipVerdict closed = d.contains(w);
            if (closed.status == Membership::Boundary) continue;
            MembershipVerdict wind;
            try {
                wind = d.winding_membership(w);
            } catch (const TooCloseToBoundary&) {
                continue;
            }
            if (wind.distance_hint < 1e-6) continue; // sampled-curve band
            if (closed.status != wind.status) {
                std::ostringstream what;
                what << "disagreement for " << d.name() << " at (" << w.real() << ", " << w.imag()
                     << ")";
                c.expect(false, what.str());
                return c.ok;
            }
            ++done;
            ++compared;
        }
        if (done < 10000) {
            c.expect(false, "could not collect enough off-band samples for " + d.name());
            return c.ok;
        }
    }
    c.detail << compared << " agreements across " << domains.size() << " closed-form domains";
    return c.ok;
}

// ---------------------------------------------------------------- criterion 9
bool criterion_threshold_pins(Check& c) {
    const double nu0 = sine_nu0();
    const double sine_b1 = (1.0 + std::sqrt(2.0)) / nu0;
    const ConditionReport sine_report =
        sine_second_order(TheoremId(Target::Sine, 2, DomainKind::Lemniscate),
                          OperatorParams::second_order(sine_b1, 0.0));
    c.expect(std::abs(sine_report.margin) < 1e-9, "sine/lemniscate pin off");

    const double petal_b1 = 2.0 + std::sqrt(2.0);
    const ConditionReport petal_report =
        petal_second_order(TheoremId(Target::Petal, 2, DomainKind::Lemniscate),
                           OperatorParams::second_order(petal_b1, 0.0));
    c.expect(std::abs(petal_report.margin) < 1e-9, "petal/lemniscate pin off");
    c.detail << "margins " << sine_report.margin << " and " << petal_report.margin << " at beta1="
             << sine_b1 << " / " << petal_b1;
    return c.ok;
}

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<bool(Check&)> run;
};

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "paper constants nu0, nu1, r0", 1.0, criterion_constants},
        {2, "extremal minima of n1, n2, n5", 5.0, criterion_extremal_minima},
        {3, "enclosing-disk radii", 2.0, criterion_enclosing_disks},
        {4, "log-criterion flips at r0 and e-1", 2.0, criterion_lemma_criteria},
        {5, "operator identity S_f / Theta_f", 10.0, criterion_operator_identity},
        {6, "extremal inequality chains", 10.0, criterion_inequality_chain},
        {7, "theorem soundness harness", 300.0, criterion_soundness_harness},
        {8, "membership cross-validation", 30.0, criterion_membership_cross_validation},
        {9, "threshold pins at beta2 = 0", 1e9, criterion_threshold_pins},
    };

    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > static_cast<int>(criteria.size())) {
            std::fprintf(stderr, "usage: acceptance [1-%zu]\n", criteria.size());
            return 2;
        }
    }

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        if (only != 0 && criterion.id != only) continue;
        Check check;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criterion.run(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
            ok = false;
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > criterion.budget_seconds) {
            ok = false;
            check.detail << "; exceeded " << criterion.budget_seconds << " s budget";
        }
        std::printf("[%s] criterion %d: %s (%.2f s) — %s\n", ok ? "PASS" : "FAIL", criterion.id,
                    criterion.title, elapsed, check.detail.str().c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures;
}
