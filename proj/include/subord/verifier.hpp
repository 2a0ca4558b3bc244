#pragma once

#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>

#include "subord/conditions.hpp"
#include "subord/families.hpp"
#include "subord/grid.hpp"
#include "subord/operators.hpp"

namespace subord {

namespace detail {

/// Index-parallel loop with deterministic result placement. Family members
/// are independent, so partitioning cannot change any outcome.
template <typename Fn>
void parallel_for(size_t n, Fn&& fn) {
    unsigned workers = std::thread::hardware_concurrency();
    if (workers < 2 || n < 8) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    workers = std::min<unsigned>(workers, 8);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            try {
                for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(n);
            }
        });
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace detail

/// Grid-based test of p < q by image containment. Boundary-band hits count
/// as inside (and are tallied); a strictly outside image point fails the
/// check and is reported as the witness.
struct SubordinationVerdict {
    bool holds = true;
    std::optional<Complex> witness;
    long checked_points = 0;
    long boundary_hits = 0;
};

inline SubordinationVerdict subordination_check_on(const PowerSeries& p,
                                                   const TargetDomain& target,
                                                   const std::vector<Complex>& points) {
    require_unit_constant(p);
    SubordinationVerdict v;
    for (const Complex& z : points) {
        ++v.checked_points;
        const Complex w = evaluate(p, z);
        const Membership m = target.classify(w);
        if (m == Membership::Boundary) ++v.boundary_hits;
        if (m == Membership::Outside) {
            v.holds = false;
            v.witness = z;
            return v;
        }
    }
    return v;
}

inline SubordinationVerdict subordination_check(const PowerSeries& p, const TargetDomain& target,
                                                const GridSpec& grid) {
    return subordination_check_on(p, target, grid.points());
}

/// Subordination check applied to the operator image phi2(p) or phi3(p).
inline SubordinationVerdict operator_image_check_on(const PowerSeries& p,
                                                    const OperatorParams& params,
                                                    const TargetDomain& h,
                                                    const std::vector<Complex>& points, int order) {
    if (order != 2 && order != 3)
        throw std::invalid_argument("operator_image_check: order must be 2 or 3");
    const PowerSeries image = order == 2 ? phi2(p, params) : phi3(p, params);
    return subordination_check_on(image, h, points);
}

inline SubordinationVerdict operator_image_check(const PowerSeries& p, const OperatorParams& params,
                                                 const TargetDomain& h, const GridSpec& grid,
                                                 int order) {
    return operator_image_check_on(p, params, h, grid.points(), order);
}

/// Premise/conclusion sweep of one implication over test families.
/// A violation is a member whose operator image stays in h's region while
/// the member itself escapes the dominant's region; when the sufficient
/// condition holds, the violation list must be empty.
struct ImplicationReport {
    int family_size = 0;
    int premise_true_count = 0;
    std::vector<std::pair<int, Complex>> violations; // (family index, witness)
    ConditionReport condition;
};

inline ImplicationReport implication_test(const TheoremId& theorem, const OperatorParams& params,
                                          const std::vector<FamilySpec>& families,
                                          const GridSpec& grid, const MKPair& mk = MKPair()) {
    const TargetDomain h = theorem.h_domain();
    const TargetDomain conclusion = theorem.conclusion_domain();

    std::vector<PowerSeries> members;
    for (const FamilySpec& spec : families) {
        std::vector<PowerSeries> part = build_family(spec, conclusion);
        members.insert(members.end(), part.begin(), part.end());
    }

    ImplicationReport report;
    report.family_size = static_cast<int>(members.size());
    report.condition = evaluate_condition(theorem, params, mk);

    const std::vector<Complex> points = grid.points();
    struct MemberOutcome {
        bool premise = false;
        std::optional<Complex> witness;
    };
    std::vector<MemberOutcome> outcomes(members.size());
    detail::parallel_for(members.size(), [&](size_t i) {
        const SubordinationVerdict premise =
            operator_image_check_on(members[i], params, h, points, theorem.order);
        if (!premise.holds) return;
        outcomes[i].premise = true;
        const SubordinationVerdict conc = subordination_check_on(members[i], conclusion, points);
        if (!conc.holds) outcomes[i].witness = conc.witness;
    });

    for (size_t i = 0; i < outcomes.size(); ++i) {
        if (!outcomes[i].premise) continue;
        ++report.premise_true_count;
        if (outcomes[i].witness)
            report.violations.emplace_back(static_cast<int>(i), *outcomes[i].witness);
    }
    return report;
}

inline ImplicationReport implication_test(const TheoremId& theorem, const OperatorParams& params,
                                          const FamilySpec& family, const GridSpec& grid,
                                          const MKPair& mk = MKPair()) {
    return implication_test(theorem, params, std::vector<FamilySpec>{family}, grid, mk);
}

/// Exploratory probe for implication failures when the sufficient condition
/// is (typically) violated. Findings are not contradictions: the conditions
/// are sufficient, not necessary.
struct SearchFinding {
    int family_index = 0;
    Complex witness;
};

struct SearchReport {
    bool condition_holds = false; // a warning when true: no findings can exist
    std::vector<SearchFinding> findings;
};

inline SearchReport counterexample_search(const TheoremId& theorem, const OperatorParams& params,
                                          const std::vector<FamilySpec>& families,
                                          const GridSpec& grid, const MKPair& mk = MKPair()) {
    const ImplicationReport r = implication_test(theorem, params, families, grid, mk);
    SearchReport out;
    out.condition_holds = r.condition.holds;
    out.findings.reserve(r.violations.size());
    for (const auto& [index, witness] : r.violations)
        out.findings.push_back(SearchFinding{index, witness});
    return out;
}

/// Coefficientwise comparison of the two routes to the operator image of
/// p = z f'/f over seeded random normalized functions.
///
/// For the second order, S_f and phi2(zf'/f) agree; the reported maximum
/// deviation is float noise. For the third order, Theta_f differs from
/// phi3(zf'/f) by 2 (beta2 + 3 beta3) S3, so the raw deviation is nonzero
/// and stable, and baseline_residual measures agreement with that pattern.
enum class IdentityKind { Sf, Thetaf };

struct IdentityReport {
    IdentityKind which = IdentityKind::Sf;
    int trials = 0;
    int degree = 0;
    unsigned int seed = 0;
    int compared_coefficients = 0;
    double max_deviation = 0.0;
    double baseline_residual = 0.0; // Thetaf only; 0 for Sf
};

inline IdentityReport identity_test(IdentityKind which, int trials, int degree, unsigned int seed,
                                    const OperatorParams& params, int compare_coefficients = 8) {
    if (trials < 1) throw std::invalid_argument("identity_test: trials must be >= 1");
    if (degree < 2) throw std::invalid_argument("identity_test: degree must be >= 2");
    if (which == IdentityKind::Thetaf && !params.beta3) throw MissingBeta3();

    std::mt19937 rng(seed);
    IdentityReport report;
    report.which = which;
    report.trials = trials;
    report.degree = degree;
    report.seed = seed;

    for (int t = 0; t < trials; ++t) {
        const NormalizedFunction f(random_normalized_series(degree, rng));
        const PowerSeries p = starlike_quotient(f);
        const PowerSeries via_formula =
            which == IdentityKind::Sf ? S_f_operator(f, params) : Theta_f_operator(f, params);
        const PowerSeries via_phi = which == IdentityKind::Sf ? phi2(p, params) : phi3(p, params);
        const int ncmp = std::min({compare_coefficients, via_formula.order() + 1, via_phi.order() + 1});
        report.compared_coefficients = ncmp;
        for (int k = 0; k < ncmp; ++k)
            report.max_deviation =
                std::max(report.max_deviation, std::abs(via_formula.coeff(k) - via_phi.coeff(k)));
        if (which == IdentityKind::Thetaf) {
            const PowerSeries baseline = theta_identity_baseline(f, params);
            for (int k = 0; k < ncmp; ++k) {
                const Complex residual =
                    via_formula.coeff(k) - via_phi.coeff(k) - baseline.coeff(k);
                report.baseline_residual = std::max(report.baseline_residual, std::abs(residual));
            }
        }
    }
    return report;
}

} // namespace subord
