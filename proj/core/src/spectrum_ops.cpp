#include "slcone/spectrum_ops.hpp"

#include <cmath>

#include "slcone/checked.hpp"
#include "slcone/errors.hpp"

// Exact comparisons between growth rates and rational thresholds.
//
// The two roots of alpha*(alpha+m-2) = lambda are
//
//     alpha_+- = ( -(m-2) +- sqrt((m-2)^2 + 4*lambda) ) / 2,
//
// with alpha_+ >= 0 increasing in lambda and alpha_- <= 2-m decreasing
// in lambda. On its own branch each root inverts delta |-> delta*(delta+m-2)
// exactly, so "alpha_+(lambda) <= delta" reduces to
// "lambda <= delta*(delta+m-2)" for delta >= 0, and mirrored on the
// lower branch. No root is ever materialized as a decimal in logic.

namespace slcone {

namespace {

Rational rate_to_eigenvalue(const Rational& delta, int m) {
    return delta * (delta + Rational(m - 2));
}

int sign_of(std::strong_ordering ord) {
    if (ord == std::strong_ordering::less)
        return -1;
    if (ord == std::strong_ordering::greater)
        return 1;
    return 0;
}

void require_coverage(const LinkSpectrum& spec, const Rational& needed,
                      const char* what) {
    if (needed > spec.complete_up_to())
        throw SpectrumTruncated(std::string("spectrum truncated: ") + what +
                                " needs eigenvalues up to " + needed.to_string() +
                                " but completeness bound is " +
                                spec.complete_up_to().to_string());
}

} // namespace

double GrowthRate::approx() const {
    const double half_shift = (ambient_dim - 2) / 2.0;
    const double disc = std::sqrt(half_shift * half_shift + lambda.to_double());
    return branch == Branch::upper ? -half_shift + disc : -half_shift - disc;
}

int cmp_upper_root(const Rational& lambda, int m, const Rational& delta) {
    if (delta.is_negative())
        return 1; // upper roots are >= 0
    return sign_of(lambda <=> rate_to_eigenvalue(delta, m));
}

int cmp_lower_root(const Rational& lambda, int m, const Rational& delta) {
    if (delta > Rational(2 - m))
        return -1; // lower roots are <= 2-m
    return sign_of(rate_to_eigenvalue(delta, m) <=> lambda);
}

std::vector<RateEntry> growth_rates(const LinkSpectrum& spec, const Rational& lo,
                                    const Rational& hi) {
    if (lo > hi)
        throw ConfigError("growth rate interval: lower end exceeds upper end");
    const int m = spec.ambient_dim();
    const Rational zero(0);
    const Rational lower_branch_max(2 - m);

    const bool want_upper = !(hi < zero);
    const bool want_lower = !(lo > lower_branch_max);
    if (want_upper)
        require_coverage(spec, rate_to_eigenvalue(hi, m), "growth rate interval");
    if (want_lower)
        require_coverage(spec, rate_to_eigenvalue(lo, m), "growth rate interval");

    std::vector<RateEntry> out;
    for (const auto& entry : spec.entries()) {
        if (want_upper && cmp_upper_root(entry.lambda, m, lo) >= 0 &&
            cmp_upper_root(entry.lambda, m, hi) <= 0)
            out.push_back({{entry.lambda, Branch::upper, m}, entry.mult});
        if (want_lower && cmp_lower_root(entry.lambda, m, lo) >= 0 &&
            cmp_lower_root(entry.lambda, m, hi) <= 0)
            out.push_back({{entry.lambda, Branch::lower, m}, entry.mult});
    }
    return out;
}

std::int64_t rate_multiplicity(const LinkSpectrum& spec, const Rational& alpha) {
    const Rational lambda = rate_to_eigenvalue(alpha, spec.ambient_dim());
    // alpha in the open gap (2-m, 0) gives lambda < 0: no eigenvalue.
    return spec.multiplicity(lambda);
}

std::int64_t rate_counting(const LinkSpectrum& spec, const Rational& delta) {
    const Rational bound = rate_to_eigenvalue(delta, spec.ambient_dim());
    require_coverage(spec, bound, "cumulative rate count");
    std::int64_t total = 0;
    if (!delta.is_negative()) {
        // rates in [0, delta] are upper roots of eigenvalues <= bound
        for (const auto& entry : spec.entries()) {
            if (entry.lambda > bound)
                break;
            total = checked_add(total, entry.mult);
        }
        return total;
    }
    // rates in (delta, 0) are lower roots of eigenvalues < bound
    for (const auto& entry : spec.entries()) {
        if (!(entry.lambda < bound))
            break;
        total = checked_add(total, entry.mult);
    }
    return checked_neg(total);
}

std::vector<BoundCheck> check_lower_bounds(const ConeDescriptor& cone) {
    const LinkSpectrum& spec = cone.spectrum();
    const std::int64_t m = spec.ambient_dim();
    require_coverage(spec, Rational(checked_mul(2, m)), "lower-bound checks");

    const std::int64_t m0 = rate_multiplicity(spec, Rational(0));
    const std::int64_t m1 = rate_multiplicity(spec, Rational(1));
    const std::int64_t m2 = rate_multiplicity(spec, Rational(2));
    const std::int64_t n2 = rate_counting(spec, Rational(2));
    const std::int64_t m_sq = checked_mul(m, m);

    std::vector<BoundCheck> checks;
    const auto add = [&checks](std::string name, std::int64_t margin, bool equality) {
        checks.push_back({std::move(name), equality ? margin == 0 : margin >= 0, margin});
    };
    add("mult0_matches_components", checked_sub(m0, cone.link_components()),
        /*equality=*/true);
    add("mult1_at_least_2m", checked_sub(m1, checked_mul(2, m)), false);
    add("mult2_at_least_moment_maps",
        checked_sub(m2, checked_sub(checked_sub(m_sq, 1), cone.sym_dim())), false);
    add("counting_dominates_mults",
        checked_sub(n2, checked_add(checked_add(m0, m1), m2)), false);
    return checks;
}

StabilityReport stability(const ConeDescriptor& cone) {
    const LinkSpectrum& spec = cone.spectrum();
    const std::int64_t m = spec.ambient_dim();
    require_coverage(spec, Rational(checked_mul(2, m)), "stability index");

    StabilityReport report;
    report.counting_two = rate_counting(spec, Rational(2));
    report.mult0 = rate_multiplicity(spec, Rational(0));
    report.mult1 = rate_multiplicity(spec, Rational(1));
    report.mult2 = rate_multiplicity(spec, Rational(2));

    const std::int64_t m_sq = checked_mul(m, m);
    // N(2) - b0 - m^2 - 2m + 1 + dim_g
    report.index = checked_add(
        checked_add(checked_sub(checked_sub(checked_sub(report.counting_two,
                                                        cone.link_components()),
                                            m_sq),
                                checked_mul(2, m)),
                    1),
        cone.sym_dim());
    report.stable = report.index == 0;
    report.rigid =
        report.mult2 == checked_sub(checked_sub(m_sq, 1), cone.sym_dim());
    for (const auto& check : check_lower_bounds(cone))
        if (!check.holds)
            report.bound_violations.push_back(check.name);
    return report;
}

AdmissibleRateBound admissible_rate_sup(const LinkSpectrum& spec) {
    const std::int64_t m = spec.ambient_dim();
    const Rational two_m(checked_mul(2, m));                    // eigenvalue of order 2
    const Rational order_three(checked_mul(3, checked_add(m, 1))); // of order 3
    require_coverage(spec, order_three, "admissible rate bound");

    AdmissibleRateBound bound;
    for (const auto& entry : spec.entries()) {
        if (!(entry.lambda > two_m))
            continue;
        if (entry.lambda > order_three)
            break; // its rate is already above 3
        bound.limiting_eigenvalue = entry.lambda;
        bound.exclusive = entry.lambda < order_three;
        bound.sup_approx =
            bound.exclusive
                ? GrowthRate{entry.lambda, Branch::upper, static_cast<int>(m)}.approx()
                : 3.0;
        return bound;
    }
    return bound; // whole interval (2,3) admissible
}

} // namespace slcone
