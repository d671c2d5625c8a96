#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "slcone/errors.hpp"
#include "slcone/hl_torus.hpp"
#include "slcone/spectrum_ops.hpp"

using namespace slcone;

namespace {

// a rational strictly between two consecutive upper-branch rates,
// found numerically and then certified exactly
Rational midpoint_between_rates(const Rational& lambda_lo, const Rational& lambda_hi,
                                int m) {
    const double lo = GrowthRate{lambda_lo, Branch::upper, m}.approx();
    const double hi = GrowthRate{lambda_hi, Branch::upper, m}.approx();
    const Rational mid(static_cast<std::int64_t>(std::llround((lo + hi) / 2 * 1e6)),
                       1000000);
    REQUIRE(cmp_upper_root(lambda_lo, m, mid) < 0);
    REQUIRE(cmp_upper_root(lambda_hi, m, mid) > 0);
    return mid;
}

} // namespace

TEST_CASE("growth rates in an interval, upper branch") {
    const LinkSpectrum spec = hl_link_spectrum(3, 6);
    const auto rates = growth_rates(spec, Rational(0), Rational(1));
    REQUIRE(rates.size() == 2);
    CHECK(rates[0].rate.lambda == Rational(0));
    CHECK(rates[0].rate.branch == Branch::upper);
    CHECK(rates[0].mult == 1);
    CHECK(rates[1].rate.lambda == Rational(2));
    CHECK(rates[1].rate.branch == Branch::upper);
    CHECK(rates[1].mult == 6);
    CHECK(rates[1].rate.approx() == doctest::Approx(1.0));
}

TEST_CASE("no growth rates inside the gap (2-m, 0)") {
    const LinkSpectrum spec = hl_link_spectrum(3, 6);
    CHECK(growth_rates(spec, Rational(-9, 10), Rational(-1, 10)).empty());
    const LinkSpectrum spec5 = hl_link_spectrum(5, 10);
    CHECK(growth_rates(spec5, Rational(-29, 10), Rational(-1, 10)).empty());
}

TEST_CASE("growth rates in an interval, lower branch") {
    const LinkSpectrum spec = hl_link_spectrum(3, 6);
    const auto rates = growth_rates(spec, Rational(-3), Rational(-2));
    REQUIRE(rates.size() == 2);
    // ordered by source eigenvalue: alpha = -2 from lambda = 2 first
    CHECK(rates[0].rate.lambda == Rational(2));
    CHECK(rates[0].rate.branch == Branch::lower);
    CHECK(rates[0].mult == 6);
    CHECK(rates[0].rate.approx() == doctest::Approx(-2.0));
    CHECK(rates[1].rate.lambda == Rational(6));
    CHECK(rates[1].rate.branch == Branch::lower);
    CHECK(rates[1].mult == 6);
}

TEST_CASE("growth rates across both branches, eigenvalue order") {
    const LinkSpectrum spec = hl_link_spectrum(3, 6);
    const auto rates = growth_rates(spec, Rational(-3), Rational(1));
    REQUIRE(rates.size() == 5);
    CHECK(rates[0].rate.lambda == Rational(0)); // alpha = 0
    CHECK(rates[0].rate.branch == Branch::upper);
    CHECK(rates[1].rate.lambda == Rational(0)); // alpha = -1
    CHECK(rates[1].rate.branch == Branch::lower);
    CHECK(rates[2].rate.lambda == Rational(2)); // alpha = 1
    CHECK(rates[2].rate.branch == Branch::upper);
    CHECK(rates[3].rate.lambda == Rational(2)); // alpha = -2
    CHECK(rates[3].rate.branch == Branch::lower);
    CHECK(rates[4].rate.lambda == Rational(6)); // alpha = -3
    CHECK(rates[4].rate.branch == Branch::lower);
}

TEST_CASE("growth rates refuse truncated spectra") {
    const LinkSpectrum spec = hl_link_spectrum(3, 6);
    CHECK_THROWS_AS(growth_rates(spec, Rational(0), Rational(3)), SpectrumTruncated);
    CHECK_THROWS_AS(growth_rates(spec, Rational(-4), Rational(0)), SpectrumTruncated);
    CHECK_THROWS_AS(growth_rates(spec, Rational(1), Rational(0)), ConfigError);
}

TEST_CASE("rate multiplicity") {
    const LinkSpectrum spec3 = hl_link_spectrum(3, 8);
    CHECK(rate_multiplicity(spec3, Rational(2)) == 6);
    CHECK(rate_multiplicity(spec3, Rational(3, 2)) == 0);
    CHECK(rate_multiplicity(spec3, Rational(-1, 2)) == 0); // in the gap
    CHECK(rate_multiplicity(spec3, Rational(-2)) == 6);    // lower root of 2
    CHECK(rate_multiplicity(hl_link_spectrum(5, 10), Rational(0)) == 1);
    CHECK_THROWS_AS(rate_multiplicity(spec3, Rational(5, 2)), SpectrumTruncated);
}

TEST_CASE("cumulative rate count at landmark thresholds") {
    const LinkSpectrum spec = hl_link_spectrum(3, 8);
    CHECK(rate_counting(spec, Rational(2)) == 13);
    CHECK(rate_counting(spec, Rational(-1, 2)) == 0);
    CHECK(rate_counting(spec, Rational(1)) == 7);
    CHECK(rate_counting(spec, Rational(0)) == 1);
    CHECK(rate_counting(spec, Rational(-1)) == 0);  // the open interval misses -1
    CHECK(rate_counting(spec, Rational(-3)) == -7); // rates -1, -2 inside
    // -7/2 needs eigenvalues up to 35/4, one beyond this table
    CHECK_THROWS_AS(rate_counting(spec, Rational(-7, 2)), SpectrumTruncated);
    CHECK(rate_counting(hl_link_spectrum(3, 9), Rational(-7, 2)) == -19);
    CHECK_THROWS_AS(rate_counting(spec, Rational(5, 2)), SpectrumTruncated);
    CHECK_THROWS_AS(rate_counting(spec, Rational(-4)), SpectrumTruncated);
}

TEST_CASE("counting jumps exactly by the multiplicity at each rate") {
    for (int m = 3; m <= 8; ++m) {
        const LinkSpectrum spec = hl_link_spectrum(m, 2 * m + 4);
        const auto entries = spec.entries();
        std::int64_t partial = 0;
        Rational previous_mid(0);
        for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
            partial += entries[i].mult;
            const Rational mid =
                midpoint_between_rates(entries[i].lambda, entries[i + 1].lambda, m);
            CHECK(rate_counting(spec, mid) == partial);
            if (i > 0) {
                // the jump between consecutive midpoints is one multiplicity
                CHECK(rate_counting(spec, mid) - rate_counting(spec, previous_mid) ==
                      entries[i].mult);
                CHECK(mid > previous_mid);
            }
            previous_mid = mid;
        }
    }
}

TEST_CASE("counting is monotone on a rational grid") {
    const LinkSpectrum spec = hl_link_spectrum(4, 16);
    std::int64_t previous = rate_counting(spec, Rational(-3));
    for (std::int64_t k = -21; k <= 21; ++k) { // delta = k/7 in [-3, 3]
        const std::int64_t current = rate_counting(spec, Rational(k, 7));
        CHECK(current >= previous);
        previous = current;
    }
}

TEST_CASE("counting vanishes on the whole gap and at its left end") {
    for (int m = 3; m <= 8; ++m) {
        const LinkSpectrum spec = hl_link_spectrum(m, 2 * m);
        CHECK(rate_counting(spec, Rational(2 - m)) == 0);
        CHECK(rate_counting(spec, Rational(2 - m, 1) + Rational(1, 97)) == 0);
        CHECK(rate_counting(spec, Rational(-1, 97)) == 0);
        // just below the gap the lower root of 0 enters
        CHECK(rate_counting(spec, Rational(2 - m) - Rational(1, 97)) == -1);
    }
}

TEST_CASE("interval multiplicities sum to the cumulative count") {
    const LinkSpectrum spec = hl_link_spectrum(3, 20);
    for (const Rational& delta :
         {Rational(0), Rational(1), Rational(2), Rational(9, 4), Rational(3)}) {
        std::int64_t total = 0;
        for (const auto& entry : growth_rates(spec, Rational(0), delta))
            total += entry.mult;
        CHECK(total == rate_counting(spec, delta));
    }
}

TEST_CASE("exact comparison law against floating-point evaluation") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<std::int64_t> lambda_dist(0, 200);
    std::uniform_int_distribution<std::int64_t> num(-4000, 4000);
    std::uniform_int_distribution<std::int64_t> den(1, 64);
    std::uniform_int_distribution<int> m_dist(3, 12);
    for (int trial = 0; trial < 40000; ++trial) {
        const int m = m_dist(rng);
        const Rational lambda(lambda_dist(rng));
        const Rational delta(num(rng), den(rng));
        const double upper = GrowthRate{lambda, Branch::upper, m}.approx();
        const double lower = GrowthRate{lambda, Branch::lower, m}.approx();
        const double d = delta.to_double();
        if (std::abs(upper - d) > 1e-9) {
            const int sign = cmp_upper_root(lambda, m, delta);
            CHECK(sign == (upper < d ? -1 : 1));
        }
        if (std::abs(lower - d) > 1e-9) {
            const int sign = cmp_lower_root(lambda, m, delta);
            CHECK(sign == (lower < d ? -1 : 1));
        }
    }
}

TEST_CASE("stability reports for the torus cones") {
    const StabilityReport r3 = stability(hl_cone(3, 6));
    CHECK(r3.counting_two == 13);
    CHECK(r3.index == 0);
    CHECK(r3.stable);
    CHECK(r3.rigid);
    CHECK(r3.bound_violations.empty());

    const StabilityReport r8 = stability(hl_cone(8, 16));
    CHECK(r8.index == 238);
    CHECK(!r8.stable);
    CHECK(!r8.rigid);

    const StabilityReport r4 = stability(hl_cone(4, 8));
    CHECK(r4.index == 6);
    CHECK(!r4.stable);
    CHECK(r4.rigid);

    CHECK_THROWS_AS(stability(hl_cone(4, 7)), SpectrumTruncated);
}

TEST_CASE("stability index formula ties the report together") {
    for (int m = 3; m <= 10; ++m) {
        const ConeDescriptor cone = hl_cone(m, 2 * m);
        const StabilityReport report = stability(cone);
        CHECK(report.index == report.counting_two - report.mult0 -
                                  std::int64_t{m} * m - 2 * m + 1 + cone.sym_dim());
        CHECK(report.mult0 == cone.link_components());
        if (report.stable)
            CHECK(report.rigid);
        CHECK(report.index >= 0);
    }
}

TEST_CASE("lower bound checks hold with the right margins") {
    const auto checks3 = check_lower_bounds(hl_cone(3, 6));
    REQUIRE(checks3.size() == 4);
    for (const auto& check : checks3)
        CHECK(check.holds);
    CHECK(checks3[1].name == "mult1_at_least_2m");
    CHECK(checks3[1].margin == 0); // linear functions are everything at order 1

    const auto checks9 = check_lower_bounds(hl_cone(9, 18));
    CHECK(checks9[2].margin == 240 - (81 - 1 - 8));

    CHECK_THROWS_AS(check_lower_bounds(hl_cone(5, 9)), SpectrumTruncated);
}

TEST_CASE("inconsistent component count is caught") {
    const ConeDescriptor bad(hl_link_spectrum(3, 6), /*link_components=*/2,
                             /*sym_dim=*/2);
    const auto checks = check_lower_bounds(bad);
    CHECK(!checks[0].holds);
    CHECK(checks[0].margin == -1);
    const StabilityReport report = stability(bad);
    CHECK(report.bound_violations ==
          std::vector<std::string>{"mult0_matches_components"});
}

TEST_CASE("admissible rate bound for torus cones") {
    const AdmissibleRateBound bound3 = admissible_rate_sup(hl_link_spectrum(3, 12));
    REQUIRE(bound3.limiting_eigenvalue.has_value());
    CHECK(*bound3.limiting_eigenvalue == Rational(8));
    CHECK(bound3.exclusive);
    CHECK(bound3.sup_approx == doctest::Approx((-1 + std::sqrt(33.0)) / 2));

    const AdmissibleRateBound bound4 = admissible_rate_sup(hl_link_spectrum(4, 15));
    REQUIRE(bound4.limiting_eigenvalue.has_value());
    CHECK(*bound4.limiting_eigenvalue == Rational(11));
    CHECK(bound4.exclusive);
    CHECK(bound4.sup_approx == doctest::Approx(-1 + std::sqrt(12.0)));

    CHECK_THROWS_AS(admissible_rate_sup(hl_link_spectrum(3, 11)), SpectrumTruncated);
}

TEST_CASE("admissible bound is 3 when the window is empty") {
    // synthetic link data with no eigenvalue in (2m, 3(m+1)]
    const LinkSpectrum spec(3, Rational(12),
                            {{Rational(0), 1}, {Rational(2), 6}, {Rational(6), 6}});
    const AdmissibleRateBound bound = admissible_rate_sup(spec);
    CHECK(!bound.limiting_eigenvalue.has_value());
    CHECK(!bound.exclusive);
    CHECK(bound.sup_approx == 3.0);
}

TEST_CASE("rational eigenvalues work throughout") {
    const LinkSpectrum spec(3, Rational(4),
                            {{Rational(0), 1}, {Rational(3, 2), 4}, {Rational(7, 2), 2}});
    CHECK(spec.multiplicity(Rational(3, 2)) == 4);
    CHECK(rate_counting(spec, Rational(1)) == 5); // bound 2 covers 0 and 3/2
    CHECK(rate_multiplicity(spec, Rational(1, 2)) == 0);
    const auto rates = growth_rates(spec, Rational(0), Rational(1));
    REQUIRE(rates.size() == 2);
    CHECK(rates[1].rate.lambda == Rational(3, 2));
}
