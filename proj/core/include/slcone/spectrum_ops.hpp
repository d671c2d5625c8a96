#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slcone/link_spectrum.hpp"
#include "slcone/rational.hpp"

namespace slcone {

/// A growth rate is a real root alpha of alpha*(alpha + m - 2) = lambda
/// for an eigenvalue lambda of the link Laplacian: the homogeneity
/// order of a harmonic function r^alpha v on the cone. Each lambda >= 0
/// gives an upper root >= 0 and a lower root <= 2-m. Rates are kept as
/// (lambda, branch) so every comparison against a rational stays exact;
/// only rendering goes through floating point.
enum class Branch { upper, lower };

struct GrowthRate {
    Rational lambda;
    Branch branch = Branch::upper;
    int ambient_dim = 3;

    /// Floating-point witness of the root, for display only.
    double approx() const;
};

struct RateEntry {
    GrowthRate rate;
    std::int64_t mult = 0;
};

/// Sign of (upper root of lambda) - delta, exactly. Monotone reduction:
/// for delta >= 0 the upper root is <= delta iff lambda <= delta*(delta+m-2).
int cmp_upper_root(const Rational& lambda, int m, const Rational& delta);

/// Sign of (lower root of lambda) - delta. The lower root decreases in
/// lambda: for delta <= 2-m it is < delta iff lambda > delta*(delta+m-2).
int cmp_lower_root(const Rational& lambda, int m, const Rational& delta);

/// All growth rates in [lo, hi] with their multiplicities, ordered by
/// source eigenvalue (upper branch first when both roots of one
/// eigenvalue fall in the interval). Throws SpectrumTruncated when the
/// interval needs eigenvalues beyond the completeness bound.
std::vector<RateEntry> growth_rates(const LinkSpectrum& spec, const Rational& lo,
                                    const Rational& hi);

/// Multiplicity of the rate alpha: the multiplicity of the eigenvalue
/// alpha*(alpha+m-2), or 0 when alpha carries no harmonic function (in
/// particular everywhere in the gap (2-m, 0)).
std::int64_t rate_multiplicity(const LinkSpectrum& spec, const Rational& alpha);

/// Signed cumulative rate count N(delta): for delta >= 0 the total
/// multiplicity of rates in [0, delta]; for delta < 0 minus the total
/// multiplicity of rates in (delta, 0). Monotone, 0 on (2-m, 0), and
/// equal to minus the index contribution of a cone end.
std::int64_t rate_counting(const LinkSpectrum& spec, const Rational& delta);

struct BoundCheck {
    std::string name;
    bool holds = false;
    std::int64_t margin = 0; // slack; negative when violated
};

/// Checks that hold for the spectrum of every genuine SL cone link:
/// mult(0) matches b0, linear functions give mult at order 1 >= 2m,
/// traceless moment maps give mult at order 2 >= m^2-1-dim_g, and the
/// cumulative count dominates the three. Needs completeness up to 2m.
std::vector<BoundCheck> check_lower_bounds(const ConeDescriptor& cone);

struct StabilityReport {
    std::int64_t counting_two = 0;              // N(2)
    std::int64_t mult0 = 0, mult1 = 0, mult2 = 0; // orders 0, 1, 2
    std::int64_t index = 0;                     // stability index
    bool stable = false;                        // index == 0
    bool rigid = false;                         // mult2 == m^2-1-dim_g
    std::vector<std::string> bound_violations;  // names of failed checks
};

/// Stability index N(2) - b0 - m^2 - 2m + 1 + dim_g: the dimension of
/// the residual obstruction space a singular point with this cone
/// contributes after absorbing placements and SU(m) rotations.
StabilityReport stability(const ConeDescriptor& cone);

struct AdmissibleRateBound {
    /// Eigenvalue whose upper root caps the admissible interval, when
    /// one exists below order 3.
    std::optional<Rational> limiting_eigenvalue;
    /// True when admissible rates must stay strictly below sup_approx;
    /// false when every rate in (2,3) is admissible.
    bool exclusive = false;
    double sup_approx = 3.0;
};

/// Supremum of singularity rates mu in (2,3) with no growth rate in
/// (2, mu]: min(3, upper root of the smallest eigenvalue above 2m).
/// Needs completeness up to 3(m+1), the eigenvalue of order 3.
AdmissibleRateBound admissible_rate_sup(const LinkSpectrum& spec);

} // namespace slcone
