#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "slcone/errors.hpp"
#include "slcone/hl_torus.hpp"
#include "support/oracle.hpp"

using namespace slcone;

namespace {

std::map<std::int64_t, std::int64_t> as_map(const LinkSpectrum& spec) {
    std::map<std::int64_t, std::int64_t> out;
    for (const auto& entry : spec.entries()) {
        REQUIRE(entry.lambda.is_integer());
        out[entry.lambda.num()] = entry.mult;
    }
    return out;
}

} // namespace

TEST_CASE("eigenvalue of single lattice vectors") {
    CHECK(hl_eigenvalue(3, std::vector<std::int64_t>{0, 0}) == 0);
    CHECK(hl_eigenvalue(3, std::vector<std::int64_t>{1, 0}) == 2);
    CHECK(hl_eigenvalue(3, std::vector<std::int64_t>{1, -1}) == 6);
    CHECK(hl_eigenvalue(4, std::vector<std::int64_t>{1, 1, 1}) == 3);
    CHECK_THROWS_AS(hl_eigenvalue(3, std::vector<std::int64_t>{1, 2, 3}), ConfigError);
    CHECK_THROWS_AS(hl_eigenvalue(2, std::vector<std::int64_t>{1}), ConfigError);
}

TEST_CASE("form equals norm plus pairwise differences") {
    // Q(n) = sum n_i^2 + sum_{i<j} (n_i - n_j)^2, exhaustively on boxes
    for (int m = 3; m <= 5; ++m) {
        const std::int64_t radius = m <= 4 ? 3 : 2;
        std::vector<std::int64_t> n(static_cast<std::size_t>(m - 1), -radius);
        do {
            std::int64_t expanded = 0;
            for (std::size_t i = 0; i < n.size(); ++i) {
                expanded += n[i] * n[i];
                for (std::size_t j = i + 1; j < n.size(); ++j)
                    expanded += (n[i] - n[j]) * (n[i] - n[j]);
            }
            CHECK(hl_eigenvalue(m, n) == expanded);
        } while (oracle::advance(n, radius));
    }
}

TEST_CASE("eigenvalue is invariant under coordinate permutation and negation") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> coord(-6, 6);
    for (int m = 3; m <= 7; ++m) {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::int64_t> n(static_cast<std::size_t>(m - 1));
            for (auto& c : n)
                c = coord(rng);
            const std::int64_t q = hl_eigenvalue(m, n);
            CHECK(q >= 0);

            std::vector<std::int64_t> negated = n;
            for (auto& c : negated)
                c = -c;
            CHECK(hl_eigenvalue(m, negated) == q);

            std::vector<std::int64_t> shuffled = n;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            CHECK(hl_eigenvalue(m, shuffled) == q);
        }
    }
}

TEST_CASE("small spectra match frozen values") {
    CHECK(as_map(hl_link_spectrum(3, 6)) ==
          std::map<std::int64_t, std::int64_t>{{0, 1}, {2, 6}, {6, 6}});
    CHECK(as_map(hl_link_spectrum(3, 0)) ==
          std::map<std::int64_t, std::int64_t>{{0, 1}});
    // order-1 multiplicity at lambda = m-1 is 2m
    CHECK(as_map(hl_link_spectrum(4, 8)).at(3) == 8);
}

TEST_CASE("spectrum matches the box-scan oracle") {
    for (int m = 3; m <= 6; ++m)
        CHECK(as_map(hl_link_spectrum(m, 2 * m)) == oracle::spectrum(m, 2 * m));
    CHECK(as_map(hl_link_spectrum(3, 20)) == oracle::spectrum(3, 20));
}

TEST_CASE("spectrum shape invariants") {
    for (int m = 3; m <= 6; ++m) {
        const LinkSpectrum spec = hl_link_spectrum(m, 2 * m);
        REQUIRE(!spec.entries().empty());
        CHECK(spec.entries().front().lambda == Rational(0));
        CHECK(spec.entries().front().mult == 1); // the link is connected
        for (const auto& entry : spec.entries())
            if (!(entry.lambda == Rational(0)))
                CHECK(entry.mult % 2 == 0); // negation pairs nonzero vectors
    }
}

TEST_CASE("extending the bound never changes settled multiplicities") {
    for (int m = 3; m <= 5; ++m) {
        const auto small = as_map(hl_link_spectrum(m, 6));
        const auto large = as_map(hl_link_spectrum(m, 18));
        for (const auto& [lambda, mult] : small)
            CHECK(large.at(lambda) == mult);
        for (const auto& [lambda, mult] : large)
            if (lambda <= 6)
                CHECK(small.at(lambda) == mult);
    }
}

TEST_CASE("eigenvector listings are lexicographic and complete") {
    using Vectors = std::vector<std::vector<std::int64_t>>;
    CHECK(hl_eigenvectors(3, 0) == Vectors{{0, 0}});
    CHECK(hl_eigenvectors(3, 2) ==
          Vectors{{-1, -1}, {-1, 0}, {0, -1}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(hl_eigenvectors(3, 6) ==
          Vectors{{-2, -1}, {-1, -2}, {-1, 1}, {1, -1}, {1, 2}, {2, 1}});
    CHECK(hl_eigenvectors(3, 1).empty());

    auto expected = oracle::vectors_with(4, 6);
    std::sort(expected.begin(), expected.end());
    CHECK(hl_eigenvectors(4, 6) == expected);
}

TEST_CASE("enumeration is deterministic across thread counts") {
    const LinkSpectrum reference = hl_link_spectrum(6, 14, {1, 1'000'000'000});
    for (const int threads : {0, 2, 3, 8}) {
        const LinkSpectrum candidate = hl_link_spectrum(6, 14, {threads, 1'000'000'000});
        CHECK(candidate == reference);
    }
}

TEST_CASE("point cap aborts loudly") {
    EnumerationOptions opts;
    opts.max_points = 50;
    CHECK_THROWS_AS(hl_link_spectrum(5, 40, opts), ResourceLimit);
    opts.threads = 4;
    CHECK_THROWS_AS(hl_link_spectrum(5, 40, opts), ResourceLimit);
    opts.max_points = 0;
    CHECK_THROWS_AS(hl_link_spectrum(3, 2, opts), ConfigError);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(hl_link_spectrum(2, 6), ConfigError);
    CHECK_THROWS_AS(hl_link_spectrum(3, -1), ConfigError);
    CHECK_THROWS_AS(hl_link_spectrum(3, 6, {-1, 1000}), ConfigError);
}

TEST_CASE("hl cone descriptor carries torus symmetry data") {
    const ConeDescriptor cone = hl_cone(5, 10);
    CHECK(cone.ambient_dim() == 5);
    CHECK(cone.link_components() == 1);
    CHECK(cone.sym_dim() == 4);
    CHECK(cone.spectrum().complete_up_to() == Rational(10));
}
