#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "slcone/link_spectrum.hpp"

namespace slcone {

struct EnumerationOptions {
    /// Worker count for the lattice walk; 0 means hardware concurrency.
    /// Results are identical for every thread count.
    int threads = 1;
    /// Cap on visited lattice nodes. Exceeding it aborts with
    /// ResourceLimit instead of grinding on.
    std::uint64_t max_points = 1'000'000'000ULL;
};

/// Eigenvalue of the torus-link Laplacian attached to the lattice
/// vector n in Z^(m-1): m*sum(n_i^2) - (sum(n_i))^2. Exact, checked.
std::int64_t hl_eigenvalue(int m, std::span<const std::int64_t> n);

/// Complete spectrum of the flat (m-1)-torus link of the Harvey-Lawson
/// cone in C^m, up to lambda_max, by lattice enumeration.
LinkSpectrum hl_link_spectrum(int m, std::int64_t lambda_max,
                              const EnumerationOptions& opts = {});

/// Every lattice vector with hl_eigenvalue(m, n) == lambda, in
/// lexicographic order. Diagnostic companion to hl_link_spectrum.
std::vector<std::vector<std::int64_t>> hl_eigenvectors(
    int m, std::int64_t lambda, const EnumerationOptions& opts = {});

/// Harvey-Lawson cone descriptor: connected torus link, preserved by
/// the (m-1)-dimensional torus in SU(m).
ConeDescriptor hl_cone(int m, std::int64_t lambda_max,
                       const EnumerationOptions& opts = {});

} // namespace slcone
