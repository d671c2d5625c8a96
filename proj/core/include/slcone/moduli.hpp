#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "slcone/link_spectrum.hpp"
#include "slcone/rational.hpp"

namespace slcone {

/// Topological input that the dimension formulas cannot derive: the
/// first Betti number of the punctured manifold X' and the rank of the
/// restriction H^1(X') -> direct sum of the links' H^1.
struct TopologyData {
    std::int64_t b1_x_prime = 0;
    std::int64_t restriction_rank = 0;
};

/// A compact special Lagrangian m-fold with conical singularities: one
/// cone per singular point, the topology of the complement, and the
/// dimension of the ambient family of almost Calabi-Yau structures
/// (0 for a single ambient manifold).
struct SingularConfig {
    std::vector<ConeDescriptor> cones;
    TopologyData topology;
    std::int64_t family_dim = 0;
};

/// Dimension of the family of nearby alternative placements of the
/// singular points and tangent-space identifications, modulo the
/// symmetries of each cone: n*(m^2+2m-1) - sum(dim_g_i).
std::int64_t placement_dim(const SingularConfig& config);

/// Dimension of the space of functions constant near each end and
/// summing to zero: sum(b0_i) - 1.
std::int64_t end_constant_dim(const SingularConfig& config);

/// Dimension of the infinitesimal deformation space: the image of
/// compactly supported first cohomology, b1(X') - restriction_rank.
std::int64_t deformation_dim(const SingularConfig& config);

/// Dimension of the obstruction space: the sum of the cones' stability
/// indices. Evaluated through three equivalent bookkeeping routes that
/// must agree; disagreement means a bug and throws std::logic_error.
std::int64_t obstruction_dim(const SingularConfig& config);

struct ModuliReport {
    std::optional<std::int64_t> placement_dim;    // absent for separated ends
    std::optional<std::int64_t> end_constant_dim; // absent for separated ends
    std::int64_t deformation_dim = 0;
    std::int64_t obstruction_dim = 0;
    std::int64_t expected_dim = 0;
    std::optional<std::int64_t> family_expected_dim; // present when family_dim > 0
    std::vector<std::string> notes;
};

/// Expected dimension of the moduli space of deformations inside a
/// single ambient manifold: deformation_dim - obstruction_dim. Stable
/// cones make the space an actual manifold; a negative value means the
/// space is generically empty.
ModuliReport expected_moduli_dim(const SingularConfig& config);

/// Expected dimension when the ambient almost Calabi-Yau structure
/// moves in a family_dim-dimensional family: family_dim + deformation
/// - obstruction. With stable cones the projection to the base is a
/// submersion with fibers of dimension deformation_dim; otherwise
/// smoothness needs the caller-supplied transversality flag.
ModuliReport expected_moduli_dim_in_family(const SingularConfig& config,
                                           bool transverse);

struct FredholmResult {
    bool fredholm = false;  // no rate lies in any link's rate set
    std::optional<std::int64_t> index; // -sum N_i(rate_i), when Fredholm
    bool injective = false; // all rates positive
};

/// Fredholm data of the linearized deformation operator on weighted
/// spaces with growth rate rates[i] at the i-th singular point.
FredholmResult fredholm_index(const SingularConfig& config,
                              std::span<const Rational> rates);

/// An end modelled on a flat special Lagrangian m-plane. Carries a
/// fixed stability-index convention of -m instead of a spectrum.
struct PlaneComponent {};

using EndComponent = std::variant<ConeDescriptor, PlaneComponent>;

/// A singular point whose cone components are allowed to rotate
/// separately under SU(m).
struct MultiEndPoint {
    std::vector<EndComponent> components;
};

/// Obstruction dimension when the components of every cone move
/// independently: sum over points of (-2m + sum_j (s_ind_j + 2m)).
std::int64_t obstruction_dim_separated_ends(std::span<const MultiEndPoint> points,
                                            int ambient_dim);

/// Stability index of a cone moving in a cone_family_dim-dimensional
/// family of special Lagrangian cones: N(2) - b0 - 2m - cone_family_dim.
/// With the family of all SU(m) rotates this reduces to the plain index.
std::int64_t stability_index_in_family(const ConeDescriptor& cone,
                                       std::int64_t cone_family_dim);

/// Moduli dimensions for a nonsingular compact special Lagrangian
/// m-fold, after McLean: b1(N) in a fixed ambient manifold and
/// family_dim + b1(N) in a family.
std::pair<std::int64_t, std::int64_t> mclean_dims(std::int64_t b1_n,
                                                  std::int64_t family_dim);

} // namespace slcone
