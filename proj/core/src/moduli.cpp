#include "slcone/moduli.hpp"

#include <stdexcept>

#include "slcone/checked.hpp"
#include "slcone/errors.hpp"
#include "slcone/spectrum_ops.hpp"

namespace slcone {

namespace {

std::int64_t validated_ambient_dim(const SingularConfig& config) {
    if (config.cones.empty())
        throw ConfigError("config field points: at least one singular point required");
    const int m = config.cones.front().ambient_dim();
    for (const auto& cone : config.cones)
        if (cone.ambient_dim() != m)
            throw ConfigError("config field points: all cones must share the ambient dimension");
    if (config.topology.restriction_rank < 0 || config.topology.b1_x_prime < 0)
        throw ConfigError("config field topology: Betti data must be nonnegative");
    if (config.topology.restriction_rank > config.topology.b1_x_prime)
        throw ConfigError(
            "config field topology: restriction_rank exceeds b1_x_prime");
    if (config.family_dim < 0)
        throw ConfigError("config field family_dim: must be nonnegative");
    return m;
}

bool all_stable(const SingularConfig& config) {
    for (const auto& cone : config.cones)
        if (!stability(cone).stable)
            return false;
    return true;
}

void add_interpretation_notes(ModuliReport& report, bool stable_cones,
                              std::int64_t dim_if_smooth) {
    if (stable_cones)
        report.notes.push_back("manifold (stable singularities): dimension " +
                               std::to_string(dim_if_smooth) + " everywhere");
    if (report.expected_dim < 0)
        report.notes.push_back("negative expected dimension: generically empty");
}

} // namespace

std::int64_t placement_dim(const SingularConfig& config) {
    const std::int64_t m = validated_ambient_dim(config);
    // each point carries m^2+2m-1 placement parameters, cut down by the
    // symmetries of its cone
    const std::int64_t per_point = checked_sub(
        checked_add(checked_mul(m, m), checked_mul(2, m)), 1);
    std::int64_t total =
        checked_mul(static_cast<std::int64_t>(config.cones.size()), per_point);
    for (const auto& cone : config.cones)
        total = checked_sub(total, cone.sym_dim());
    return total;
}

std::int64_t end_constant_dim(const SingularConfig& config) {
    validated_ambient_dim(config);
    std::int64_t total = -1; // one global constant is quotiented out
    for (const auto& cone : config.cones)
        total = checked_add(total, cone.link_components());
    return total;
}

std::int64_t deformation_dim(const SingularConfig& config) {
    validated_ambient_dim(config);
    return checked_sub(config.topology.b1_x_prime, config.topology.restriction_rank);
}

std::int64_t obstruction_dim(const SingularConfig& config) {
    const std::int64_t m = validated_ambient_dim(config);
    const std::int64_t n = static_cast<std::int64_t>(config.cones.size());

    std::int64_t counting_total = 0; // sum of N_i(2)
    std::int64_t b0_total = 0;
    std::int64_t sym_total = 0;
    std::int64_t index_total = 0;
    for (const auto& cone : config.cones) {
        const StabilityReport report = stability(cone);
        counting_total = checked_add(counting_total, report.counting_two);
        b0_total = checked_add(b0_total, cone.link_components());
        sym_total = checked_add(sym_total, cone.sym_dim());
        index_total = checked_add(index_total, report.index);
    }

    // The same dimension via the placement/end-constant bookkeeping and
    // via the flattened formula; a mismatch can only be a bug here.
    const std::int64_t via_spaces = checked_sub(
        checked_sub(checked_sub(counting_total, placement_dim(config)),
                    end_constant_dim(config)),
        1);
    const std::int64_t per_point = checked_sub(
        checked_add(checked_mul(m, m), checked_mul(2, m)), 1);
    const std::int64_t via_flat =
        checked_sub(checked_add(checked_sub(counting_total,
                                            checked_mul(n, per_point)),
                                sym_total),
                    b0_total);
    if (via_spaces != index_total || via_flat != index_total)
        throw std::logic_error("obstruction dimension bookkeeping mismatch: " +
                               std::to_string(via_spaces) + " / " +
                               std::to_string(via_flat) + " / " +
                               std::to_string(index_total));
    return index_total;
}

ModuliReport expected_moduli_dim(const SingularConfig& config) {
    ModuliReport report;
    report.placement_dim = placement_dim(config);
    report.end_constant_dim = end_constant_dim(config);
    report.deformation_dim = deformation_dim(config);
    report.obstruction_dim = obstruction_dim(config);
    report.expected_dim =
        checked_sub(report.deformation_dim, report.obstruction_dim);
    add_interpretation_notes(report, all_stable(config), report.deformation_dim);
    return report;
}

ModuliReport expected_moduli_dim_in_family(const SingularConfig& config,
                                           bool transverse) {
    if (config.family_dim < 1)
        throw ConfigError(
            "config field family_dim: family variant needs family_dim >= 1");
    ModuliReport report = expected_moduli_dim(config);
    report.notes.clear();
    report.family_expected_dim =
        checked_add(config.family_dim, report.expected_dim);

    const bool stable_cones = all_stable(config);
    if (stable_cones) {
        report.notes.push_back(
            "stable singularities: submersion over the family base, fibers of dimension " +
            std::to_string(report.deformation_dim));
    } else if (transverse) {
        report.notes.push_back("transverse in family: smooth near the base point");
    } else {
        report.notes.push_back(
            "neither stable nor transverse: formal expected dimension only");
    }
    if (*report.family_expected_dim < 0)
        report.notes.push_back("negative expected dimension: generically empty");
    return report;
}

FredholmResult fredholm_index(const SingularConfig& config,
                              std::span<const Rational> rates) {
    validated_ambient_dim(config);
    if (rates.size() != config.cones.size())
        throw ConfigError("rates: expected one rate per singular point (" +
                          std::to_string(config.cones.size()) + "), got " +
                          std::to_string(rates.size()));

    FredholmResult result;
    result.fredholm = true;
    result.injective = true;
    std::int64_t total = 0;
    for (std::size_t i = 0; i < rates.size(); ++i) {
        const LinkSpectrum& spec = config.cones[i].spectrum();
        if (rate_multiplicity(spec, rates[i]) > 0)
            result.fredholm = false; // the rate carries harmonic functions
        if (!(rates[i] > Rational(0)))
            result.injective = false;
        total = checked_add(total, rate_counting(spec, rates[i]));
    }
    if (result.fredholm)
        result.index = checked_neg(total);
    return result;
}

std::int64_t obstruction_dim_separated_ends(std::span<const MultiEndPoint> points,
                                            int ambient_dim) {
    if (ambient_dim < 3)
        throw ConfigError("m: must be >= 3");
    if (points.empty())
        throw ConfigError("points: at least one singular point required");
    const std::int64_t two_m = checked_mul(2, ambient_dim);

    std::int64_t total = 0;
    for (const auto& point : points) {
        if (point.components.empty())
            throw ConfigError("points: a singular point needs at least one component");
        std::int64_t term = checked_neg(two_m);
        for (const auto& component : point.components) {
            std::int64_t component_index;
            if (std::holds_alternative<PlaneComponent>(component)) {
                // planes have order-1 multiplicity m rather than 2m, so
                // their share of the per-component 2m is cut to -m
                component_index = -ambient_dim;
            } else {
                const auto& cone = std::get<ConeDescriptor>(component);
                if (cone.ambient_dim() != ambient_dim)
                    throw ConfigError(
                        "points: component ambient dimension mismatch");
                component_index = stability(cone).index;
            }
            term = checked_add(term, checked_add(component_index, two_m));
        }
        total = checked_add(total, term);
    }
    return total;
}

std::int64_t stability_index_in_family(const ConeDescriptor& cone,
                                       std::int64_t cone_family_dim) {
    if (cone_family_dim < 0)
        throw ConfigError("cone_family_dim: must be nonnegative");
    const StabilityReport report = stability(cone);
    const std::int64_t m = cone.ambient_dim();
    // N(2) - b0 - 2m - dim of the cone family
    return checked_sub(
        checked_sub(checked_sub(report.counting_two, cone.link_components()),
                    checked_mul(2, m)),
        cone_family_dim);
}

std::pair<std::int64_t, std::int64_t> mclean_dims(std::int64_t b1_n,
                                                  std::int64_t family_dim) {
    if (b1_n < 0 || family_dim < 0)
        throw ConfigError("mclean_dims: arguments must be nonnegative");
    return {b1_n, checked_add(family_dim, b1_n)};
}

} // namespace slcone
