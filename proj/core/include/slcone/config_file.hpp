#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "slcone/hl_torus.hpp"
#include "slcone/moduli.hpp"

namespace slcone {

/// Where a cone's data comes from: the built-in Harvey-Lawson
/// generator, a spectrum file, or the plane convention (only legal
/// inside a separated-components point).
struct HlGeneratorSource {};
struct SpectrumFileSource {
    std::filesystem::path path;
};
struct PlaneSource {};
using ConeSource = std::variant<HlGeneratorSource, SpectrumFileSource, PlaneSource>;

/// One singular point in a config: either a single cone or a list of
/// components that rotate separately.
struct ConfigPoint {
    std::vector<ConeSource> components;
    bool separated = false;
};

/// Parsed singular-configuration file:
///   {"m": int, "family_dim": int, "transverse": bool,
///    "topology": {"b1_x_prime": int, "restriction_rank": int},
///    "points": [{"cone": "hl" | "file.json"} |
///               {"components": ["hl" | "plane" | "file.json", ...]}, ...]}
/// Relative spectrum paths resolve against the config file's directory.
struct ModuliConfig {
    int m = 3;
    std::int64_t family_dim = 0;
    bool transverse = false;
    TopologyData topology;
    std::vector<ConfigPoint> points;
};

ModuliConfig read_config_document(const std::string& text,
                                  const std::filesystem::path& base_dir = {});
ModuliConfig read_config_file(const std::filesystem::path& path);

/// Config with every cone source materialized into a descriptor.
/// Generated Harvey-Lawson spectra are enumerated up to at least
/// min_complete; file spectra keep their stored completeness bound.
struct ResolvedModuli {
    int m = 3;
    std::int64_t family_dim = 0;
    bool transverse = false;
    TopologyData topology;
    std::vector<MultiEndPoint> points;
    std::vector<bool> separated; // one flag per point

    bool all_single() const;
    /// View as a plain one-cone-per-point configuration; throws when a
    /// point has separated components.
    SingularConfig as_singular() const;
};

ResolvedModuli resolve_config(const ModuliConfig& config,
                              const Rational& min_complete,
                              const EnumerationOptions& opts = {});

} // namespace slcone
