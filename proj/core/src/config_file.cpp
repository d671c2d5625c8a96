#include "slcone/config_file.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "slcone/errors.hpp"
#include "slcone/spectrum_file.hpp"

namespace slcone {

namespace {

std::int64_t require_int(const nlohmann::json& node, const std::string& field) {
    if (!node.is_number_integer() ||
        (node.is_number_unsigned() &&
         node.get<std::uint64_t>() >
             static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())))
        throw ConfigError("config field " + field + ": expected a 64-bit integer");
    return node.get<std::int64_t>();
}

ConeSource parse_source(const nlohmann::json& node, const std::string& field,
                        const std::filesystem::path& base_dir, bool allow_plane) {
    if (!node.is_string())
        throw ConfigError("config field " + field +
                          ": expected \"hl\", \"plane\" or a spectrum file path");
    const std::string text = node.get<std::string>();
    if (text == "hl")
        return HlGeneratorSource{};
    if (text == "plane") {
        if (!allow_plane)
            throw ConfigError("config field " + field +
                              ": \"plane\" is only valid inside components");
        return PlaneSource{};
    }
    std::filesystem::path path(text);
    if (path.is_relative())
        path = base_dir / path;
    return SpectrumFileSource{std::move(path)};
}

} // namespace

ModuliConfig read_config_document(const std::string& text,
                                  const std::filesystem::path& base_dir) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ConfigError(std::string("config: not valid JSON: ") + err.what());
    }
    if (!root.is_object())
        throw ConfigError("config: expected a JSON object");
    for (const char* field : {"m", "topology", "points"})
        if (!root.contains(field))
            throw ConfigError(std::string("config field ") + field + ": missing");

    ModuliConfig config;
    config.m = static_cast<int>(require_int(root["m"], "m"));
    if (root.contains("family_dim"))
        config.family_dim = require_int(root["family_dim"], "family_dim");
    if (root.contains("transverse")) {
        if (!root["transverse"].is_boolean())
            throw ConfigError("config field transverse: expected a boolean");
        config.transverse = root["transverse"].get<bool>();
    }

    const auto& topology = root["topology"];
    if (!topology.is_object() || !topology.contains("b1_x_prime") ||
        !topology.contains("restriction_rank"))
        throw ConfigError(
            "config field topology: expected {b1_x_prime, restriction_rank}");
    config.topology.b1_x_prime = require_int(topology["b1_x_prime"], "topology.b1_x_prime");
    config.topology.restriction_rank =
        require_int(topology["restriction_rank"], "topology.restriction_rank");
    if (config.topology.b1_x_prime < 0 || config.topology.restriction_rank < 0)
        throw ConfigError("config field topology: Betti data must be nonnegative");
    if (config.topology.restriction_rank > config.topology.b1_x_prime)
        throw ConfigError(
            "config field topology: restriction_rank exceeds b1_x_prime");
    if (config.family_dim < 0)
        throw ConfigError("config field family_dim: must be nonnegative");

    if (!root["points"].is_array() || root["points"].empty())
        throw ConfigError("config field points: expected a nonempty array");
    for (const auto& item : root["points"]) {
        ConfigPoint point;
        if (item.is_object() && item.contains("cone")) {
            point.components.push_back(
                parse_source(item["cone"], "points[].cone", base_dir,
                             /*allow_plane=*/false));
        } else if (item.is_object() && item.contains("components")) {
            if (!item["components"].is_array() || item["components"].empty())
                throw ConfigError(
                    "config field points[].components: expected a nonempty array");
            point.separated = true;
            for (const auto& component : item["components"])
                point.components.push_back(parse_source(component,
                                                        "points[].components",
                                                        base_dir,
                                                        /*allow_plane=*/true));
        } else {
            throw ConfigError(
                "config field points: each point needs \"cone\" or \"components\"");
        }
        config.points.push_back(std::move(point));
    }
    return config;
}

ModuliConfig read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return read_config_document(buffer.str(), path.parent_path());
}

bool ResolvedModuli::all_single() const {
    for (const bool flag : separated)
        if (flag)
            return false;
    return true;
}

SingularConfig ResolvedModuli::as_singular() const {
    SingularConfig config;
    config.topology = topology;
    config.family_dim = family_dim;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (separated[i] || points[i].components.size() != 1)
            throw ConfigError("config: separated-components point has no single-cone form");
        config.cones.push_back(std::get<ConeDescriptor>(points[i].components.front()));
    }
    return config;
}

ResolvedModuli resolve_config(const ModuliConfig& config, const Rational& min_complete,
                              const EnumerationOptions& opts) {
    if (config.m < 3)
        throw ConfigError("config field m: must be >= 3");
    ResolvedModuli resolved;
    resolved.m = config.m;
    resolved.family_dim = config.family_dim;
    resolved.transverse = config.transverse;
    resolved.topology = config.topology;

    const std::int64_t hl_bound = min_complete.ceil();
    for (const auto& point : config.points) {
        MultiEndPoint ends;
        for (const auto& source : point.components) {
            if (std::holds_alternative<HlGeneratorSource>(source)) {
                ends.components.push_back(hl_cone(config.m, hl_bound, opts));
            } else if (std::holds_alternative<PlaneSource>(source)) {
                ends.components.push_back(PlaneComponent{});
            } else {
                const auto& ref = std::get<SpectrumFileSource>(source);
                ConeDescriptor cone = to_cone(read_spectrum_file(ref.path),
                                              ref.path.filename().string());
                if (cone.ambient_dim() != config.m)
                    throw ConfigError("spectrum file " + ref.path.string() +
                                      ": ambient dimension " +
                                      std::to_string(cone.ambient_dim()) +
                                      " does not match config m = " +
                                      std::to_string(config.m));
                ends.components.push_back(std::move(cone));
            }
        }
        resolved.points.push_back(std::move(ends));
        resolved.separated.push_back(point.separated);
    }
    return resolved;
}

} // namespace slcone
