#include "slcone/spectrum_file.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "slcone/errors.hpp"

namespace slcone {

namespace {

using ordered_json = nlohmann::ordered_json;

std::int64_t require_int(const nlohmann::json& node, const std::string& field) {
    if (!node.is_number_integer() ||
        (node.is_number_unsigned() &&
         node.get<std::uint64_t>() >
             static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())))
        throw ConfigError("spectrum field " + field + ": expected a 64-bit integer");
    return node.get<std::int64_t>();
}

Rational read_rational_pair(const nlohmann::json& node, const std::string& field) {
    if (!node.is_array() || node.size() != 2)
        throw ConfigError("spectrum field " + field + ": expected [num, den]");
    const std::int64_t num = require_int(node[0], field);
    const std::int64_t den = require_int(node[1], field);
    if (den <= 0)
        throw ConfigError("spectrum field " + field + ": denominator must be positive");
    return Rational(num, den);
}

} // namespace

SpectrumDocument read_spectrum_document(const std::string& text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ConfigError(std::string("spectrum document: not valid JSON: ") +
                          err.what());
    }
    if (!root.is_object())
        throw ConfigError("spectrum document: expected a JSON object");
    for (const char* field : {"m", "b0", "dim_g", "complete_up_to", "entries"})
        if (!root.contains(field))
            throw ConfigError(std::string("spectrum field ") + field + ": missing");

    SpectrumDocument doc;
    doc.m = static_cast<int>(require_int(root["m"], "m"));
    doc.b0 = require_int(root["b0"], "b0");
    doc.dim_g = require_int(root["dim_g"], "dim_g");
    doc.complete_up_to = read_rational_pair(root["complete_up_to"], "complete_up_to");

    if (!root["entries"].is_array())
        throw ConfigError("spectrum field entries: expected an array");
    for (const auto& item : root["entries"]) {
        if (!item.is_array() || item.size() != 3)
            throw ConfigError(
                "spectrum field entries: expected [lambda_num, lambda_den, mult]");
        const std::int64_t num = require_int(item[0], "entries");
        const std::int64_t den = require_int(item[1], "entries");
        const std::int64_t mult = require_int(item[2], "entries");
        if (den <= 0)
            throw ConfigError(
                "spectrum field entries: lambda_den must be positive");
        doc.entries.push_back({Rational(num, den), mult});
    }
    // surface invariant violations with the reader's field vocabulary
    to_cone(doc);
    return doc;
}

SpectrumDocument read_spectrum_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open spectrum file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return read_spectrum_document(buffer.str());
}

std::string write_spectrum_document(const SpectrumDocument& doc) {
    ordered_json root;
    root["m"] = doc.m;
    root["b0"] = doc.b0;
    root["dim_g"] = doc.dim_g;
    root["complete_up_to"] = {doc.complete_up_to.num(), doc.complete_up_to.den()};
    auto& entries = root["entries"] = ordered_json::array();
    for (const auto& entry : doc.entries)
        entries.push_back({entry.lambda.num(), entry.lambda.den(), entry.mult});
    return root.dump(2) + "\n";
}

ConeDescriptor to_cone(const SpectrumDocument& doc, std::string label) {
    return ConeDescriptor(LinkSpectrum(doc.m, doc.complete_up_to, doc.entries),
                          doc.b0, doc.dim_g, std::move(label));
}

SpectrumDocument from_cone(const ConeDescriptor& cone) {
    SpectrumDocument doc;
    doc.m = cone.ambient_dim();
    doc.b0 = cone.link_components();
    doc.dim_g = cone.sym_dim();
    doc.complete_up_to = cone.spectrum().complete_up_to();
    doc.entries.assign(cone.spectrum().entries().begin(),
                       cone.spectrum().entries().end());
    return doc;
}

} // namespace slcone
