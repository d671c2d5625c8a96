#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "slcone/link_spectrum.hpp"

namespace slcone {

/// On-disk form of a cone's spectrum. JSON with canonical field order
///   {"m", "b0", "dim_g", "complete_up_to", "entries"}
/// where complete_up_to is a [num, den] pair and each entry is
/// [lambda_num, lambda_den, mult], sorted strictly ascending. No
/// floating point anywhere; writing the result of a read reproduces
/// the input byte for byte.
struct SpectrumDocument {
    int m = 3;
    std::int64_t b0 = 1;
    std::int64_t dim_g = 0;
    Rational complete_up_to;
    std::vector<SpectrumEntry> entries;
};

SpectrumDocument read_spectrum_document(const std::string& text);
SpectrumDocument read_spectrum_file(const std::filesystem::path& path);

/// Canonical serialization, including the trailing newline.
std::string write_spectrum_document(const SpectrumDocument& doc);

ConeDescriptor to_cone(const SpectrumDocument& doc, std::string label = {});
SpectrumDocument from_cone(const ConeDescriptor& cone);

} // namespace slcone
