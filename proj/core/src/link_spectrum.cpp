#include "slcone/link_spectrum.hpp"

#include <algorithm>

#include "slcone/errors.hpp"

namespace slcone {

LinkSpectrum::LinkSpectrum(int ambient_dim, Rational complete_up_to,
                           std::vector<SpectrumEntry> entries)
    : ambient_dim_(ambient_dim),
      complete_up_to_(complete_up_to),
      entries_(std::move(entries)) {
    if (ambient_dim_ < 3)
        throw ConfigError("spectrum field m: must be >= 3");
    if (complete_up_to_.is_negative())
        throw ConfigError("spectrum field complete_up_to: must be >= 0");
    if (entries_.empty() || !(entries_.front().lambda == Rational(0)))
        throw ConfigError(
            "spectrum entries: first eigenvalue must be 0 (constants are harmonic)");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].mult <= 0)
            throw ConfigError("spectrum entries: multiplicities must be positive");
        if (i > 0 && !(entries_[i - 1].lambda < entries_[i].lambda))
            throw ConfigError("spectrum entries: eigenvalues must be strictly increasing");
        if (entries_[i].lambda > complete_up_to_)
            throw ConfigError("spectrum entries: eigenvalue beyond complete_up_to");
    }
}

std::int64_t LinkSpectrum::multiplicity(const Rational& lambda) const {
    if (lambda.is_negative())
        return 0;
    if (lambda > complete_up_to_)
        throw SpectrumTruncated("spectrum truncated: eigenvalue " + lambda.to_string() +
                                " beyond completeness bound " +
                                complete_up_to_.to_string());
    const auto it = std::lower_bound(
        entries_.begin(), entries_.end(), lambda,
        [](const SpectrumEntry& e, const Rational& v) { return e.lambda < v; });
    if (it != entries_.end() && it->lambda == lambda)
        return it->mult;
    return 0;
}

ConeDescriptor::ConeDescriptor(LinkSpectrum spectrum, std::int64_t link_components,
                               std::int64_t sym_dim, std::string label)
    : spectrum_(std::move(spectrum)),
      link_components_(link_components),
      sym_dim_(sym_dim),
      label_(std::move(label)) {
    if (link_components_ < 1)
        throw ConfigError("cone field b0: must be >= 1");
    const std::int64_t m = spectrum_.ambient_dim();
    if (sym_dim_ < 0 || sym_dim_ > checked_sub(checked_mul(m, m), 1))
        throw ConfigError("cone field dim_g: must lie in [0, m^2-1]");
}

} // namespace slcone
