#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slcone/rational.hpp"

namespace slcone {

struct SpectrumEntry {
    Rational lambda;       // Laplace eigenvalue on the link
    std::int64_t mult = 0; // its multiplicity

    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Spectrum of the Laplacian on the link of a special Lagrangian cone
/// in C^m, complete up to a stated bound: every eigenvalue
/// <= complete_up_to appears, with exact multiplicity. Immutable after
/// construction and safe to share across threads.
class LinkSpectrum {
public:
    LinkSpectrum(int ambient_dim, Rational complete_up_to,
                 std::vector<SpectrumEntry> entries);

    int ambient_dim() const { return ambient_dim_; }
    const Rational& complete_up_to() const { return complete_up_to_; }
    std::span<const SpectrumEntry> entries() const { return entries_; }

    /// Multiplicity of the eigenvalue lambda, 0 if absent. Negative
    /// lambda is never an eigenvalue. Throws SpectrumTruncated when
    /// lambda exceeds the completeness bound.
    std::int64_t multiplicity(const Rational& lambda) const;

    friend bool operator==(const LinkSpectrum&, const LinkSpectrum&) = default;

private:
    int ambient_dim_ = 0;
    Rational complete_up_to_;
    std::vector<SpectrumEntry> entries_;
};

/// One special Lagrangian cone: its link spectrum plus the data that
/// enters the stability index — the number of link components b0 and
/// the dimension of the SU(m) subgroup preserving the cone.
class ConeDescriptor {
public:
    ConeDescriptor(LinkSpectrum spectrum, std::int64_t link_components,
                   std::int64_t sym_dim, std::string label = {});

    const LinkSpectrum& spectrum() const { return spectrum_; }
    int ambient_dim() const { return spectrum_.ambient_dim(); }
    std::int64_t link_components() const { return link_components_; }
    std::int64_t sym_dim() const { return sym_dim_; }
    const std::string& label() const { return label_; }

private:
    LinkSpectrum spectrum_;
    std::int64_t link_components_ = 1;
    std::int64_t sym_dim_ = 0;
    std::string label_;
};

} // namespace slcone
