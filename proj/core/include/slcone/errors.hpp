#pragma once

#include <stdexcept>
#include <string>

namespace slcone {

/// Thrown when a checked integer operation would wrap around.
class ArithmeticOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an operation needs eigenvalues beyond the completeness
/// bound of a spectrum. Results are never silently computed from
/// truncated data.
class SpectrumTruncated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an enumeration would exceed the configured point cap.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad file contents, bad field values, inconsistent
/// descriptors. The message names the offending field where possible.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace slcone
