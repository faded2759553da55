#pragma once

#include <cstddef>
#include <string>

#include "cdae/matrix.hpp"
#include "cdae/rng.hpp"

namespace cdae {

enum class CorruptionKind { none, gaussian, mask_indices, mask_fraction };

std::string to_string(CorruptionKind k);
CorruptionKind corruption_kind_from_string(const std::string& s);

/// Which noise process produces the corrupted input x~ from a clean sample.
///
/// kind=none corrupts nothing, so plain and contractive autoencoders go
/// through the same interface. mask_indices zeroes the deterministic
/// arithmetic progression start, start+stride, ... (the 0-based equivalent
/// of a MATLAB-style 1:stride:d slice); mask_fraction zeroes a uniformly
/// random floor(fraction*d)-subset afresh on every call.
struct CorruptionSpec {
    CorruptionKind kind = CorruptionKind::none;
    double sigma = 0.0;        // gaussian
    std::size_t start = 0;     // mask_indices
    std::size_t stride = 1;    // mask_indices
    double fraction = 0.0;     // mask_fraction

    static CorruptionSpec none() { return {}; }
    static CorruptionSpec gaussian(double sigma);
    static CorruptionSpec mask_indices(std::size_t start, std::size_t stride);
    static CorruptionSpec mask_fraction(double fraction);

    bool is_none() const { return kind == CorruptionKind::none; }

    /// Throws ConfigError for invalid parameter combinations
    /// (gaussian sigma <= 0, fraction outside [0,1], stride 0).
    void validate() const;

    bool operator==(const CorruptionSpec&) const = default;
};

/// Produce the corrupted input. Deterministic given (spec, x, rng state);
/// kind=none and mask_indices consume no randomness.
Vector corrupt(const CorruptionSpec& spec, const Vector& x, SeededRng& rng);

}  // namespace cdae
