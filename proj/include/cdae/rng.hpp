#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace cdae {

/// Deterministic 64-bit PRNG: xoshiro256** seeded through splitmix64.
///
/// The generator is fixed so that a recorded seed reproduces the exact same
/// stream on every platform; serialized models record the algorithm name
/// (see kPrngName). Instances are single-owner: never share one across
/// threads, derive independent streams with derive() instead.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }

    /// Next raw 64-bit word of the stream.
    std::uint64_t next_u64();

    /// Uniform double in the open interval (lo, hi).
    double uniform(double lo, double hi);

    /// Standard normal draw (Marsaglia polar method).
    double normal();

    /// Independent stream for a sub-task (layer index, class pair, ...).
    /// Distinct tags give uncorrelated streams; same (seed, tag) always
    /// gives the same stream.
    SeededRng derive(std::uint64_t tag) const;

    /// Uniform integer in [0, n), n >= 1. Uses rejection so the result is
    /// unbiased and platform-independent.
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t seed_;
    std::array<std::uint64_t, 4> state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Algorithm identifier written into serialized artifacts.
inline constexpr const char* kPrngName = "xoshiro256**/splitmix64";

}  // namespace cdae
