#pragma once

#include <cstdint>
#include <string_view>

namespace pra {

/// Counter-free xoshiro256** generator with splitmix64 seeding. Used instead
/// of std:: distributions so that streams are bit-reproducible across
/// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform double in (0, 1), 53-bit resolution, never exactly 0 or 1.
    double uniform();

    /// Standard normal via inverse-CDF transform of uniform().
    double normal();

private:
    std::uint64_t s_[4];
};

/// Derives a child seed from (seed, stream name, index); used to give every
/// Monte-Carlo sample and pipeline stage its own reproducible stream.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream, std::uint64_t index);

}  // namespace pra
