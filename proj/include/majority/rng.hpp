#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "majority/fraction.hpp"

namespace majority {

/// FNV-1a hash of a purpose tag such as "out-regular" or "retry".
constexpr std::uint64_t tag_hash(std::string_view tag) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char ch : tag) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// SplitMix64 finaliser.
std::uint64_t splitmix64(std::uint64_t x);

/// Derives an independent stream seed from (seed, purpose tag, index).
std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0);

/// Portable random source.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Distributions are implemented here (rejection sampling for
/// bounded integers, 53-bit doubles) because the standard library's
/// distribution objects are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform double in [0, 1).
    double unit();

    /// True with probability exactly num/den.
    bool bernoulli(const Fraction& prob);

    /// True with probability prob (clamped to [0, 1]).
    bool bernoulli(double prob);

private:
    std::mt19937_64 engine_;
};

}  // namespace majority
