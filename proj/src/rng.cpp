#include "majority/rng.hpp"

#include <limits>

namespace majority {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ tag_hash(tag));
    return splitmix64(h ^ index);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

double Rng::unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

bool Rng::bernoulli(const Fraction& prob) {
    if (prob.num() <= 0)
        return false;
    if (prob.num() >= prob.den())
        return true;
    return below(static_cast<std::uint64_t>(prob.den())) < static_cast<std::uint64_t>(prob.num());
}

bool Rng::bernoulli(double prob) {
    if (prob <= 0.0)
        return false;
    if (prob >= 1.0)
        return true;
    return unit() < prob;
}

}  // namespace majority
