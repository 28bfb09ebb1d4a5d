#include "majority/generators.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "majority/rng.hpp"

namespace majority {

Digraph gen_cycle_power(std::size_t n, std::size_t k) {
    if (k < 1 || k + 1 > n)
        throw std::invalid_argument("cycle power needs 1 <= k <= n-1 (n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k) + ")");
    std::vector<Arc> arcs;
    arcs.reserve(n * k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 1; j <= k; ++j)
            arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + j) % n)});
    return Digraph(n, std::move(arcs));
}

Digraph gen_random_digraph(std::size_t n, double arc_prob, std::uint64_t seed) {
    if (!(arc_prob >= 0.0 && arc_prob <= 1.0))
        throw std::invalid_argument("arc probability must lie in [0, 1]");
    Rng rng(mix_seed(seed, "random-digraph"));
    std::vector<Arc> arcs;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && rng.bernoulli(arc_prob))
                arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    return Digraph(n, std::move(arcs));
}

Digraph gen_random_out_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
    if (n == 0 ? d != 0 : d > n - 1)
        throw std::invalid_argument("out-degree " + std::to_string(d) + " out of range for " +
                                    std::to_string(n) + " vertices");
    std::vector<Arc> arcs(n * d);
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel
    {
        std::vector<Vertex> pool(n > 0 ? n - 1 : 0);
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < count; ++i) {
            const auto v = static_cast<Vertex>(i);
            Rng rng(mix_seed(seed, "out-regular", v));
            // Candidates are every vertex except v; partial Fisher-Yates.
            for (std::size_t j = 0; j + 1 < n; ++j)
                pool[j] = static_cast<Vertex>(j < v ? j : j + 1);
            for (std::size_t j = 0; j < d; ++j) {
                const std::size_t pick = j + rng.below(pool.size() - j);
                std::swap(pool[j], pool[pick]);
                arcs[v * d + j] = {v, pool[j]};
            }
        }
    }
    return Digraph(n, std::move(arcs));
}

Digraph gen_tournament(std::size_t n, std::uint64_t seed) {
    Rng rng(mix_seed(seed, "tournament"));
    std::vector<Arc> arcs;
    arcs.reserve(n * (n > 0 ? n - 1 : 0) / 2);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            if (rng.next() >> 63)
                arcs.push_back({static_cast<Vertex>(v), static_cast<Vertex>(u)});
            else
                arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        }
    return Digraph(n, std::move(arcs));
}

namespace {

// C(n, r), saturating at cap + 1.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t r, std::uint64_t cap) {
    if (r > n)
        return 0;
    r = std::min(r, n - r);
    unsigned __int128 value = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        value = value * (n - r + i) / i;
        if (value > cap)
            return cap + 1;
    }
    return static_cast<std::uint64_t>(value);
}

}  // namespace

Digraph gen_subset_blowup(const Digraph& base, std::size_t delta, std::uint64_t cap) {
    const std::size_t n = base.n();
    if (delta > n)
        throw std::invalid_argument("subset size exceeds base vertex count");
    const std::uint64_t subsets = binomial_capped(n, delta, cap);
    if (subsets > cap)
        throw std::invalid_argument("C(" + std::to_string(n) + ", " + std::to_string(delta) +
                                    ") exceeds the blow-up cap of " + std::to_string(cap));

    std::vector<Arc> arcs = base.arcs();
    arcs.reserve(arcs.size() + subsets * delta);
    std::vector<Vertex> subset(delta);
    std::iota(subset.begin(), subset.end(), Vertex{0});
    auto next_vertex = static_cast<Vertex>(n);
    for (std::uint64_t s = 0; s < subsets; ++s) {
        for (Vertex w : subset)
            arcs.push_back({next_vertex, w});
        ++next_vertex;
        // Advance to the lexicographically next delta-subset.
        std::size_t i = delta;
        while (i > 0 && subset[i - 1] == n - delta + i - 1)
            --i;
        if (i == 0)
            break;
        ++subset[i - 1];
        for (std::size_t j = i; j < delta; ++j)
            subset[j] = subset[j - 1] + 1;
    }
    return Digraph(n + subsets, std::move(arcs));
}

}  // namespace majority
