#include "majority/kernels.hpp"

#include <cstddef>

namespace majority::kernels {

std::vector<std::uint32_t> same_colour_counts(const Digraph& g, std::span<const std::uint32_t> colours) {
    const auto n = static_cast<std::int64_t>(g.n());
    std::vector<std::uint32_t> counts(g.n(), 0);
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto v = static_cast<Vertex>(i);
        const std::uint32_t own = colours[v];
        std::uint32_t c = 0;
        for (Vertex u : g.out(v))
            c += colours[u] == own;
        counts[v] = c;
    }
    return counts;
}

std::vector<std::uint32_t> same_colour_counts_serial(const Digraph& g, std::span<const std::uint32_t> colours) {
    std::vector<std::uint32_t> counts(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        const std::uint32_t own = colours[v];
        std::uint32_t c = 0;
        for (Vertex u : g.out(v))
            c += colours[u] == own;
        counts[v] = c;
    }
    return counts;
}

std::vector<std::uint32_t> member_out_counts(const Digraph& g, std::span<const std::uint8_t> member) {
    const auto n = static_cast<std::int64_t>(g.n());
    std::vector<std::uint32_t> counts(g.n(), 0);
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto v = static_cast<Vertex>(i);
        if (!member[v])
            continue;
        std::uint32_t c = 0;
        for (Vertex u : g.out(v))
            c += member[u] != 0;
        counts[v] = c;
    }
    return counts;
}

std::vector<std::uint32_t> member_out_counts_serial(const Digraph& g, std::span<const std::uint8_t> member) {
    std::vector<std::uint32_t> counts(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (!member[v])
            continue;
        std::uint32_t c = 0;
        for (Vertex u : g.out(v))
            c += member[u] != 0;
        counts[v] = c;
    }
    return counts;
}

}  // namespace majority::kernels
