#pragma once

// Data-parallel counting kernels shared by the verifiers and the stable-set
// sampler. Each OpenMP kernel has a serial reference twin with identical
// output; tests compare the two and bench/ times them against each other.

#include <cstdint>
#include <span>
#include <vector>

#include "majority/digraph.hpp"

namespace majority::kernels {

/// For every vertex v: number of out-neighbours u with colours[u] == colours[v].
std::vector<std::uint32_t> same_colour_counts(const Digraph& g, std::span<const std::uint32_t> colours);
std::vector<std::uint32_t> same_colour_counts_serial(const Digraph& g, std::span<const std::uint32_t> colours);

/// For every vertex v with member[v] set: |N+(v) ∩ member|. Zero elsewhere.
std::vector<std::uint32_t> member_out_counts(const Digraph& g, std::span<const std::uint8_t> member);
std::vector<std::uint32_t> member_out_counts_serial(const Digraph& g, std::span<const std::uint8_t> member);

}  // namespace majority::kernels
