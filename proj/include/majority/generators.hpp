#pragma once

#include <cstdint>

#include "majority/digraph.hpp"

namespace majority {

/// Circulant: N+(i) = {i+1, ..., i+k} mod n. Requires 1 <= k <= n-1.
Digraph gen_cycle_power(std::size_t n, std::size_t k);

/// The directed n-cycle 0->1->...->n-1->0 (cycle power with k = 1).
inline Digraph gen_cycle(std::size_t n) { return gen_cycle_power(n, 1); }

/// Each ordered pair (u, v), u != v, is an arc independently with
/// probability arc_prob. Pairs are visited in (u, v) order from one stream.
Digraph gen_random_digraph(std::size_t n, double arc_prob, std::uint64_t seed);

/// Each vertex gets exactly d distinct out-neighbours, uniform without
/// replacement. Vertex v draws from its own stream mix_seed(seed, tag, v),
/// so the per-vertex work runs in parallel without changing the output.
Digraph gen_random_out_regular(std::size_t n, std::size_t d, std::uint64_t seed);

/// One arc per unordered pair, orientation uniform.
Digraph gen_tournament(std::size_t n, std::uint64_t seed);

/// Adds one vertex per delta-subset S of V(base), with out-neighbourhood S.
/// New vertices are numbered base.n(), base.n()+1, ... in lexicographic
/// order of S. Throws std::invalid_argument when C(n, delta) exceeds cap.
Digraph gen_subset_blowup(const Digraph& base, std::size_t delta, std::uint64_t cap = 1'000'000);

}  // namespace majority
