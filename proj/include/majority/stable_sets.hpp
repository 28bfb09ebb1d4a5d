#pragma once

#include <cstdint>
#include <vector>

#include "majority/digraph.hpp"
#include "majority/fraction.hpp"

namespace majority {

/// Sorted list of distinct vertices.
using VertexSet = std::vector<Vertex>;

/// Sampling parameters with 0 < alpha < p < beta < 1.
///
/// delta_required is the out-degree above which sampling each vertex with
/// probability p and discarding the overloaded ones keeps alpha*n vertices
/// in expectation.
struct StableSetParams {
    Fraction alpha;
    Fraction p;
    Fraction beta;
    std::int64_t delta_required = 0;

    /// Validates the ordering and computes delta_required.
    static StableSetParams make(Fraction alpha, Fraction p, Fraction beta);

    /// alpha = 1/3, p = 19/50, beta = 1/2 (delta_required = 129).
    static StableSetParams third();
    /// alpha = 1/2 - eps, p = 1/2 - eps/2, beta = 1/2.
    static StableSetParams near_half(Fraction eps);
    /// alpha = 1/k - eps, p = 1/k - eps/2, beta = 1/k.
    static StableSetParams one_over_k(std::int64_t k, Fraction eps);
};

struct StableCheck {
    bool valid = true;
    std::vector<Vertex> violations;  // v in T with den * |N+(v) ∩ T| > num * d_v
};

/// Throws std::invalid_argument on a vertex outside the digraph.
StableCheck verify_stable(const Digraph& g, const VertexSet& t, const Fraction& beta);

struct StableSetResult {
    bool success = false;
    VertexSet t;  // S \ B; on failure the largest T seen
    VertexSet s;  // sampled set
    VertexSet b;  // sampled vertices with more than beta * d_v sampled out-neighbours
    std::size_t tries_used = 0;
    std::size_t target = 0;  // ceil(alpha * n)
};

/// Per try t (stream mix_seed(seed, "stable", t)): sample S with
/// probability p, drop the overloaded vertices, accept when
/// |T| >= ceil(alpha n). max_tries = 0 returns a failure immediately.
StableSetResult random_stable_set(const Digraph& g, const StableSetParams& params, std::size_t max_tries,
                                  std::uint64_t seed);

struct StableThirdResult {
    StableSetResult result;
    /// delta >= 22 and every out-degree passes the tail check below.
    bool hypothesis_ok = false;
    std::vector<std::size_t> failing_degrees;
};

/// P(Bin(d, 19/50) > d/2) <= 7/57: exact for 22 <= d <= 128, Chernoff for
/// d >= 129, false below 22.
bool third_tail_condition(std::size_t d);

/// random_stable_set with StableSetParams::third() plus the advisory
/// hypothesis check.
StableThirdResult stable_third(const Digraph& g, std::size_t max_tries, std::uint64_t seed);

inline constexpr std::size_t kMaxEnumerationVertices = 20;

/// All inclusion-maximal beta-stable sets, in lexicographic order. Every
/// stable set is a subset of one of them. Throws if n exceeds max_n (at
/// most kMaxEnumerationVertices).
std::vector<VertexSet> enumerate_stable_sets(const Digraph& g, const Fraction& beta,
                                             std::size_t max_n = kMaxEnumerationVertices);

}  // namespace majority
