#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "majority/colouring.hpp"
#include "majority/generators.hpp"
#include "majority/structure.hpp"

using namespace majority;

namespace {

const MajoritySpec kHalf2{2, Fraction(1, 2)};
const MajoritySpec kHalf3{3, Fraction(1, 2)};
const MajoritySpec kHalf4{4, Fraction(1, 2)};

Digraph non_hereditary_example() {
    // a=0, b=1, c=2, d=3 with arcs ab, bc, ca, cd
    return Digraph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
}

std::vector<Digraph> corpus() {
    std::vector<Digraph> out;
    const double probs[] = {0.05, 0.2, 0.5};
    for (std::uint64_t seed = 0; seed < 45; ++seed)
        out.push_back(gen_random_digraph(1 + (seed * 7) % 60, probs[seed % 3], seed));
    out.push_back(gen_tournament(25, 1));
    out.push_back(gen_random_out_regular(80, 9, 2));
    out.push_back(gen_cycle_power(17, 5));
    out.push_back(gen_subset_blowup(gen_cycle(6), 2));
    return out;
}

std::size_t same_undirected(const UndirectedGraph& u, const Colouring& c, Vertex v) {
    std::size_t same = 0;
    for (Vertex w : u.neighbours(v))
        same += c[w] == c[v];
    return same;
}

}  // namespace

TEST(Colouring, RejectsOutOfRangeColours) {
    EXPECT_THROW(Colouring({0, 2}, 2), std::invalid_argument);
    EXPECT_EQ(Colouring({0, 1, 1, 4}, 5).colours_used(), 3u);
}

TEST(VerifyMajority, SingleVertex) {
    EXPECT_TRUE(verify_majority(Digraph(1, {}), Colouring({1}, 2), kHalf2).valid);
}

TEST(VerifyMajority, TriangleWithRepeatedColour) {
    const auto r = verify_majority(gen_cycle(3), Colouring({1, 1, 2}, 3), kHalf3);
    EXPECT_FALSE(r.valid);
    EXPECT_EQ(r.violations, std::vector<Vertex>{0});
    EXPECT_EQ(r.same_colour_count, (std::vector<std::uint32_t>{1, 0, 0}));
}

TEST(VerifyMajority, NonHereditaryExampleColouring) {
    // a, c get one colour; b, d the other.
    EXPECT_TRUE(verify_majority(non_hereditary_example(), Colouring({0, 1, 0, 1}, 2), kHalf2).valid);
}

TEST(VerifyMajority, OddDegreeAllowsFloorHalf) {
    const Digraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    EXPECT_TRUE(verify_majority(star, Colouring({0, 0, 1, 1}, 2), kHalf2).valid);   // 2*1 <= 3
    EXPECT_FALSE(verify_majority(star, Colouring({0, 0, 0, 1}, 2), kHalf2).valid);  // 2*2 > 3
}

TEST(VerifyMajority, InputErrors) {
    EXPECT_THROW(verify_majority(gen_cycle(3), Colouring({0, 0}, 2), kHalf2), std::invalid_argument);
    EXPECT_THROW(verify_majority(gen_cycle(3), Colouring({0, 0, 2}, 3), kHalf2), std::invalid_argument);
    EXPECT_THROW(verify_majority(gen_cycle(3), Colouring({0, 0, 1}, 2), {2, Fraction(3, 2)}), std::invalid_argument);
}

TEST(VerifyMajority, SerialAndParallelAgree) {
    std::mt19937 rng(5);
    for (const Digraph& g : corpus()) {
        std::vector<Colour> cs(g.n());
        for (auto& c : cs)
            c = rng() % 3;
        const Colouring c(cs, 3);
        const auto a = verify_majority(g, c, kHalf3);
        const auto b = verify_majority_serial(g, c, kHalf3);
        EXPECT_EQ(a.valid, b.valid);
        EXPECT_EQ(a.violations, b.violations);
        EXPECT_EQ(a.same_colour_count, b.same_colour_count);
    }
}

TEST(GreedyPass, TriangleForward) {
    const Colouring c = greedy_pass(gen_cycle(3), VertexOrdering::identity(3), 2, PassDirection::forward);
    EXPECT_EQ(c.colours, (std::vector<Colour>{0, 0, 1}));
}

TEST(GreedyPass, ReverseTopologicalOrderColoursAcyclicDigraphs) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        // Keep only arcs u -> v with u < v: identity is a topological order.
        const Digraph r = gen_random_digraph(40, 0.2, seed);
        std::vector<Arc> arcs;
        for (const Arc& a : r.arcs())
            if (a.tail < a.head)
                arcs.push_back(a);
        const Digraph dag(40, arcs);
        std::vector<Vertex> rev(40);
        std::iota(rev.rbegin(), rev.rend(), Vertex{0});
        const Colouring c = greedy_pass(dag, VertexOrdering(rev), 2, PassDirection::forward);
        EXPECT_TRUE(verify_majority(dag, c, kHalf2).valid);
    }
}

TEST(GreedyPass, EdgelessTakesColourZero) {
    const Colouring c = greedy_pass(Digraph(5, {}), VertexOrdering::identity(5), 3, PassDirection::backward);
    EXPECT_EQ(c.colours, std::vector<Colour>(5, 0));
}

TEST(GreedyPass, ProcessedSidePrefixGuarantee) {
    std::mt19937_64 rng(77);
    for (const Digraph& g : corpus())
        for (Colour k : {2u, 3u, 5u})
            for (auto dir : {PassDirection::forward, PassDirection::backward}) {
                std::vector<Vertex> order(g.n());
                std::iota(order.begin(), order.end(), Vertex{0});
                std::shuffle(order.begin(), order.end(), rng);
                const VertexOrdering ord(order);
                const Colouring c = greedy_pass(g, ord, k, dir);
                for (Vertex v = 0; v < g.n(); ++v) {
                    std::size_t side = 0, matches = 0;
                    for (Vertex u : g.out(v)) {
                        const bool processed = dir == PassDirection::forward ? ord.position(u) < ord.position(v)
                                                                             : ord.position(u) > ord.position(v);
                        if (!processed)
                            continue;
                        ++side;
                        matches += c[u] == c[v];
                    }
                    ASSERT_LE(k * matches, side);
                }
            }
}

TEST(ProductColouring, Triangle) {
    const Colouring c = majority_product_colouring(gen_cycle(3), 2);
    EXPECT_EQ(c.k, 4u);
    EXPECT_TRUE(verify_majority(gen_cycle(3), c, kHalf4).valid);
    EXPECT_EQ(c.colours_used(), 3u);
    EXPECT_EQ(c.colours, (std::vector<Colour>{0, 1, 2}));
}

TEST(ProductColouring, AcyclicBackwardPassAlreadyValid) {
    const Digraph dag(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {0, 5}});
    const Colouring back = greedy_pass(dag, VertexOrdering::identity(6), 2, PassDirection::backward);
    EXPECT_TRUE(verify_majority(dag, back, kHalf2).valid);
    EXPECT_TRUE(verify_majority(dag, majority_product_colouring(dag, 2), kHalf4).valid);
}

TEST(ProductColouring, CyclePowerThreeColoursSquared) {
    const Digraph g = gen_cycle_power(11, 3);
    const Colouring c = majority_product_colouring(g, 3);
    EXPECT_LE(c.colours_used(), 9u);
    const auto r = verify_majority(g, c, {9, Fraction(1, 3)});
    EXPECT_TRUE(r.valid);
    for (auto x : r.same_colour_count)
        EXPECT_LE(x, 1u);
}

TEST(ProductColouring, HoldsForAnyOrderingAndK) {
    std::mt19937_64 rng(3);
    for (const Digraph& g : corpus())
        for (Colour k : {2u, 3u, 4u}) {
            std::vector<Vertex> order(g.n());
            std::iota(order.begin(), order.end(), Vertex{0});
            std::shuffle(order.begin(), order.end(), rng);
            const Colouring c = majority_product_colouring(g, k, VertexOrdering(order));
            ASSERT_TRUE(verify_majority(g, c, {k * k, Fraction(1, k)}).valid);
        }
}

TEST(Lovasz, FiveCycle) {
    const UndirectedGraph c5 = underlying_undirected(gen_cycle(5));
    const Colouring c = lovasz_balanced_colouring(c5, 2, std::nullopt, 1);
    for (Vertex v = 0; v < 5; ++v)
        EXPECT_LE(same_undirected(c5, c, v), 1u);
}

TEST(Lovasz, EdgelessSingleColour) {
    const Colouring c = lovasz_balanced_colouring(UndirectedGraph(4, {}), 1, std::nullopt, 0);
    EXPECT_EQ(c.colours, std::vector<Colour>(4, 0));
}

TEST(Lovasz, CompleteFourBalances) {
    const UndirectedGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    std::vector<std::uint64_t> trace;
    const Colouring c = lovasz_balanced_colouring(k4, 2, Colouring({0, 0, 0, 0}, 2), 0, &trace);
    for (Vertex v = 0; v < 4; ++v)
        EXPECT_LE(same_undirected(k4, c, v), 1u);
    EXPECT_EQ(trace.front(), 6u);
    EXPECT_EQ(trace.back(), 2u);
    for (std::size_t i = 1; i < trace.size(); ++i)
        EXPECT_LT(trace[i], trace[i - 1]);
}

TEST(Lovasz, TraceStrictlyDecreasingAndBalanced) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const UndirectedGraph u = underlying_undirected(gen_random_digraph(50, 0.15, seed));
        for (Colour k : {2u, 3u, 4u}) {
            std::vector<std::uint64_t> trace;
            const Colouring c = lovasz_balanced_colouring(u, k, std::nullopt, seed, &trace);
            for (std::size_t i = 1; i < trace.size(); ++i)
                ASSERT_LT(trace[i], trace[i - 1]);
            EXPECT_EQ(trace.back(), monochromatic_edges(u, c));
            for (Vertex v = 0; v < u.n(); ++v)
                ASSERT_LE(k * same_undirected(u, c, v), u.degree(v));
        }
    }
}

TEST(Eulerian, CyclePowerFourColours) {
    const Digraph g = gen_cycle_power(9, 2);
    const Colouring c = eulerian_colouring(g, 4);
    EXPECT_TRUE(verify_majority(g, c, kHalf4).valid);
}

TEST(Eulerian, CyclePowerThreeColoursTwoThirds) {
    const Digraph g = gen_cycle_power(9, 2);
    const Colouring c = eulerian_colouring(g, 3);
    EXPECT_TRUE(verify_in_out_fraction(g, c, Fraction(2, 3)));
    const UndirectedGraph u = underlying_undirected(g);
    for (Vertex v = 0; v < 9; ++v)
        EXPECT_LE(3 * same_undirected(u, c, v), 2 * 4u);
}

TEST(Eulerian, DirectedFourCycle) {
    const Digraph g = gen_cycle(4);
    EXPECT_TRUE(verify_majority(g, eulerian_colouring(g, 4), kHalf4).valid);
}

TEST(Eulerian, ManyCyclePowers) {
    for (std::size_t n = 3; n <= 25; ++n)
        for (std::size_t k = 1; k < n; k += 2) {
            const Digraph g = gen_cycle_power(n, k);
            EXPECT_TRUE(verify_majority(g, eulerian_colouring(g, 4, n), kHalf4).valid);
            EXPECT_TRUE(verify_in_out_fraction(g, eulerian_colouring(g, 3, n), Fraction(2, 3)));
        }
}

TEST(Eulerian, Preconditions) {
    EXPECT_THROW(eulerian_colouring(Digraph(2, {{0, 1}}), 4), std::invalid_argument);
    EXPECT_THROW(eulerian_colouring(gen_cycle(4), 5), std::invalid_argument);
}

TEST(Seymour, Examples) {
    EXPECT_EQ(seymour_3colouring(Digraph(1, {})).colours, std::vector<Colour>{0});
    const Colouring t = seymour_3colouring(gen_cycle(3));
    EXPECT_EQ(t.colours_used(), 3u);
    const Colouring c4 = seymour_3colouring(gen_cycle(4));
    EXPECT_EQ(c4.colours_used(), 2u);
    for (Vertex v = 0; v < 4; ++v)
        EXPECT_NE(c4[v], c4[(v + 1) % 4]);
}

TEST(Seymour, GeneralDigraphs) {
    for (const Digraph& g : corpus()) {
        const Colouring c = seymour_3colouring(g);
        EXPECT_LE(c.k, 3u);
        EXPECT_TRUE(verify_differing_out_neighbour(g, c));
    }
}

TEST(RandomRetry, EdgelessFirstTry) {
    const RetryResult r = random_3colouring_retry(Digraph(6, {}), 1, 0);
    EXPECT_TRUE(r.success);
    EXPECT_EQ(r.tries_used, 1u);
}

TEST(RandomRetry, TriangleSuccessProbability) {
    // Oracle: enumerate all 27 colourings; the valid ones are the proper ones.
    const Digraph g = gen_cycle(3);
    int valid = 0;
    for (Colour a = 0; a < 3; ++a)
        for (Colour b = 0; b < 3; ++b)
            for (Colour c = 0; c < 3; ++c)
                valid += verify_majority(g, Colouring({a, b, c}, 3), kHalf3).valid;
    EXPECT_EQ(valid, 6);  // 6/27 = 2/9

    int hits = 0;
    const int runs = 9000;
    for (int s = 0; s < runs; ++s)
        hits += random_3colouring_retry(g, 1, static_cast<std::uint64_t>(s)).success;
    EXPECT_NEAR(static_cast<double>(hits) / runs, 2.0 / 9.0, 0.02);

    const RetryResult r = random_3colouring_retry(g, 200, 17);
    ASSERT_TRUE(r.success);
    EXPECT_EQ(r.colouring.colours_used(), 3u);
}

TEST(RandomRetry, LargeMinimumDegree) {
    const Digraph g = gen_random_out_regular(1000, 600, 21);
    const RetryResult r = random_3colouring_retry(g, 5, 21);
    EXPECT_TRUE(r.success);
    EXPECT_TRUE(verify_majority(g, r.colouring, kHalf3).valid);
}

TEST(RandomRetry, FailureCarriesLastReport) {
    // On a digon a try fails exactly when both ends share a colour.
    const Digraph digon(2, {{0, 1}, {1, 0}});
    std::size_t failures = 0;
    for (std::uint64_t s = 0; s < 50; ++s) {
        const RetryResult r = random_3colouring_retry(digon, 1, s);
        if (!r.success) {
            ++failures;
            EXPECT_FALSE(r.report.valid);
            EXPECT_EQ(r.report.violations.size(), 2u);
        }
    }
    EXPECT_GT(failures, 0u);
    EXPECT_THROW(random_3colouring_retry(digon, 0, 0), std::invalid_argument);
}

TEST(LllResample, EdgelessZeroRounds) {
    const ResampleResult r = lll_resample_3colouring(Digraph(5, {}), 10, 0);
    EXPECT_TRUE(r.log.success);
    EXPECT_EQ(r.log.rounds, 0u);
}

TEST(LllResample, MonochromaticTriangleRecovers) {
    const Digraph g = gen_cycle(3);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const ResampleResult r = lll_resample_3colouring(g, Colouring({0, 0, 0}, 3), 10000, seed);
        ASSERT_TRUE(r.log.success);
        EXPECT_GE(r.log.rounds, 1u);
        EXPECT_EQ(r.log.resampled_vertices, r.log.rounds);  // out-degree 1
        EXPECT_EQ(r.colouring.colours_used(), 3u);
        EXPECT_TRUE(verify_majority(g, r.colouring, kHalf3).valid);
    }
}

TEST(LllResample, EvenCyclePowers) {
    for (std::size_t n : {20u, 31u, 50u})
        for (std::size_t k : {2u, 4u, 6u}) {
            const Digraph g = gen_cycle_power(n, k);
            const ResampleResult r = lll_resample_3colouring(g, 100000, n * k);
            ASSERT_TRUE(r.log.success) << n << " " << k;
            EXPECT_TRUE(verify_majority(g, r.colouring, kHalf3).valid);
        }
}

TEST(LllResample, AllColoursMode) {
    const Digraph g = gen_random_out_regular(200, 60, 4);
    const ResampleResult r = lll_resample_3colouring(g, 100000, 4, ResampleEvents::all_colours);
    ASSERT_TRUE(r.log.success);
    for (Vertex v = 0; v < g.n(); ++v) {
        std::size_t x[3] = {0, 0, 0};
        for (Vertex u : g.out(v))
            ++x[r.colouring[u]];
        for (auto count : x)
            EXPECT_LE(2 * count, g.out_degree(v));
    }
}

TEST(LllResample, BudgetExhaustion) {
    // Out-degree 1: some colour always takes the whole neighbourhood.
    const ResampleResult r = lll_resample_3colouring(gen_cycle(3), 50, 1, ResampleEvents::all_colours);
    EXPECT_FALSE(r.log.success);
    EXPECT_EQ(r.log.rounds, 50u);
}

TEST(Randomized, DeterministicGivenSeed) {
    const Digraph g = gen_random_out_regular(120, 8, 6);
    EXPECT_EQ(random_3colouring_retry(g, 100, 9).colouring.colours,
              random_3colouring_retry(g, 100, 9).colouring.colours);
    EXPECT_EQ(lll_resample_3colouring(g, 1000, 9).colouring.colours,
              lll_resample_3colouring(g, 1000, 9).colouring.colours);
    const UndirectedGraph u = underlying_undirected(g);
    EXPECT_EQ(lovasz_balanced_colouring(u, 3, std::nullopt, 9).colours,
              lovasz_balanced_colouring(u, 3, std::nullopt, 9).colours);
}

TEST(Seymour, ManyDigons) {
    std::vector<Arc> arcs;
    const Vertex pairs = 50'000;
    for (Vertex i = 0; i < pairs; ++i) {
        arcs.push_back({2 * i, 2 * i + 1});
        arcs.push_back({2 * i + 1, 2 * i});
    }
    const Digraph g(2 * pairs, arcs);
    const Colouring c = seymour_3colouring(g);
    EXPECT_EQ(c.colours_used(), 2u);
    EXPECT_TRUE(verify_differing_out_neighbour(g, c));
}
