#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "majority/digraph.hpp"
#include "majority/generators.hpp"
#include "majority/io.hpp"
#include "majority/structure.hpp"

using namespace majority;

namespace {

Digraph triangle() { return gen_cycle(3); }

std::vector<Digraph> small_corpus() {
    std::vector<Digraph> corpus;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        corpus.push_back(gen_random_digraph(1 + seed % 17, 0.05 + 0.04 * static_cast<double>(seed % 10), seed));
        corpus.push_back(gen_tournament(1 + seed % 9, seed));
    }
    corpus.push_back(gen_random_out_regular(40, 5, 3));
    corpus.push_back(gen_cycle_power(13, 4));
    corpus.push_back(gen_subset_blowup(gen_cycle(5), 2));
    return corpus;
}

// Reachability by BFS, used as the SCC oracle.
std::vector<std::vector<bool>> reachability(const Digraph& g) {
    std::vector<std::vector<bool>> reach(g.n(), std::vector<bool>(g.n(), false));
    for (Vertex s = 0; s < g.n(); ++s) {
        std::vector<Vertex> queue{s};
        reach[s][s] = true;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (Vertex w : g.out(queue[i]))
                if (!reach[s][w]) {
                    reach[s][w] = true;
                    queue.push_back(w);
                }
    }
    return reach;
}

}  // namespace

TEST(Digraph, RejectsSelfLoopsAndDuplicates) {
    EXPECT_THROW(Digraph(2, {{0, 0}}), GraphError);
    EXPECT_THROW(Digraph(2, {{0, 1}, {0, 1}}), GraphError);
    EXPECT_THROW(Digraph(2, {{0, 2}}), GraphError);
    const Digraph digon(2, {{0, 1}, {1, 0}});
    EXPECT_EQ(digon.m(), 2u);
}

TEST(Digraph, DerivedQuantities) {
    const Digraph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {3, 2}});
    EXPECT_EQ(g.min_out_degree(), 0u);
    EXPECT_EQ(g.max_in_degree(), 3u);
    EXPECT_TRUE(g.has_arc(0, 3));
    EXPECT_FALSE(g.has_arc(3, 0));
    std::size_t in_sum = 0, out_sum = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        in_sum += g.in_degree(v);
        out_sum += g.out_degree(v);
    }
    EXPECT_EQ(in_sum, g.m());
    EXPECT_EQ(out_sum, g.m());
    EXPECT_EQ(std::vector<Vertex>(g.in(2).begin(), g.in(2).end()), (std::vector<Vertex>{0, 1, 3}));
}

TEST(Parse, DirectedTriangle) {
    const Digraph g = io::parse_digraph("digraph 3 3\n0 1\n1 2\n2 0");
    EXPECT_EQ(g, triangle());
    EXPECT_EQ(g.min_out_degree(), 1u);
    EXPECT_EQ(g.max_in_degree(), 1u);
}

TEST(Parse, SingleVertex) {
    const Digraph g = io::parse_digraph("digraph 1 0");
    EXPECT_EQ(g.n(), 1u);
    EXPECT_EQ(g.min_out_degree(), 0u);
}

TEST(Parse, CommentsAndBlankLines) {
    const Digraph g = io::parse_digraph("# header comment\ndigraph 2 1\n\n# arc\n1 0\n");
    EXPECT_TRUE(g.has_arc(1, 0));
}

TEST(Parse, ErrorsCarryLineNumbers) {
    auto line_of = [](const char* text) -> std::size_t {
        try {
            io::parse_digraph(text);
        } catch (const io::ParseError& e) {
            return e.line();
        }
        return 999;
    };
    EXPECT_EQ(line_of("digraph 2 1\n0 0"), 2u);              // self-loop
    EXPECT_EQ(line_of("digraph 2 1\n0 5"), 2u);              // out of range
    EXPECT_EQ(line_of("digraph 3 2\n0 1\n# c\n0 1"), 4u);    // duplicate
    EXPECT_EQ(line_of("graph 3 0"), 1u);                     // header keyword
    EXPECT_EQ(line_of("digraph 3"), 1u);                     // header arity
    EXPECT_EQ(line_of("digraph 3 2\n0 1"), 1u);              // arc count
    EXPECT_EQ(line_of("digraph 3 1\n0 x"), 2u);              // not a number
    EXPECT_EQ(line_of("digraph 3 1\n0 1 2"), 2u);            // arity
    EXPECT_EQ(line_of(""), 0u);
}

TEST(Parse, SerializeRoundTripOnCorpus) {
    for (const Digraph& g : small_corpus()) {
        const std::string text = io::serialize_digraph(g);
        EXPECT_EQ(io::parse_digraph(text), g);
        EXPECT_EQ(io::serialize_digraph(io::parse_digraph(text)), text);
    }
}

TEST(CyclePower, DirectedCycle) {
    const Digraph g = gen_cycle_power(5, 1);
    for (Vertex v = 0; v < 5; ++v) {
        ASSERT_EQ(g.out_degree(v), 1u);
        EXPECT_TRUE(g.has_arc(v, (v + 1) % 5));
    }
}

TEST(CyclePower, ElevenThree) {
    const Digraph g = gen_cycle_power(11, 3);
    EXPECT_EQ(g.m(), 33u);
    for (Vertex v = 0; v < 11; ++v) {
        EXPECT_EQ(g.out_degree(v), 3u);
        EXPECT_EQ(g.in_degree(v), 3u);
    }
    EXPECT_TRUE(g.is_eulerian());
}

TEST(CyclePower, SevenTwoNeighbourhoods) {
    const Digraph g = gen_cycle_power(7, 2);
    for (Vertex i = 0; i < 7; ++i) {
        std::set<Vertex> expected{(i + 1) % 7, (i + 2) % 7};
        EXPECT_EQ(std::set<Vertex>(g.out(i).begin(), g.out(i).end()), expected);
    }
}

TEST(CyclePower, RangeChecked) {
    EXPECT_THROW(gen_cycle_power(5, 0), std::invalid_argument);
    EXPECT_THROW(gen_cycle_power(5, 5), std::invalid_argument);
    EXPECT_NO_THROW(gen_cycle_power(5, 4));
}

TEST(CyclePower, AlwaysEulerian) {
    for (std::size_t n = 2; n <= 30; ++n)
        for (std::size_t k = 1; k < n; ++k) {
            const Digraph g = gen_cycle_power(n, k);
            for (Vertex v = 0; v < n; ++v) {
                ASSERT_EQ(g.in_degree(v), k);
                ASSERT_EQ(g.out_degree(v), k);
            }
        }
}

TEST(RandomDigraph, Extremes) {
    EXPECT_EQ(gen_random_digraph(5, 0.0, 1).m(), 0u);
    EXPECT_EQ(gen_random_digraph(4, 1.0, 7).m(), 12u);
    EXPECT_THROW(gen_random_digraph(4, 1.5, 7), std::invalid_argument);
}

TEST(RandomDigraph, Deterministic) {
    EXPECT_EQ(gen_random_digraph(100, 0.1, 42), gen_random_digraph(100, 0.1, 42));
    EXPECT_FALSE(gen_random_digraph(100, 0.1, 42) == gen_random_digraph(100, 0.1, 43));
}

TEST(OutRegular, Examples) {
    EXPECT_EQ(gen_random_out_regular(3, 2, 0), gen_random_digraph(3, 1.0, 0));
    const Digraph g = gen_random_out_regular(300, 22, 5);
    EXPECT_EQ(g.min_out_degree(), 22u);
    for (Vertex v = 0; v < g.n(); ++v)
        EXPECT_EQ(g.out_degree(v), 22u);
    const Digraph big = gen_random_out_regular(1000, 600, 9);
    EXPECT_EQ(big.min_out_degree(), 600u);
    EXPECT_EQ(big.m(), 600000u);
}

TEST(OutRegular, RangeCheckedAndDeterministic) {
    EXPECT_THROW(gen_random_out_regular(3, 3, 0), std::invalid_argument);
    EXPECT_EQ(gen_random_out_regular(50, 7, 11), gen_random_out_regular(50, 7, 11));
}

TEST(Tournament, OneArcPerPair) {
    EXPECT_EQ(gen_tournament(1, 99).n(), 1u);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Digraph t = gen_tournament(3 + seed % 6, seed);
        EXPECT_EQ(t.m(), t.n() * (t.n() - 1) / 2);
        for (Vertex u = 0; u < t.n(); ++u)
            for (Vertex v = u + 1; v < t.n(); ++v)
                EXPECT_NE(t.has_arc(u, v), t.has_arc(v, u));
    }
    EXPECT_EQ(gen_tournament(50, 3), gen_tournament(50, 3));
}

TEST(Blowup, TriangleDeltaOne) {
    const Digraph g = gen_subset_blowup(triangle(), 1);
    EXPECT_EQ(g.n(), 6u);
    for (Vertex v = 3; v < 6; ++v) {
        ASSERT_EQ(g.out_degree(v), 1u);
        EXPECT_EQ(g.out(v)[0], v - 3);
    }
}

TEST(Blowup, SixCycleDeltaTwo) {
    const Digraph g = gen_subset_blowup(gen_cycle(6), 2);
    EXPECT_EQ(g.n(), 6u + 15u);
    EXPECT_EQ(g.m(), 6u + 30u);
    // Lexicographic numbering: {0,1}, {0,2}, ..., {4,5}.
    EXPECT_EQ(std::vector<Vertex>(g.out(6).begin(), g.out(6).end()), (std::vector<Vertex>{0, 1}));
    EXPECT_EQ(std::vector<Vertex>(g.out(7).begin(), g.out(7).end()), (std::vector<Vertex>{0, 2}));
    EXPECT_EQ(std::vector<Vertex>(g.out(20).begin(), g.out(20).end()), (std::vector<Vertex>{4, 5}));
    for (Vertex v = 6; v < g.n(); ++v)
        EXPECT_EQ(g.out_degree(v), 2u);
}

TEST(Blowup, CapEnforced) {
    EXPECT_THROW(gen_subset_blowup(gen_cycle(30), 15, 1000), std::invalid_argument);
    EXPECT_THROW(gen_subset_blowup(gen_cycle(3), 4), std::invalid_argument);
}

TEST(Blowup, EveryTwoColouringHasMonochromaticNeighbourhood) {
    // Base on k * delta = 4 vertices with minimum out-degree 2. Some colour
    // class of the base has >= 2 vertices, and a new vertex points at them.
    const Digraph g = gen_subset_blowup(gen_cycle_power(4, 2), 2);
    ASSERT_EQ(g.n(), 10u);
    for (std::uint32_t mask = 0; mask < (1u << g.n()); ++mask) {
        bool found = false;
        for (Vertex v = 4; v < g.n() && !found; ++v) {
            auto nbrs = g.out(v);
            found = ((mask >> nbrs[0]) & 1) == ((mask >> nbrs[1]) & 1);
        }
        ASSERT_TRUE(found) << "colouring mask " << mask;
    }
}

TEST(AcyclicBipartition, Triangle) {
    const auto parts = acyclic_bipartition(triangle(), VertexOrdering::identity(3));
    EXPECT_EQ(parts.forward, (std::vector<Arc>{{0, 1}, {1, 2}}));
    EXPECT_EQ(parts.backward, (std::vector<Arc>{{2, 0}}));
}

TEST(AcyclicBipartition, TopologicalOrderHasNoBackwardArcs) {
    const Digraph dag(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {0, 4}});
    EXPECT_TRUE(acyclic_bipartition(dag, VertexOrdering::identity(5)).backward.empty());
}

TEST(AcyclicBipartition, CyclePowerWrapArcs) {
    const auto parts = acyclic_bipartition(gen_cycle_power(11, 3), VertexOrdering::identity(11));
    EXPECT_EQ(parts.backward.size(), 6u);
    for (const Arc& a : parts.backward)
        EXPECT_GT(a.tail, a.head);
}

TEST(AcyclicBipartition, PropertyOnRandomOrders) {
    std::mt19937_64 shuffle_rng(1234);
    for (const Digraph& g : small_corpus()) {
        std::vector<Vertex> order(g.n());
        std::iota(order.begin(), order.end(), Vertex{0});
        std::shuffle(order.begin(), order.end(), shuffle_rng);
        const auto parts = acyclic_bipartition(g, VertexOrdering(order));
        EXPECT_TRUE(is_acyclic(g.n(), parts.forward));
        EXPECT_TRUE(is_acyclic(g.n(), parts.backward));
        std::vector<Arc> all = parts.forward;
        all.insert(all.end(), parts.backward.begin(), parts.backward.end());
        std::sort(all.begin(), all.end());
        EXPECT_EQ(all, g.arcs());  // covers E(G), and disjoint since arcs() has no repeats
    }
}

TEST(VertexOrdering, RejectsNonPermutations) {
    EXPECT_THROW(VertexOrdering({0, 0, 1}), std::invalid_argument);
    EXPECT_THROW(VertexOrdering({0, 3, 1}), std::invalid_argument);
    EXPECT_EQ(VertexOrdering({2, 0, 1}).position(2), 0u);
}

TEST(StrongComponents, Examples) {
    EXPECT_EQ(strong_components(triangle()), (std::vector<std::vector<Vertex>>{{0, 1, 2}}));
    const Digraph path(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(strong_components(path), (std::vector<std::vector<Vertex>>{{2}, {1}, {0}}));
    const Digraph two(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
    EXPECT_EQ(strong_components(two), (std::vector<std::vector<Vertex>>{{3, 4, 5}, {0, 1, 2}}));
}

TEST(StrongComponents, AgreesWithReachabilityOracle) {
    for (const Digraph& g : small_corpus()) {
        const auto comps = strong_components(g);
        const auto reach = reachability(g);
        std::vector<std::size_t> id(g.n(), g.n());
        std::size_t covered = 0;
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (Vertex v : comps[i]) {
                ASSERT_EQ(id[v], g.n()) << "vertex in two classes";
                id[v] = i;
                ++covered;
            }
        ASSERT_EQ(covered, g.n());
        for (Vertex u = 0; u < g.n(); ++u)
            for (Vertex v = 0; v < g.n(); ++v)
                EXPECT_EQ(id[u] == id[v], reach[u][v] && reach[v][u]);
        // Reverse topological: arcs between classes go to earlier classes.
        for (const Arc& a : g.arcs())
            EXPECT_GE(id[a.tail], id[a.head]);
    }
}

TEST(StrongComponents, LongCycleDoesNotRecurse) {
    EXPECT_EQ(strong_components(gen_cycle(200000)).size(), 1u);
}

TEST(Underlying, Examples) {
    const UndirectedGraph t = underlying_undirected(triangle());
    for (Vertex v = 0; v < 3; ++v)
        EXPECT_EQ(t.degree(v), 2u);
    const UndirectedGraph digon = underlying_undirected(Digraph(2, {{0, 1}, {1, 0}}));
    EXPECT_EQ(digon.edge_count(), 1u);
    const UndirectedGraph c72 = underlying_undirected(gen_cycle_power(7, 2));
    for (Vertex v = 0; v < 7; ++v)
        EXPECT_EQ(c72.degree(v), 4u);
}
