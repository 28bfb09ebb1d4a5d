#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "majority/digraph.hpp"
#include "majority/fraction.hpp"

namespace majority {

using Colour = std::uint32_t;

/// Vertex -> colour index in [0, k).
struct Colouring {
    std::vector<Colour> colours;
    Colour k = 1;

    Colouring() = default;
    /// Throws std::invalid_argument if some entry is >= k.
    Colouring(std::vector<Colour> colours, Colour k);

    std::size_t size() const { return colours.size(); }
    Colour operator[](Vertex v) const { return colours[v]; }
    std::size_t colours_used() const;
};

/// k colours, each vertex has at most beta * d_v same-coloured out-neighbours.
struct MajoritySpec {
    Colour k_colours = 2;
    Fraction beta{1, 2};

    /// Throws std::invalid_argument unless k >= 1 and 0 < beta <= 1.
    void validate() const;
};

struct VerificationReport {
    bool valid = true;
    std::vector<std::uint32_t> same_colour_count;  // X(v, colour(v))
    std::vector<Vertex> violations;                // den * X > num * d_v, ascending
};

/// Exact majority check. Throws std::invalid_argument if the colouring has
/// the wrong length or uses a colour >= spec.k_colours.
VerificationReport verify_majority(const Digraph& g, const Colouring& c, const MajoritySpec& spec);

/// Same result computed with the serial counting kernel.
VerificationReport verify_majority_serial(const Digraph& g, const Colouring& c, const MajoritySpec& spec);

/// Every vertex with out-degree >= 1 has an out-neighbour of another colour.
bool verify_differing_out_neighbour(const Digraph& g, const Colouring& c);

/// For every v: den * |{u : u~v in the underlying graph, same colour}| <= num * d_v,
/// where d_v is the out-degree (equal to the in-degree on Eulerian digraphs).
bool verify_in_out_fraction(const Digraph& g, const Colouring& c, const Fraction& beta);

enum class PassDirection { forward, backward };

/// Processes vertices along `order` (reversed for backward). Each vertex
/// takes the colour with fewest matches among its already-coloured
/// out-neighbours, lowest index on ties; so k * matches <= d' where d'
/// counts out-neighbours on the processed side.
Colouring greedy_pass(const Digraph& g, const VertexOrdering& order, Colour k, PassDirection direction);

/// Pair-encodes a forward and a backward greedy pass (colour f * k + b).
/// Every vertex has at most d_v / k same-coloured out-neighbours, using at
/// most k^2 colours; k = 2 is the majority 4-colouring.
Colouring majority_product_colouring(const Digraph& g, Colour k, const VertexOrdering& order);
Colouring majority_product_colouring(const Digraph& g, Colour k);

/// Local search on an undirected graph: while some vertex has more than
/// deg(v) / k same-coloured neighbours, move it to the colour with the
/// fewest. Each move strictly lowers the monochromatic edge count; if
/// `trace` is given, the count is appended before the first move and after
/// every move. Starts from `init` or a uniform colouring drawn from seed.
Colouring lovasz_balanced_colouring(const UndirectedGraph& g, Colour k, const std::optional<Colouring>& init,
                                    std::uint64_t seed, std::vector<std::uint64_t>* trace = nullptr);

/// Number of edges whose endpoints share a colour.
std::uint64_t monochromatic_edges(const UndirectedGraph& g, const Colouring& c);

/// Balanced colouring of the underlying graph of an Eulerian digraph.
/// k = 4 gives a majority colouring; k = 3 gives at most (2/3) d_v
/// same-coloured in-or-out neighbours. Throws if g is not Eulerian or k is
/// not 3 or 4.
Colouring eulerian_colouring(const Digraph& g, Colour k, std::uint64_t seed = 0);

/// At most 3 colours; every non-sink vertex gets a colour different from
/// some out-neighbour. Components are handled sink-first; inside a
/// non-trivial component a directed cycle is coloured alternately and the
/// coloured set then grows backwards along arcs.
Colouring seymour_3colouring(const Digraph& g);

struct RetryResult {
    bool success = false;
    Colouring colouring;  // the successful one, or the last attempt
    std::size_t tries_used = 0;
    VerificationReport report;
};

/// Uniform random 3-colourings until one is a majority colouring.
/// Try t draws from mix_seed(seed, "retry", t).
RetryResult random_3colouring_retry(const Digraph& g, std::size_t max_tries, std::uint64_t seed);

struct ResampleLog {
    std::size_t rounds = 0;
    std::uint64_t resampled_vertices = 0;
    bool success = false;
};

/// Which events the resampler repairs.
enum class ResampleEvents {
    /// A(v, colour(v)): v has more than d_v / 2 out-neighbours of its own colour.
    own_colour,
    /// A(v, c) for every colour c: no colour may take more than half of N+(v).
    all_colours,
};

struct ResampleResult {
    Colouring colouring;
    ResampleLog log;
};

/// Moser-Tardos style loop over 3 colours: while some event A(v, c) holds,
/// take the smallest violated (v, c) and redraw the colours of N+(v).
/// The colour of v itself is never redrawn.
ResampleResult lll_resample_3colouring(const Digraph& g, std::size_t max_rounds, std::uint64_t seed,
                                       ResampleEvents events = ResampleEvents::own_colour);
ResampleResult lll_resample_3colouring(const Digraph& g, Colouring initial, std::size_t max_rounds,
                                       std::uint64_t seed, ResampleEvents events = ResampleEvents::own_colour);

}  // namespace majority
