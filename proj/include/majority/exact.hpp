#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "majority/colouring.hpp"
#include "majority/digraph.hpp"
#include "majority/fraction.hpp"
#include "majority/stable_sets.hpp"

namespace majority {

/// Result of a bounded exhaustive search. `unknown` means the node budget
/// ran out before the search tree was exhausted.
enum class Answer { yes, no, unknown };

const char* to_string(Answer a);

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

struct ExactResult {
    Answer answer = Answer::unknown;
    std::optional<Colouring> witness;
    std::uint64_t nodes = 0;
};

/// Backtracking over colour assignments. Vertices go by decreasing
/// out-degree (ties by index), colours ascending, and a vertex may open at
/// most one new colour (colour permutations are not revisited). A branch
/// dies as soon as some coloured vertex has more than beta * d_v
/// same-coloured coloured out-neighbours.
ExactResult exists_beta_colouring(const Digraph& g, Colour k, const Fraction& beta,
                                  std::uint64_t budget = kDefaultNodeBudget);

struct MinColoursResult {
    Answer answer = Answer::unknown;  // yes: `colours` is the minimum
    Colour colours = 0;
    std::optional<Colouring> witness;
    std::uint64_t nodes = 0;
};

/// Smallest k <= k_max with a beta-majority k-colouring. With beta = 1/2
/// and k_max >= 4 the answer is always yes; anything else is a logic_error.
MinColoursResult min_majority_colours(const Digraph& g, Colour k_max = 4, const Fraction& beta = Fraction(1, 2),
                                      std::uint64_t budget = kDefaultNodeBudget);

/// Allowed colours per vertex; each list nonempty.
struct ListAssignment {
    std::vector<std::vector<Colour>> lists;

    /// Throws std::invalid_argument on an empty list.
    void validate() const;
};

/// Majority colouring with every vertex coloured from its own list.
ExactResult choosability_check(const Digraph& g, const ListAssignment& lists, const Fraction& beta = Fraction(1, 2),
                               std::uint64_t budget = kDefaultNodeBudget);

inline constexpr std::size_t kMaxFractionalVertices = 16;

/// Weights on maximal stable sets; every vertex is covered with total
/// weight >= 1. Only sets with positive weight are listed.
struct FractionalSolution {
    std::vector<std::pair<VertexSet, mpq_class>> weights;
    mpq_class objective;
};

/// Minimum total weight of a fractional majority colouring, over maximal
/// beta-stable sets, solved exactly. Throws above `cap` vertices.
FractionalSolution fractional_majority_number(const Digraph& g, const Fraction& beta = Fraction(1, 2),
                                              std::size_t cap = kMaxFractionalVertices);

/// Every valid beta-majority k-colouring, by plain enumeration. Reference
/// oracle for small inputs: throws if n > n_cap or k^n > 10^7.
std::vector<Colouring> brute_force_all_colourings(const Digraph& g, Colour k, const Fraction& beta,
                                                  std::size_t n_cap = 8);

}  // namespace majority
