#include "majority/exact.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "majority/rational_lp.hpp"

namespace majority {

const char* to_string(Answer a) {
    switch (a) {
        case Answer::yes: return "yes";
        case Answer::no: return "no";
        case Answer::unknown: return "unknown";
    }
    return "unknown";
}

namespace {

class BudgetExceeded {};

// Shared backtracking engine. `candidates(v)` lists the colours to try at v;
// with symmetry breaking, colours above the highest used + 1 are skipped.
class ColouringSearch {
public:
    static constexpr Colour kNone = ~Colour{0};

    ColouringSearch(const Digraph& g, const Fraction& beta, std::uint64_t budget,
                    std::vector<std::vector<Colour>> candidates, bool break_symmetry)
        : g_(g), beta_(beta), budget_(budget), candidates_(std::move(candidates)),
          break_symmetry_(break_symmetry), colour_(g.n(), kNone), matches_(g.n(), 0), order_(g.n()) {
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.out_degree(a) > g.out_degree(b); });
    }

    ExactResult run() {
        ExactResult result;
        try {
            if (search(0, 0)) {
                result.answer = Answer::yes;
                Colour k = 0;
                for (Colour c : colour_)
                    k = std::max(k, c + 1);
                result.witness = Colouring(colour_, std::max<Colour>(k, 1));
            } else {
                result.answer = Answer::no;
            }
        } catch (const BudgetExceeded&) {
            result.answer = Answer::unknown;
        }
        result.nodes = nodes_;
        return result;
    }

private:
    bool overloaded(Vertex v) const {
        return beta_.exceeded_by(matches_[v], static_cast<std::int64_t>(g_.out_degree(v)));
    }

    // Colours v with c and updates the match counters. Returns false (with
    // the state already restored) if that overloads some vertex.
    bool assign(Vertex v, Colour c) {
        std::uint32_t own = 0;
        for (Vertex u : g_.out(v))
            own += colour_[u] == c;
        colour_[v] = c;
        matches_[v] = own;
        bool ok = !overloaded(v);
        for (Vertex w : g_.in(v))
            if (colour_[w] == c) {
                ++matches_[w];
                ok = ok && !overloaded(w);
            }
        if (!ok)
            unassign(v);
        return ok;
    }

    void unassign(Vertex v) {
        const Colour c = colour_[v];
        for (Vertex w : g_.in(v))
            if (colour_[w] == c)
                --matches_[w];
        colour_[v] = kNone;
        matches_[v] = 0;
    }

    bool search(std::size_t depth, Colour opened) {
        if (depth == order_.size())
            return true;
        const Vertex v = order_[depth];
        for (Colour c : candidates_[v]) {
            if (break_symmetry_ && c > opened)
                break;
            if (++nodes_ > budget_)
                throw BudgetExceeded{};
            if (!assign(v, c))
                continue;
            if (search(depth + 1, std::max(opened, c + 1)))
                return true;
            unassign(v);
        }
        return false;
    }

    const Digraph& g_;
    Fraction beta_;
    std::uint64_t budget_;
    std::vector<std::vector<Colour>> candidates_;
    bool break_symmetry_;
    std::vector<Colour> colour_;
    std::vector<std::uint32_t> matches_;
    std::vector<Vertex> order_;
    std::uint64_t nodes_ = 0;
};

void check_beta(const Fraction& beta) {
    if (beta.num() <= 0 || beta.num() > beta.den())
        throw std::invalid_argument("beta must lie in (0, 1], got " + beta.str());
}

}  // namespace

ExactResult exists_beta_colouring(const Digraph& g, Colour k, const Fraction& beta, std::uint64_t budget) {
    if (k < 1)
        throw std::invalid_argument("need at least one colour");
    check_beta(beta);
    std::vector<Colour> all(k);
    std::iota(all.begin(), all.end(), Colour{0});
    ExactResult r = ColouringSearch(g, beta, budget, std::vector<std::vector<Colour>>(g.n(), all), true).run();
    if (r.witness)
        r.witness->k = k;
    return r;
}

MinColoursResult min_majority_colours(const Digraph& g, Colour k_max, const Fraction& beta, std::uint64_t budget) {
    MinColoursResult result;
    result.answer = Answer::no;
    for (Colour k = 1; k <= k_max; ++k) {
        ExactResult r = exists_beta_colouring(g, k, beta, budget);
        result.nodes += r.nodes;
        if (r.answer == Answer::unknown) {
            result.answer = Answer::unknown;
            return result;
        }
        if (r.answer == Answer::yes) {
            result.answer = Answer::yes;
            result.colours = k;
            result.witness = std::move(r.witness);
            return result;
        }
    }
    if (beta == Fraction(1, 2) && k_max >= 4)
        throw std::logic_error("no majority 4-colouring found; contradicts the product construction");
    return result;
}

void ListAssignment::validate() const {
    for (std::size_t v = 0; v < lists.size(); ++v)
        if (lists[v].empty())
            throw std::invalid_argument("empty colour list at vertex " + std::to_string(v));
}

ExactResult choosability_check(const Digraph& g, const ListAssignment& lists, const Fraction& beta,
                               std::uint64_t budget) {
    lists.validate();
    check_beta(beta);
    if (lists.lists.size() != g.n())
        throw std::invalid_argument("list assignment size does not match digraph");
    auto candidates = lists.lists;
    for (auto& l : candidates) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    return ColouringSearch(g, beta, budget, std::move(candidates), false).run();
}

FractionalSolution fractional_majority_number(const Digraph& g, const Fraction& beta, std::size_t cap) {
    check_beta(beta);
    if (g.n() > std::min(cap, kMaxFractionalVertices))
        throw std::invalid_argument("fractional solver limited to " + std::to_string(cap) + " vertices");
    FractionalSolution sol;
    if (g.n() == 0)
        return sol;

    const auto sets = enumerate_stable_sets(g, beta);
    lp::CoveringProblem problem;
    problem.rows.assign(g.n(), std::vector<mpq_class>(sets.size(), 0));
    problem.rhs.assign(g.n(), 1);
    problem.cost.assign(sets.size(), 1);
    for (std::size_t j = 0; j < sets.size(); ++j)
        for (Vertex v : sets[j])
            problem.rows[v][j] = 1;

    const lp::Solution lp_sol = lp::solve(problem);
    for (std::size_t j = 0; j < sets.size(); ++j)
        if (lp_sol.x[j] > 0)
            sol.weights.emplace_back(sets[j], lp_sol.x[j]);
    sol.objective = lp_sol.objective;

    // Re-substitute: every vertex must be covered with weight >= 1.
    std::vector<mpq_class> cover(g.n(), 0);
    for (const auto& [set, w] : sol.weights)
        for (Vertex v : set)
            cover[v] += w;
    for (const auto& c : cover)
        if (c < 1)
            throw std::logic_error("fractional solution violates a covering constraint");
    return sol;
}

std::vector<Colouring> brute_force_all_colourings(const Digraph& g, Colour k, const Fraction& beta,
                                                  std::size_t n_cap) {
    if (k < 1)
        throw std::invalid_argument("need at least one colour");
    check_beta(beta);
    const std::size_t n = g.n();
    if (n > n_cap)
        throw std::invalid_argument("brute force limited to " + std::to_string(n_cap) + " vertices");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= k;
        if (total > 10'000'000)
            throw std::invalid_argument("brute force limited to 10^7 colourings");
    }

    std::vector<Colouring> valid;
    std::vector<Colour> colours(n, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t rest = code;
        for (std::size_t v = 0; v < n; ++v) {
            colours[v] = static_cast<Colour>(rest % k);
            rest /= k;
        }
        bool ok = true;
        for (Vertex v = 0; v < n && ok; ++v) {
            std::int64_t same = 0;
            for (Vertex u : g.out(v))
                same += colours[u] == colours[v];
            ok = !beta.exceeded_by(same, static_cast<std::int64_t>(g.out_degree(v)));
        }
        if (ok)
            valid.emplace_back(colours, k);
    }
    return valid;
}

}  // namespace majority
