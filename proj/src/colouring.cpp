#include "majority/colouring.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>

#include "majority/kernels.hpp"
#include "majority/rng.hpp"
#include "majority/structure.hpp"

namespace majority {

Colouring::Colouring(std::vector<Colour> cs, Colour num_colours) : colours(std::move(cs)), k(num_colours) {
    for (Colour c : colours)
        if (c >= k)
            throw std::invalid_argument("colour " + std::to_string(c) + " not below k=" + std::to_string(k));
}

std::size_t Colouring::colours_used() const {
    std::vector<Colour> seen(colours);
    std::sort(seen.begin(), seen.end());
    return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

void MajoritySpec::validate() const {
    if (k_colours < 1)
        throw std::invalid_argument("need at least one colour");
    if (beta.num() <= 0 || beta.num() > beta.den())
        throw std::invalid_argument("beta must lie in (0, 1], got " + beta.str());
}

namespace {

void check_colouring(const Digraph& g, const Colouring& c, const MajoritySpec& spec) {
    spec.validate();
    if (c.size() != g.n())
        throw std::invalid_argument("colouring has " + std::to_string(c.size()) + " entries, digraph has " +
                                    std::to_string(g.n()) + " vertices");
    for (Colour col : c.colours)
        if (col >= spec.k_colours)
            throw std::invalid_argument("colour " + std::to_string(col) + " outside the " +
                                        std::to_string(spec.k_colours) + " allowed");
}

VerificationReport report_from_counts(const Digraph& g, std::vector<std::uint32_t> counts, const Fraction& beta) {
    VerificationReport report;
    report.same_colour_count = std::move(counts);
    for (Vertex v = 0; v < g.n(); ++v)
        if (beta.exceeded_by(report.same_colour_count[v], static_cast<std::int64_t>(g.out_degree(v))))
            report.violations.push_back(v);
    report.valid = report.violations.empty();
    return report;
}

}  // namespace

VerificationReport verify_majority(const Digraph& g, const Colouring& c, const MajoritySpec& spec) {
    check_colouring(g, c, spec);
    return report_from_counts(g, kernels::same_colour_counts(g, c.colours), spec.beta);
}

VerificationReport verify_majority_serial(const Digraph& g, const Colouring& c, const MajoritySpec& spec) {
    check_colouring(g, c, spec);
    return report_from_counts(g, kernels::same_colour_counts_serial(g, c.colours), spec.beta);
}

bool verify_differing_out_neighbour(const Digraph& g, const Colouring& c) {
    if (c.size() != g.n())
        throw std::invalid_argument("colouring length mismatch");
    for (Vertex v = 0; v < g.n(); ++v) {
        auto nbrs = g.out(v);
        if (!nbrs.empty() && std::all_of(nbrs.begin(), nbrs.end(), [&](Vertex u) { return c[u] == c[v]; }))
            return false;
    }
    return true;
}

bool verify_in_out_fraction(const Digraph& g, const Colouring& c, const Fraction& beta) {
    if (c.size() != g.n())
        throw std::invalid_argument("colouring length mismatch");
    const UndirectedGraph u = underlying_undirected(g);
    for (Vertex v = 0; v < g.n(); ++v) {
        std::int64_t same = 0;
        for (Vertex w : u.neighbours(v))
            same += c[w] == c[v];
        if (beta.exceeded_by(same, static_cast<std::int64_t>(g.out_degree(v))))
            return false;
    }
    return true;
}

Colouring greedy_pass(const Digraph& g, const VertexOrdering& order, Colour k, PassDirection direction) {
    if (k < 2)
        throw std::invalid_argument("greedy pass needs k >= 2");
    if (order.size() != g.n())
        throw std::invalid_argument("ordering size does not match digraph");
    const std::size_t n = g.n();
    std::vector<Colour> colours(n, 0);
    std::vector<char> done(n, 0);
    std::vector<std::uint32_t> matches(k);
    for (std::size_t step = 0; step < n; ++step) {
        const Vertex v = direction == PassDirection::forward ? order[step] : order[n - 1 - step];
        std::fill(matches.begin(), matches.end(), 0);
        for (Vertex u : g.out(v))
            if (done[u])
                ++matches[colours[u]];
        colours[v] = static_cast<Colour>(std::min_element(matches.begin(), matches.end()) - matches.begin());
        done[v] = 1;
    }
    return Colouring(std::move(colours), k);
}

Colouring majority_product_colouring(const Digraph& g, Colour k, const VertexOrdering& order) {
    if (k < 2)
        throw std::invalid_argument("product colouring needs k >= 2");
    const Colouring left = greedy_pass(g, order, k, PassDirection::forward);
    const Colouring right = greedy_pass(g, order, k, PassDirection::backward);
    std::vector<Colour> colours(g.n());
    for (Vertex v = 0; v < g.n(); ++v)
        colours[v] = left[v] * k + right[v];
    return Colouring(std::move(colours), k * k);
}

Colouring majority_product_colouring(const Digraph& g, Colour k) {
    return majority_product_colouring(g, k, VertexOrdering::identity(g.n()));
}

std::uint64_t monochromatic_edges(const UndirectedGraph& g, const Colouring& c) {
    std::uint64_t count = 0;
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex w : g.neighbours(v))
            if (v < w && c[v] == c[w])
                ++count;
    return count;
}

Colouring lovasz_balanced_colouring(const UndirectedGraph& g, Colour k, const std::optional<Colouring>& init,
                                    std::uint64_t seed, std::vector<std::uint64_t>* trace) {
    if (k < 1)
        throw std::invalid_argument("need at least one colour");
    const std::size_t n = g.n();
    std::vector<Colour> colours(n);
    if (init) {
        if (init->size() != n || init->k > k)
            throw std::invalid_argument("initial colouring does not fit the graph");
        colours = init->colours;
    } else {
        Rng rng(mix_seed(seed, "lovasz-init"));
        for (auto& c : colours)
            c = static_cast<Colour>(rng.below(k));
    }

    // counts[v * k + c] = neighbours of v coloured c
    std::vector<std::uint32_t> counts(n * k, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbours(v))
            ++counts[v * k + colours[w]];

    std::uint64_t mono = 0;
    if (trace) {
        mono = monochromatic_edges(g, Colouring(colours, k));
        trace->push_back(mono);
    }

    bool moved = true;
    while (moved) {
        moved = false;
        for (Vertex v = 0; v < n; ++v) {
            const std::uint32_t* row = &counts[v * k];
            const Colour own = colours[v];
            if (static_cast<std::uint64_t>(k) * row[own] <= g.degree(v))
                continue;
            const auto target = static_cast<Colour>(std::min_element(row, row + k) - row);
            if (trace) {
                mono -= row[own] - row[target];
                trace->push_back(mono);
            }
            colours[v] = target;
            for (Vertex w : g.neighbours(v)) {
                --counts[w * k + own];
                ++counts[w * k + target];
            }
            moved = true;
        }
    }
    return Colouring(std::move(colours), k);
}

Colouring eulerian_colouring(const Digraph& g, Colour k, std::uint64_t seed) {
    if (k != 3 && k != 4)
        throw std::invalid_argument("Eulerian colouring supports k = 3 or k = 4");
    if (!g.is_eulerian())
        throw std::invalid_argument("digraph is not Eulerian (in-degree != out-degree somewhere)");
    return lovasz_balanced_colouring(underlying_undirected(g), k, std::nullopt, seed);
}

Colouring seymour_3colouring(const Digraph& g) {
    constexpr Colour none = 3;
    const std::size_t n = g.n();
    std::vector<Colour> colours(n, none);
    std::vector<std::size_t> component_of(n);
    const auto components = strong_components(g);
    for (std::size_t i = 0; i < components.size(); ++i)
        for (Vertex v : components[i])
            component_of[v] = i;

    auto differ_from = [](Colour c) -> Colour { return c == 0 ? 1 : 0; };
    std::vector<std::size_t> seen_at(n, n);

    for (std::size_t ci = 0; ci < components.size(); ++ci) {
        const auto& comp = components[ci];
        if (comp.size() == 1) {
            const Vertex v = comp.front();
            colours[v] = g.out_degree(v) == 0 ? 0 : differ_from(colours[g.out(v).front()]);
            continue;
        }

        // Walk inside the component until a vertex repeats; the repeated
        // stretch is a directed cycle.
        std::vector<Vertex> walk;
        Vertex v = comp.front();
        while (seen_at[v] == n) {
            seen_at[v] = walk.size();
            walk.push_back(v);
            for (Vertex u : g.out(v))
                if (component_of[u] == ci) {
                    v = u;
                    break;
                }
        }
        const std::vector<Vertex> cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[v]), walk.end());
        for (Vertex w : walk)
            seen_at[w] = n;
        const std::size_t len = cycle.size();
        for (std::size_t i = 0; i < len; ++i)
            colours[cycle[i]] = static_cast<Colour>(i % 2);
        if (len % 2 == 1)
            colours[cycle[len - 1]] = 2;

        // Grow the coloured set X backwards: an uncoloured u with u->x, x in X,
        // takes a colour different from x.
        std::vector<Vertex> frontier(cycle);
        for (std::size_t head = 0; head < frontier.size(); ++head) {
            const Vertex x = frontier[head];
            for (Vertex u : g.in(x)) {
                if (component_of[u] != ci || colours[u] != none)
                    continue;
                colours[u] = differ_from(colours[x]);
                frontier.push_back(u);
            }
        }
    }
    return Colouring(std::move(colours), 3);
}

RetryResult random_3colouring_retry(const Digraph& g, std::size_t max_tries, std::uint64_t seed) {
    if (max_tries < 1)
        throw std::invalid_argument("max_tries must be at least 1");
    const MajoritySpec spec{3, Fraction(1, 2)};
    RetryResult result;
    for (std::size_t t = 0; t < max_tries; ++t) {
        Rng rng(mix_seed(seed, "retry", t));
        std::vector<Colour> colours(g.n());
        for (auto& c : colours)
            c = static_cast<Colour>(rng.below(3));
        result.colouring = Colouring(std::move(colours), 3);
        result.report = verify_majority(g, result.colouring, spec);
        result.tries_used = t + 1;
        if (result.report.valid) {
            result.success = true;
            break;
        }
    }
    return result;
}

ResampleResult lll_resample_3colouring(const Digraph& g, std::size_t max_rounds, std::uint64_t seed,
                                       ResampleEvents events) {
    Rng rng(mix_seed(seed, "lll-init"));
    std::vector<Colour> colours(g.n());
    for (auto& c : colours)
        c = static_cast<Colour>(rng.below(3));
    return lll_resample_3colouring(g, Colouring(std::move(colours), 3), max_rounds, seed, events);
}

ResampleResult lll_resample_3colouring(const Digraph& g, Colouring initial, std::size_t max_rounds,
                                       std::uint64_t seed, ResampleEvents events) {
    if (initial.size() != g.n() || initial.k > 3)
        throw std::invalid_argument("initial colouring must be a 3-colouring of the digraph");
    const std::size_t n = g.n();
    std::vector<Colour> colours = std::move(initial.colours);
    std::vector<std::array<std::uint32_t, 3>> x(n, {0, 0, 0});  // X(v, c)
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.out(v))
            ++x[v][colours[u]];

    auto holds = [&](Vertex v, Colour c) { return 2 * static_cast<std::size_t>(x[v][c]) > g.out_degree(v); };
    auto violated = [&](Vertex v) {
        if (events == ResampleEvents::own_colour)
            return holds(v, colours[v]);
        return holds(v, 0) || holds(v, 1) || holds(v, 2);
    };

    std::set<Vertex> bad;
    for (Vertex v = 0; v < n; ++v)
        if (violated(v))
            bad.insert(v);
    auto refresh = [&](Vertex v) {
        if (violated(v))
            bad.insert(v);
        else
            bad.erase(v);
    };

    Rng rng(mix_seed(seed, "lll-resample"));
    ResampleResult result;
    while (!bad.empty()) {
        if (result.log.rounds >= max_rounds)
            break;
        const Vertex v = *bad.begin();
        for (Vertex u : g.out(v)) {
            const Colour old = colours[u];
            const auto fresh = static_cast<Colour>(rng.below(3));
            if (fresh == old)
                continue;
            colours[u] = fresh;
            for (Vertex w : g.in(u)) {
                --x[w][old];
                ++x[w][fresh];
                refresh(w);
            }
            refresh(u);
        }
        ++result.log.rounds;
        result.log.resampled_vertices += g.out_degree(v);
    }
    result.log.success = bad.empty();
    result.colouring = Colouring(std::move(colours), 3);
    return result;
}

}  // namespace majority
