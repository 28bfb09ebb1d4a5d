#include "majority/stable_sets.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "majority/kernels.hpp"
#include "majority/prob.hpp"
#include "majority/rng.hpp"

namespace majority {

StableSetParams StableSetParams::make(Fraction alpha, Fraction p, Fraction beta) {
    StableSetParams params{alpha, p, beta, 0};
    params.delta_required = prob::delta_threshold(alpha, p, beta);
    return params;
}

StableSetParams StableSetParams::third() {
    return make(Fraction(1, 3), Fraction(19, 50), Fraction(1, 2));
}

StableSetParams StableSetParams::near_half(Fraction eps) {
    // 1/2 - eps and 1/2 - eps/2 over a common denominator.
    const std::int64_t n = eps.num(), d = eps.den();
    return make(Fraction(d - 2 * n, 2 * d), Fraction(d - n, 2 * d), Fraction(1, 2));
}

StableSetParams StableSetParams::one_over_k(std::int64_t k, Fraction eps) {
    if (k < 2)
        throw std::invalid_argument("k must be at least 2");
    const std::int64_t n = eps.num(), d = eps.den();
    return make(Fraction(d - k * n, k * d), Fraction(2 * d - k * n, 2 * k * d), Fraction(1, k));
}

namespace {

std::vector<std::uint8_t> membership(const Digraph& g, const VertexSet& t) {
    std::vector<std::uint8_t> member(g.n(), 0);
    for (Vertex v : t) {
        if (v >= g.n())
            throw std::invalid_argument("vertex " + std::to_string(v) + " outside the digraph");
        member[v] = 1;
    }
    return member;
}

}  // namespace

StableCheck verify_stable(const Digraph& g, const VertexSet& t, const Fraction& beta) {
    const auto member = membership(g, t);
    const auto counts = kernels::member_out_counts(g, member);
    StableCheck check;
    for (Vertex v = 0; v < g.n(); ++v)
        if (member[v] && beta.exceeded_by(counts[v], static_cast<std::int64_t>(g.out_degree(v))))
            check.violations.push_back(v);
    check.valid = check.violations.empty();
    return check;
}

StableSetResult random_stable_set(const Digraph& g, const StableSetParams& params, std::size_t max_tries,
                                  std::uint64_t seed) {
    const std::size_t n = g.n();
    StableSetResult best;
    // ceil(alpha * n) in integers.
    const auto an = static_cast<std::int64_t>(n) * params.alpha.num();
    best.target = static_cast<std::size_t>((an + params.alpha.den() - 1) / params.alpha.den());

    std::vector<std::uint8_t> member(n);
    for (std::size_t t = 0; t < max_tries; ++t) {
        Rng rng(mix_seed(seed, "stable", t));
        for (Vertex v = 0; v < n; ++v)
            member[v] = rng.bernoulli(params.p) ? 1 : 0;
        const auto x = kernels::member_out_counts(g, member);

        StableSetResult attempt;
        attempt.target = best.target;
        attempt.tries_used = t + 1;
        for (Vertex v = 0; v < n; ++v) {
            if (!member[v])
                continue;
            attempt.s.push_back(v);
            if (params.beta.exceeded_by(x[v], static_cast<std::int64_t>(g.out_degree(v))))
                attempt.b.push_back(v);
            else
                attempt.t.push_back(v);
        }
        attempt.success = attempt.t.size() >= attempt.target;
        if (attempt.success || t == 0 || attempt.t.size() > best.t.size())
            best = std::move(attempt);
        best.tries_used = t + 1;
        if (best.success)
            break;
    }
    return best;
}

bool third_tail_condition(std::size_t d) {
    if (d < 22)
        return false;
    if (d >= 129)
        return prob::chernoff_bound(static_cast<double>(d), 0.38, 0.5) <= 7.0 / 57.0;
    mpq_class half_d(static_cast<unsigned long>(d), 2UL);
    half_d.canonicalize();
    return prob::binomial_tail({d, mpq_class(19, 50), half_d}) <= mpq_class(7, 57);
}

StableThirdResult stable_third(const Digraph& g, std::size_t max_tries, std::uint64_t seed) {
    StableThirdResult out;
    out.result = random_stable_set(g, StableSetParams::third(), max_tries, seed);

    std::vector<std::size_t> degrees;
    for (Vertex v = 0; v < g.n(); ++v)
        degrees.push_back(g.out_degree(v));
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    for (std::size_t d : degrees)
        if (!third_tail_condition(d))
            out.failing_degrees.push_back(d);
    out.hypothesis_ok = out.failing_degrees.empty();
    return out;
}

namespace {

class StableEnumerator {
public:
    StableEnumerator(const Digraph& g, const Fraction& beta) : n_(g.n()), beta_(beta), out_(g.n()), deg_(g.n()) {
        for (Vertex v = 0; v < n_; ++v) {
            for (Vertex u : g.out(v))
                out_[v] |= 1u << u;
            deg_[v] = static_cast<std::int64_t>(g.out_degree(v));
        }
    }

    std::vector<std::uint32_t> run() {
        extend(0, 0);
        return std::move(maximal_);
    }

private:
    bool stable(std::uint32_t set) const {
        for (std::uint32_t rest = set; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if (beta_.exceeded_by(std::popcount(out_[v] & set), deg_[v]))
                return false;
        }
        return true;
    }

    // set is stable; try every extension by a vertex >= from, in order.
    void extend(std::uint32_t set, std::size_t from) {
        bool maximal = true;
        for (std::size_t w = 0; w < n_; ++w) {
            const std::uint32_t bit = 1u << w;
            if (set & bit)
                continue;
            if (!stable(set | bit))
                continue;
            maximal = false;
            if (w >= from)
                extend(set | bit, w + 1);
        }
        if (maximal)
            maximal_.push_back(set);
    }

    std::size_t n_;
    Fraction beta_;
    std::vector<std::uint32_t> out_;
    std::vector<std::int64_t> deg_;
    std::vector<std::uint32_t> maximal_;
};

}  // namespace

std::vector<VertexSet> enumerate_stable_sets(const Digraph& g, const Fraction& beta, std::size_t max_n) {
    max_n = std::min(max_n, kMaxEnumerationVertices);
    if (g.n() > max_n)
        throw std::invalid_argument("stable-set enumeration limited to " + std::to_string(max_n) + " vertices");
    std::vector<VertexSet> sets;
    for (std::uint32_t mask : StableEnumerator(g, beta).run()) {
        VertexSet s;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1)
            s.push_back(static_cast<Vertex>(std::countr_zero(rest)));
        sets.push_back(std::move(s));
    }
    std::sort(sets.begin(), sets.end());
    return sets;
}

}  // namespace majority
