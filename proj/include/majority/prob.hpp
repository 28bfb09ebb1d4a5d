#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <gmpxx.h>

#include "majority/digraph.hpp"
#include "majority/fraction.hpp"

namespace majority::prob {

/// X ~ Bin(d, p); the event is X > threshold (strict).
struct TailQuery {
    std::uint64_t d = 0;
    mpq_class p;
    mpq_class threshold;
};

inline constexpr std::uint64_t kMaxExactTrials = 10'000;

/// Exact P(X > threshold) = sum over k = floor(threshold)+1 .. d of
/// C(d,k) p^k (1-p)^(d-k). Throws std::invalid_argument if p is outside
/// [0, 1] or d exceeds kMaxExactTrials.
mpq_class binomial_tail(const TailQuery& q);

/// exp(-t^2 / (2 c^2 d)): bounded-differences tail for a function of d
/// independent trials, each able to move it by at most c.
double concentration_bound(double d, double t, double c);

/// exp(-(beta - p)^2 d / (beta + p)) bounding P(Bin(d, p) > beta d).
/// Requires 0 < p < beta <= 1.
double chernoff_bound(double d, double p, double beta);

/// ceil((beta + p) ln(p / (p - alpha)) / (beta - p)^2), the minimum
/// out-degree that makes random sampling keep alpha*n vertices in
/// expectation. Evaluated with outward-rounded MPFR intervals; precision
/// doubles until both interval ends have the same ceiling.
std::int64_t delta_threshold(const Fraction& alpha, const Fraction& p, const Fraction& beta);

/// Degree conditions under which the weighted local lemma gives a majority
/// 3-colouring.
struct LLLReport {
    std::size_t delta = 0;          // minimum out-degree
    std::size_t max_in = 0;         // maximum in-degree
    double p_lll = 0.0;             // exp(-delta / 72)
    std::vector<double> weights;    // t_v = d_v / delta
    double in_degree_bound = 0.0;   // exp(delta / 72) / (12 delta)
    bool delta_ok = false;          // delta >= 1200
    bool p_ok = false;              // p_lll <= 1/4
    bool condition_a_ok = false;    // exp(-d_v/72) <= p^{t_v} for all v
    bool condition_b_ok = false;    // max_in <= in_degree_bound
    bool hypothesis_ok() const { return delta_ok && p_ok && condition_a_ok && condition_b_ok; }
};

/// Throws std::invalid_argument when the minimum out-degree is 0.
LLLReport lll_hypothesis_check(const Digraph& g);

struct TailRow {
    std::uint64_t d = 0;
    mpq_class tail;
    mpq_class bound;
    bool pass = false;
};

/// P(Bin(d, 19/50) > d/2) <= 7/57 for every d in [22, 128], exactly.
std::vector<TailRow> indset_tail_verification();

/// CSV with header d,tail_num,tail_den,bound_num,bound_den,pass.
void write_tail_csv(std::ostream& out, const std::vector<TailRow>& rows);

}  // namespace majority::prob
