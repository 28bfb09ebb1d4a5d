#include "majority/prob.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <mpfr.h>

namespace majority::prob {

mpq_class binomial_tail(const TailQuery& q) {
    mpq_class p = q.p;
    p.canonicalize();
    if (p < 0 || p > 1)
        throw std::invalid_argument("success probability outside [0, 1]");
    if (q.d > kMaxExactTrials)
        throw std::invalid_argument("exact binomial tail limited to d <= " + std::to_string(kMaxExactTrials));

    const mpz_class d(static_cast<unsigned long>(q.d));
    mpz_class floor_t;
    mpz_fdiv_q(floor_t.get_mpz_t(), q.threshold.get_num_mpz_t(), q.threshold.get_den_mpz_t());
    mpz_class first = floor_t + 1;
    if (first < 0)
        first = 0;
    if (first > d)
        return 0;
    const auto start = static_cast<unsigned long>(first.get_ui());

    if (p == 0)
        return start == 0 ? 1 : 0;
    if (p == 1)
        return 1;

    // Work over the common denominator b^d with p = a/b, 1-p = c/b.
    const mpz_class a = p.get_num();
    const mpz_class b = p.get_den();
    const mpz_class c = b - a;
    const unsigned long dd = q.d;

    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), dd, start);
    mpz_class apow, cpow;
    mpz_pow_ui(apow.get_mpz_t(), a.get_mpz_t(), start);
    mpz_pow_ui(cpow.get_mpz_t(), c.get_mpz_t(), dd - start);

    mpz_class sum = 0;
    for (unsigned long k = start;; ++k) {
        sum += binom * apow * cpow;
        if (k == dd)
            break;
        // C(d, k+1) = C(d, k) (d - k) / (k + 1)
        binom *= dd - k;
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k + 1);
        apow *= a;
        mpz_divexact(cpow.get_mpz_t(), cpow.get_mpz_t(), c.get_mpz_t());
    }
    mpz_class denom;
    mpz_pow_ui(denom.get_mpz_t(), b.get_mpz_t(), dd);
    mpq_class result(sum, denom);
    result.canonicalize();
    return result;
}

double concentration_bound(double d, double t, double c) {
    if (!(d >= 1) || !(t >= 0) || !(c > 0))
        throw std::invalid_argument("concentration bound needs d >= 1, t >= 0, c > 0");
    return std::exp(-(t * t) / (2.0 * c * c * d));
}

double chernoff_bound(double d, double p, double beta) {
    if (!(0 < p && p < beta && beta <= 1))
        throw std::invalid_argument("Chernoff bound needs 0 < p < beta <= 1");
    if (d < 0)
        throw std::invalid_argument("negative trial count");
    const double gap = beta - p;
    return std::exp(-(gap * gap) * d / (beta + p));
}

namespace {

// RAII handle for an mpfr_t at a given precision.
class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(value_, prec); }
    ~Mpfr() { mpfr_clear(value_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return value_; }

private:
    mpfr_t value_;
};

}  // namespace

std::int64_t delta_threshold(const Fraction& alpha, const Fraction& p, const Fraction& beta) {
    const Fraction zero(0, 1), one(1, 1);
    if (!(zero < alpha && alpha < p && p < beta && beta < one))
        throw std::invalid_argument("delta threshold needs 0 < alpha < p < beta < 1");

    const mpq_class a = alpha.to_mpq(), pq = p.to_mpq(), b = beta.to_mpq();
    const mpq_class gap = b - pq;
    const mpq_class scale = (b + pq) / (gap * gap);
    const mpq_class ratio = pq / (pq - a);

    for (mpfr_prec_t prec = 128;; prec *= 2) {
        Mpfr lo(prec), hi(prec);
        mpfr_set_q(lo.get(), ratio.get_mpq_t(), MPFR_RNDD);
        mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
        mpfr_mul_q(lo.get(), lo.get(), scale.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi.get(), ratio.get_mpq_t(), MPFR_RNDU);
        mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
        mpfr_mul_q(hi.get(), hi.get(), scale.get_mpq_t(), MPFR_RNDU);

        mpz_class ceil_lo, ceil_hi;
        mpfr_get_z(ceil_lo.get_mpz_t(), lo.get(), MPFR_RNDU);
        mpfr_get_z(ceil_hi.get_mpz_t(), hi.get(), MPFR_RNDU);
        if (ceil_lo == ceil_hi) {
            if (!ceil_lo.fits_slong_p())
                throw std::overflow_error("delta threshold does not fit in 64 bits");
            return ceil_lo.get_si();
        }
        if (prec > (1 << 20))
            throw std::runtime_error("delta threshold ceiling undecided at maximum precision");
    }
}

LLLReport lll_hypothesis_check(const Digraph& g) {
    if (g.n() == 0 || g.min_out_degree() == 0)
        throw std::invalid_argument("local lemma check needs minimum out-degree >= 1");
    LLLReport r;
    r.delta = g.min_out_degree();
    r.max_in = g.max_in_degree();
    const double delta = static_cast<double>(r.delta);
    const double log_p = -delta / 72.0;
    r.p_lll = std::exp(log_p);
    r.delta_ok = r.delta >= 1200;
    r.p_ok = r.p_lll <= 0.25;

    r.weights.resize(g.n());
    r.condition_a_ok = true;
    for (Vertex v = 0; v < g.n(); ++v) {
        const double dv = static_cast<double>(g.out_degree(v));
        r.weights[v] = dv / delta;
        // Compare logarithms: -d_v/72 against t_v * log p.
        const double lhs = -dv / 72.0;
        const double rhs = r.weights[v] * log_p;
        if (lhs > rhs + 1e-9 * std::max(1.0, std::abs(rhs)))
            r.condition_a_ok = false;
    }

    const double log_bound = delta / 72.0 - std::log(12.0 * delta);
    r.in_degree_bound = std::exp(log_bound);
    r.condition_b_ok = r.max_in == 0 || std::log(static_cast<double>(r.max_in)) <= log_bound;
    return r;
}

std::vector<TailRow> indset_tail_verification() {
    const mpq_class p(19, 50), bound(7, 57);
    std::vector<TailRow> rows;
    for (std::uint64_t d = 22; d <= 128; ++d) {
        TailRow row;
        row.d = d;
        mpq_class half_d(static_cast<unsigned long>(d), 2UL);
        half_d.canonicalize();
        row.tail = binomial_tail({d, p, half_d});
        row.bound = bound;
        row.pass = row.tail <= bound;
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_tail_csv(std::ostream& out, const std::vector<TailRow>& rows) {
    out << "d,tail_num,tail_den,bound_num,bound_den,pass\n";
    for (const auto& row : rows)
        out << row.d << ',' << row.tail.get_num().get_str() << ',' << row.tail.get_den().get_str() << ','
            << row.bound.get_num().get_str() << ',' << row.bound.get_den().get_str() << ','
            << (row.pass ? "true" : "false") << '\n';
}

}  // namespace majority::prob
