#include "majority/rational_lp.hpp"

#include <limits>
#include <stdexcept>

namespace majority::lp {

namespace {

// Row-major tableau: rows_ constraint rows plus one objective row of
// reduced costs; the last column is the right-hand side (objective row:
// minus the current objective value).
class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_((rows + 1) * (cols + 1)) {}

    mpq_class& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
    mpq_class& rhs(std::size_t r) { return at(r, cols_); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    // Install a cost vector as the objective row, priced out against basis.
    void set_objective(const std::vector<mpq_class>& cost, const std::vector<std::size_t>& basis) {
        for (std::size_t c = 0; c <= cols_; ++c)
            at(rows_, c) = c < cols_ ? cost[c] : mpq_class(0);
        for (std::size_t r = 0; r < rows_; ++r) {
            const mpq_class cb = cost[basis[r]];
            if (cb == 0)
                continue;
            for (std::size_t c = 0; c <= cols_; ++c)
                at(rows_, c) -= cb * at(r, c);
        }
    }

    void pivot(std::size_t pr, std::size_t pc) {
        const mpq_class scale = at(pr, pc);
        for (std::size_t c = 0; c <= cols_; ++c)
            at(pr, c) /= scale;
        for (std::size_t r = 0; r <= rows_; ++r) {
            if (r == pr)
                continue;
            const mpq_class factor = at(r, pc);
            if (factor == 0)
                continue;
            for (std::size_t c = 0; c <= cols_; ++c)
                if (at(pr, c) != 0)
                    at(r, c) -= factor * at(pr, c);
        }
    }

private:
    std::size_t rows_, cols_;
    std::vector<mpq_class> cells_;
};

// Bland's rule: lowest-index improving column, ratio ties to the lowest
// basic variable index. Returns the pivot count.
std::size_t run_simplex(Tableau& t, std::vector<std::size_t>& basis, std::size_t enterable) {
    std::size_t pivots = 0;
    for (;;) {
        std::size_t enter = enterable;
        for (std::size_t c = 0; c < enterable; ++c)
            if (t.at(t.rows(), c) < 0) {
                enter = c;
                break;
            }
        if (enter == enterable)
            return pivots;

        std::size_t leave = t.rows();
        mpq_class best_ratio;
        for (std::size_t r = 0; r < t.rows(); ++r) {
            if (t.at(r, enter) <= 0)
                continue;
            mpq_class ratio = t.rhs(r) / t.at(r, enter);
            if (leave == t.rows() || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == t.rows())
            throw std::runtime_error("linear program is unbounded");
        t.pivot(leave, enter);
        basis[leave] = enter;
        ++pivots;
    }
}

}  // namespace

Solution solve(const CoveringProblem& problem) {
    const std::size_t m = problem.rows.size();
    const std::size_t n = problem.cost.size();
    if (problem.rhs.size() != m)
        throw std::invalid_argument("rhs size does not match row count");
    for (const auto& row : problem.rows)
        if (row.size() != n)
            throw std::invalid_argument("row length does not match cost vector");
    for (const auto& b : problem.rhs)
        if (b < 0)
            throw std::invalid_argument("covering LP needs rhs >= 0");

    // Columns: x (n) | surplus (m) | artificial (m).
    const std::size_t cols = n + 2 * m;
    Tableau t(m, cols);
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            t.at(r, c) = problem.rows[r][c];
        t.at(r, n + r) = -1;
        t.at(r, n + m + r) = 1;
        t.rhs(r) = problem.rhs[r];
        basis[r] = n + m + r;
    }

    Solution sol;
    std::vector<mpq_class> phase1(cols, 0);
    for (std::size_t r = 0; r < m; ++r)
        phase1[n + m + r] = 1;
    t.set_objective(phase1, basis);
    sol.pivots += run_simplex(t, basis, cols);
    if (t.rhs(m) != 0)
        throw std::runtime_error("linear program is infeasible");

    // Drive zero-level artificials out of the basis where possible; rows
    // with no non-artificial entry are redundant and stay put.
    for (std::size_t r = 0; r < m; ++r) {
        if (basis[r] < n + m)
            continue;
        for (std::size_t c = 0; c < n + m; ++c)
            if (t.at(r, c) != 0) {
                t.pivot(r, c);
                basis[r] = c;
                ++sol.pivots;
                break;
            }
    }

    std::vector<mpq_class> phase2(cols, 0);
    for (std::size_t c = 0; c < n; ++c)
        phase2[c] = problem.cost[c];
    t.set_objective(phase2, basis);
    sol.pivots += run_simplex(t, basis, n + m);

    sol.x.assign(n, 0);
    for (std::size_t r = 0; r < m; ++r)
        if (basis[r] < n)
            sol.x[basis[r]] = t.rhs(r);
    sol.objective = 0;
    for (std::size_t c = 0; c < n; ++c)
        sol.objective += problem.cost[c] * sol.x[c];
    return sol;
}

}  // namespace majority::lp
