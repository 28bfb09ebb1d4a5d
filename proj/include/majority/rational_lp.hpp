#pragma once

#include <vector>

#include <gmpxx.h>

namespace majority::lp {

/// minimise cost . x  subject to  rows * x >= rhs,  x >= 0,  with rhs >= 0.
struct CoveringProblem {
    std::vector<std::vector<mpq_class>> rows;
    std::vector<mpq_class> rhs;
    std::vector<mpq_class> cost;
};

struct Solution {
    std::vector<mpq_class> x;
    mpq_class objective;
    std::size_t pivots = 0;
};

/// Two-phase dense tableau simplex in exact rationals with Bland's rule.
/// Throws std::runtime_error if the problem is infeasible or unbounded.
Solution solve(const CoveringProblem& problem);

}  // namespace majority::lp
