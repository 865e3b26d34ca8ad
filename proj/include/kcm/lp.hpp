// SPDX-License-Identifier: MIT
//
// Dense two-phase simplex for the tiny linear programs that arise when
// searching for average-Liapunov weight vectors (a handful of variables and
// rows).  Bland's rule everywhere, so no cycling; no sparsity, no scaling
// heuristics -- problems this small do not need them.

#pragma once

#include <vector>

#include "kcm/linalg.hpp"

namespace kcm {

// maximize  objective . x   subject to  rows[i] . x <= rhs[i],  x >= 0
struct LpProblem {
    int nvars = 0;
    std::vector<Vec> rows;
    Vec rhs;
    Vec objective;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Vec x;
    double value = 0.0;
};

LpSolution lp_solve(const LpProblem& p);

} // namespace kcm
