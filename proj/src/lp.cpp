// SPDX-License-Identifier: MIT

#include "kcm/lp.hpp"

#include <cmath>
#include <limits>

#include "kcm/errors.hpp"

namespace kcm {

namespace {

constexpr double kTol = 1e-11;

// Dense tableau: m rows of [coefficients | rhs], plus an objective row kept
// in reduced form.  Column count = structural vars + slacks + artificials.
struct Tableau {
    int m = 0, ncols = 0;
    std::vector<Vec> row;   // m rows, each ncols + 1 (last entry = rhs)
    Vec cost;               // reduced costs, ncols + 1 (last = -objective value)
    std::vector<int> basis; // basic column per row

    void pivot(int r, int c) {
        const double p = row[r][c];
        for (double& v : row[r]) v /= p;
        for (int i = 0; i < m; ++i) {
            if (i == r || row[i][c] == 0.0) continue;
            const double f = row[i][c];
            for (int j = 0; j <= ncols; ++j) row[i][j] -= f * row[r][j];
        }
        if (cost[c] != 0.0) {
            const double f = cost[c];
            for (int j = 0; j <= ncols; ++j) cost[j] -= f * row[r][j];
        }
        basis[r] = c;
    }

    // Bland's rule: smallest improving column; smallest basis index on ratio
    // ties.  Returns false at optimality; throws on unboundedness.
    bool step() {
        int enter = -1;
        for (int j = 0; j < ncols; ++j)
            if (cost[j] > kTol) { enter = j; break; }
        if (enter < 0) return false;

        int leave = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            if (row[i][enter] <= kTol) continue;
            const double ratio = row[i][ncols] / row[i][enter];
            if (ratio < best - kTol ||
                (ratio < best + kTol && (leave < 0 || basis[i] < basis[leave]))) {
                best = ratio;
                leave = i;
            }
        }
        if (leave < 0) throw NumericalError("lp: unbounded direction");
        pivot(leave, enter);
        return true;
    }
};

} // namespace

LpSolution lp_solve(const LpProblem& p) {
    const int m = static_cast<int>(p.rows.size());
    const int n = p.nvars;

    // Columns: n structural, m slacks, then one artificial per negative-rhs
    // row (those rows are negated so every rhs is nonnegative).
    int nart = 0;
    for (double b : p.rhs)
        if (b < 0.0) ++nart;

    Tableau t;
    t.m = m;
    t.ncols = n + m + nart;
    t.row.assign(m, Vec(t.ncols + 1, 0.0));
    t.basis.assign(m, -1);

    int art = 0;
    for (int i = 0; i < m; ++i) {
        const double sign = p.rhs[i] < 0.0 ? -1.0 : 1.0;
        for (int j = 0; j < n; ++j) t.row[i][j] = sign * p.rows[i][j];
        t.row[i][n + i] = sign;                         // slack
        t.row[i][t.ncols] = sign * p.rhs[i];
        if (sign < 0.0) {
            t.row[i][n + m + art] = 1.0;                // artificial
            t.basis[i] = n + m + art;
            ++art;
        } else {
            t.basis[i] = n + i;
        }
    }

    if (nart > 0) {
        // Phase 1: maximize -sum(artificials); start from cost = sum of the
        // artificial rows (reduced against the artificial basis).
        t.cost.assign(t.ncols + 1, 0.0);
        for (int i = 0; i < m; ++i) {
            if (t.basis[i] < n + m) continue;
            for (int j = 0; j <= t.ncols; ++j) t.cost[j] += t.row[i][j];
        }
        for (int j = n + m; j < t.ncols; ++j) t.cost[j] = 0.0;
        while (t.step()) {}
        if (t.cost[t.ncols] > 1e-7) return {LpStatus::Infeasible, {}, 0.0};

        // Pivot leftover artificials out of the basis (degenerate rows).
        for (int i = 0; i < m; ++i) {
            if (t.basis[i] < n + m) continue;
            int c = -1;
            for (int j = 0; j < n + m; ++j)
                if (std::abs(t.row[i][j]) > kTol) { c = j; break; }
            if (c >= 0) t.pivot(i, c);
        }
    }

    // Phase 2: reduced costs of the real objective against the current basis.
    t.cost.assign(t.ncols + 1, 0.0);
    for (int j = 0; j < n; ++j) t.cost[j] = p.objective[j];
    for (int i = 0; i < m; ++i) {
        const int b = t.basis[i];
        if (b < n && p.objective[b] != 0.0) {
            const double f = p.objective[b];
            for (int j = 0; j <= t.ncols; ++j)
                if (j != b) t.cost[j] -= f * t.row[i][j];
            t.cost[b] = 0.0;
        }
    }
    for (int j = n + m; j < t.ncols; ++j) t.cost[j] = -1.0;  // keep artificials out

    try {
        while (t.step()) {}
    } catch (const NumericalError&) {
        return {LpStatus::Unbounded, {}, 0.0};
    }

    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.x.assign(n, 0.0);
    for (int i = 0; i < m; ++i)
        if (t.basis[i] < n) sol.x[t.basis[i]] = t.row[i][t.ncols];
    sol.value = 0.0;
    for (int j = 0; j < n; ++j) sol.value += p.objective[j] * sol.x[j];
    return sol;
}

} // namespace kcm
