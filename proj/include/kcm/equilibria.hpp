// SPDX-License-Identifier: MIT
//
// Fixed points of the competition map.
//
// Because every coordinate of a fixed point satisfies x_i = 0 or (U x)_i = 1,
// the fixed-point set is determined by U alone: the origin, one axial point
// q_i = e_i / mu_ii per species, at most one planar point per species pair
// (present exactly when gamma_ij and gamma_ji share a sign, where
// gamma_ij = mu_ii - mu_ji), and at most one interior point p solving
// U p = (1,...,1).  Growth laws and rates only enter through the eigenvalues.
//
// The sign quantities gamma_ij control invasion: the growth factor of species
// j at the axial point q_i satisfies  sign(F_j(q_i) - 1) = sign(gamma_ij).

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kcm/linalg.hpp"
#include "kcm/model.hpp"

namespace kcm {

enum class LocalType { Repeller, Attractor, Saddle, NonHyperbolic };

const char* local_type_name(LocalType t);

struct FixedPoint {
    std::vector<int> support;   // ascending, 0-based species indices
    Vec coords;                 // full n-vector (zeros off support)
    std::vector<Cplx> internal_eigs;              // eigenvalues within the
                                                  // support coordinate plane
    std::vector<std::pair<int, double>> external_eigs;  // (species j, F_j(x))
                                                        // for j off support
    LocalType local_type = LocalType::NonHyperbolic;
    int index = 0;              // sign det(I - DT(x)); 0 when non-hyperbolic
};

// gamma_ij = mu_ii - mu_ji for i != j (diagonal entries are 0 by convention).
struct GammaTable {
    int n = 0;
    Mat g;

    double gamma(int i, int j) const { return g(i, j); }

    // Both gammas share a sign <=> the pair has a planar fixed point.
    bool pair_has_planar(int i, int j) const {
        return g(i, j) * g(j, i) > 0.0;
    }
};

GammaTable gamma_table(const Model& m);

// The origin (total extinction): always a fixed point, always a repeller for
// valid rates.
FixedPoint origin_point(const Model& m);

// Axial points q_i = e_i / mu_ii.  The internal eigenvalue is
// 1 + r_i f_i'(r_i, r_i), always in (0, 1).
std::vector<FixedPoint> axial_points(const Model& m);

// Planar points for 3-species models, one per pair with matching gamma signs.
// Throws DegenerateError when a pair's 2x2 system is singular although the
// signs demand a solution, or when a transverse growth factor sits within
// 1e-9 of 1 (the class boundary).
std::vector<FixedPoint> planar_points(const Model& m);

// Interior point: the strictly positive solution of U p = 1, if any.  Throws
// DegenerateError when U is singular.
std::optional<FixedPoint> positive_point(const Model& m);

struct EquilibriumSet {
    std::vector<FixedPoint> axial;
    std::vector<FixedPoint> planar;
    std::optional<FixedPoint> positive;
    bool degenerate = false;           // any computation hit a class boundary
    bool boundary_degenerate = false;  // the boundary structure itself is
                                       // degenerate (planar system singular or
                                       // an axial/planar point non-hyperbolic);
                                       // a non-hyperbolic interior point alone
                                       // does not set this
    std::string degeneracy_note;
};

// All fixed points with types and indices filled in.  Degeneracies are
// recorded in the flag instead of thrown.
EquilibriumSet equilibria(const Model& m);

// Consistency of the index bookkeeping for 3-species models: at every fixed
// point the sign-predicted index (from gamma signs / transverse signs /
// det U) must match sign det(I - DT), and the weighted boundary sum
// (axial + twice planar) must determine the interior index through
// (1 - sum) / 4.  Returns the number of violated checks: 0 on success.
// Throws DegenerateError when the model sits on a class boundary.
int index_formula_check(const Model& m);

} // namespace kcm
