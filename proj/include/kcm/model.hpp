// SPDX-License-Identifier: MIT
//
// An n-species discrete-time competition model
//
//     T_i(x) = x_i * f_i( r_i * (U x)_i , r_i ),      x in the closed
//                                                     positive cone,
//
// where U is the matrix of competition coefficients (mu_ij > 0) and f_i is
// one of the growth laws in growth.hpp.  The load matrix is A = R U with
// R = diag(r); a_ij = r_i * mu_ij.  Fixed points are determined by U alone
// (each coordinate satisfies x_i = 0 or (U x)_i = 1), which is what makes
// the classification machinery downstream purely combinatorial in U.

#pragma once

#include <string>
#include <vector>

#include "kcm/growth.hpp"
#include "kcm/linalg.hpp"

namespace kcm {

struct SpeciesLaw {
    GrowthKind kind;
    double     r = 1.0;

    bool operator==(const SpeciesLaw&) const = default;
};

struct Model {
    std::vector<SpeciesLaw> laws;
    Mat U;  // n x n, entries > 0

    int n() const { return static_cast<int>(laws.size()); }

    // Load matrix A = diag(r) * U.
    Mat A() const;
};

// Validates shapes and ranges (square U, mu_ij > 0, r_i > 0, law parameters
// in range); throws DomainError on violation.
Model make_model(std::vector<SpeciesLaw> laws, Mat U);

// One step of the map.  Throws DomainError when x has a negative or
// non-finite coordinate.
Vec evaluate(const Model& m, const Vec& x);

// Exact closed-form Jacobian:
//   DT_ij = delta_ij F_i(x) + x_i * r_i * mu_ij * df_i/dz .
// When x_i == 0 the second term is skipped outright; this keeps the boundary
// exact even for laws whose slope diverges at zero load (SigmoidRatio, s<1).
Mat jacobian(const Model& m, const Vec& x);

struct AdmissibilityCheck {
    std::string condition;
    bool        pass   = false;
    double      margin = 0.0;  // slack in the binding inequality; +inf when
                               // the property holds by law structure alone
};

struct AdmissibilityReport {
    bool carries_simplex = false;
    std::vector<AdmissibilityCheck> checks;
};

// Decides whether the model carries an invariant simplex: a decreasing global
// attractor through the axial fixed points that every nontrivial orbit
// approaches.  Laws with monotone flux qualify unconditionally; a Ricker
// species needs its rate below one of two row bounds
//   (a)  r_i < mu_ii / sum_j mu_ij
//   (b)  r_i < 1 / sum_j (mu_ij / mu_jj)
// and the report records per species which branch (if any) passed.
AdmissibilityReport validate(const Model& m);

} // namespace kcm
