// SPDX-License-Identifier: MIT
//
// Reference models shared by the unit, acceptance, and CLI suites, plus the
// frozen reference values the regression tests pin against.  The closed-form
// crossing parameters come from exact elimination on the characteristic
// polynomial at the interior fixed point; the remaining constants were
// derived independently and are treated as regression anchors.

#pragma once

#include "kcm/linalg.hpp"
#include "kcm/model.hpp"

namespace fixtures {

// Three cyclic-competition models (catalog class 27) sharing one matrix.
kcm::Model lg1(double r2 = 0.1);     // LeslieGower, rates (1, r2, 1)
kcm::Model cgaa1(double c3 = 0.5);   // AtkinsonAllen, c = (0.1, 0.2, c3)
kcm::Model cgaa2(double c2 = 0.75);  // AtkinsonAllen on a second matrix,
                                     // c = (0.1, c2, 0.1)

// Mixed-law models (one species each of LeslieGower, AtkinsonAllen c = 4/5,
// LogRatio), rates (1, r2, 1).
kcm::Model mix1(double r2 = 0.02);   // catalog class 29
kcm::Model mix2(double r2 = 0.03);   // catalog class 31

// All-Ricker models (admissible rates).
kcm::Model ricker2(double r2 = 0.005);  // mix1's matrix, rates (1/11, r2, 2/7)
kcm::Model ricker_chenciner();          // catalog class 26, rates (.1,.3,.25)

// Structural examples.
kcm::Model class33();             // symmetric mu_ii = 1, mu_ij = 1/2
kcm::Model boundary_attractor();  // species 1 dominates: q_1 attracts
kcm::Model two_coexist();         // 2-species, interior attractor
kcm::Model two_bistable();        // 2-species, interior saddle
kcm::Model two_excl_first();      // 2-species, q_1 attracts
kcm::Model two_excl_second();     // 2-species, q_2 attracts

// Exact stability-loss parameters (closed forms).
double lg1_crossing();      // -113/194 + 4 sqrt(295)/97          ~ 0.125797
double cgaa1_crossing();    // 432709/80801 - 80 sqrt(24656689)/80801 ~ 0.438917
double cgaa2_crossing();    // 1822387/382723 - 840 sqrt(3257017)/382723 ~ 0.800637
double ricker2_crossing();  // -15/2128 + 3 sqrt(231729)/78736    ~ 0.011293

// Interior fixed points (exact rationals).
inline kcm::Vec lg1_p()       { return {1.0 / 4, 1.0 / 2, 1.0 / 4}; }
inline kcm::Vec cgaa2_p()     { return {1.0 / 7, 1.0 / 7, 1.0 / 7}; }
inline kcm::Vec mix1_p()      { return {8.0 / 19, 74.0 / 95, 2.0 / 95}; }
inline kcm::Vec mix2_p()      { return {5.0 / 11, 6.0 / 11, 3.0 / 11}; }
inline kcm::Vec chenciner_p() { return {80.0 / 287, 12.0 / 287, 212.0 / 287}; }
inline kcm::Vec class33_p()   { return {1.0 / 2, 1.0 / 2, 1.0 / 2}; }

// Frozen regression anchors: crossing locations found by bisection
// (grid-independent), first Lyapunov coefficients, and boundary-cycle
// criterion values at the crossings.
inline constexpr double kMix1Crossing = 0.032889;  // +/- 5e-6
inline constexpr double kMix2Crossing = 0.038917;  // +/- 5e-6

inline constexpr double kLg1L1     = -1.162e-2;  // 10% relative
inline constexpr double kCgaa1L1   = -1.814e-2;  // 10%
inline constexpr double kCgaa2L1   = -5.039e-2;  // 10%
inline constexpr double kMix1L1    = -2.430e-5;  // 25% (tiny magnitude)
inline constexpr double kMix2L1    = -3.968e-3;  // 10%
inline constexpr double kRicker2L1 = -1.433e-2;  // 10%

inline constexpr double kLg1Rho   = 0.00078;   // +/- 1e-4
inline constexpr double kCgaa1Rho = 0.0026;    // +/- 3e-4
inline constexpr double kCgaa2Rho = -0.00058;  // +/- 1e-4

} // namespace fixtures
