// SPDX-License-Identifier: MIT
//
// Orbit simulation, attractor sampling, and the eigenvalue scan that locates
// parameter values where the interior fixed point loses stability through a
// complex conjugate pair crossing the unit circle.
//
// The interior fixed point depends on U alone, so sweeping a rate or a growth
// shape parameter moves the spectrum of the Jacobian without moving the
// point.  At a crossing the first Lyapunov coefficient decides whether a
// stable invariant curve branches off (l1 < 0) or an unstable one collapses
// (l1 > 0).

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kcm/equilibria.hpp"
#include "kcm/linalg.hpp"
#include "kcm/model.hpp"
#include "kcm/parallel.hpp"

namespace kcm {

// --- orbit simulation -------------------------------------------------------

struct Orbit {
    std::vector<Vec> points;  // x_0 .. x_K with x_{k+1} = T(x_k)
    bool truncated = false;   // stopped early after settling onto a fixed point
};

enum class OmegaKind { FixedPoint, InvariantCurve, HeteroclinicLike, Undecided };
const char* omega_kind_name(OmegaKind k);

struct OmegaLimit {
    OmegaKind kind = OmegaKind::Undecided;
    std::optional<FixedPoint> fixed_point;  // set when kind == FixedPoint
    double tail_diameter = 0.0;        // sup-norm diameter of the tail window
    double final_distance = 0.0;       // distance to the nearest fixed point
    double min_boundary_distance = 0.0;  // smallest coordinate seen in the tail
    std::string note;
};

struct SimulationResult {
    Orbit orbit;
    OmegaLimit omega;
};

// Iterate from x0 for up to max_steps, then classify the tail (window
// min(2000, max_steps / 4), shrunk to the settled plateau when the orbit
// stopped early).  A tail that stays within tol of a known fixed point is
// FixedPoint -- unless that point is a boundary saddle the orbit reached
// after touring every axial neighborhood with a coordinate under 1e-6, which
// is the numerical signature of an attracting boundary cycle and reports
// HeteroclinicLike.  A tail that hugs the boundary (min coordinate < 1e-6)
// after such a tour is HeteroclinicLike as well; a bounded non-convergent
// tail away from the boundary with a stable diameter is InvariantCurve.
SimulationResult simulate(const Model& m, const Vec& x0, int max_steps,
                          double tol = 1e-8);

// --- attractor sampling -----------------------------------------------------

// Shoot `rays` deterministic low-discrepancy directions from the origin
// through the positive cone, scale each to the box [0, q] spanned by the
// axial points, and iterate settle_steps times.  The returned points lie
// (numerically) on the globally attracting decreasing surface the map carries;
// no two of them are componentwise ordered.
std::vector<Vec> sample_simplex(const Model& m, int rays, int settle_steps,
                                Exec policy = Exec::Serial);

// --- eigenvalue scan --------------------------------------------------------

// Which scalar parameter a sweep moves.
struct ParamRef {
    enum class Kind { Rate, Shape };
    Kind kind = Kind::Rate;
    int species = 0;  // 0-based
};

// "r2" -> rate of species 2, "c1"/"s1" -> shape parameter of species 1.
std::optional<ParamRef> parse_param_ref(std::string_view name);

// Copy of m with the referenced parameter set to value (validated).
Model with_param(const Model& m, ParamRef ref, double value);

struct ScanPoint {
    double param = 0.0;
    std::vector<Cplx> eigs;          // descending modulus
    double max_modulus = 0.0;
    std::optional<double> pair_modulus;  // modulus of the complex pair, if any
};

struct CrossingReport {
    double param = 0.0;
    Cplx eigenvalue;            // crossing pair member with Im > 0
    double modulus_residual = 0.0;  // | |lambda| - 1 | after bisection
};

struct ScanResult {
    std::string param_name;
    std::vector<ScanPoint> grid;
    std::optional<CrossingReport> crossing;
    std::optional<double> l1;   // filled by ns_scan_with_l1
    std::vector<std::string> notes;
};

// Sweep the parameter over a uniform grid, recording the spectrum of the
// Jacobian at the (parameter-independent) interior fixed point, then bisect
// the first sign change of (complex-pair modulus - 1) down to 1e-10.
// Crossings whose eigenvalue lies within 1e-6 of a low-order root of unity
// (1, -1, +/-i, the primitive cube roots) are rejected and noted, and the
// scan continues with the next bracket.  Absence of a crossing is normal and
// leaves `crossing` empty.  Throws DegenerateError when the model has no
// interior fixed point.
ScanResult ns_scan(const Model& m, ParamRef ref, double from, double to,
                   int grid, Exec policy = Exec::Serial);

// ns_scan plus the first Lyapunov coefficient at the crossing (when one was
// found); numerical failures in the coefficient are demoted to notes.
ScanResult ns_scan_with_l1(const Model& m, ParamRef ref, double from, double to,
                           int grid, Exec policy = Exec::Serial);

// First Lyapunov coefficient of the interior fixed point at a unit-modulus
// eigenvalue lambda: negative means the branching invariant curve is stable.
// Multilinear forms are obtained by Richardson-extrapolated central
// differences of the closed-form Jacobian.  Throws NumericalError when the
// eigenvector pair is ill-conditioned (kappa > 1e8) or a resonant solve
// fails.
double lyapunov_l1(const Model& m, Cplx lambda);

} // namespace kcm
