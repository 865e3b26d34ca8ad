// SPDX-License-Identifier: MIT
//
// Permanence analysis: does the interior of the positive cone repel the
// boundary (every species survives from every interior start), or do orbits
// reach extinction?
//
// Three methods, in priority order:
//   1. A boundary fixed point that attracts in every direction forces
//      impermanence outright.
//   2. When the boundary carries a heteroclinic cycle (the cyclic-competition
//      class), the cycle criterion rho decides: the products of invasion
//      log-rates around the cycle, rho > 0 <=> the cycle repels.
//   3. An average-Liapunov weight vector nu found by linear programming
//      certifies permanence (or, with the inequalities flipped,
//      impermanence); the certificate is re-verified independently.
// Classes whose boundary structure forces permanence are accepted on that
// rule when the LP is inconclusive.  Methods that both decide must agree;
// disagreement throws ContradictionError.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kcm/equilibria.hpp"
#include "kcm/linalg.hpp"
#include "kcm/model.hpp"

namespace kcm {

struct LiapunovCertificate {
    Vec nu;                // weights, each in [1e-6, 1]
    double margin = 0.0;   // worst-case boundary decrease/increase rate
    bool impermanence = false;  // direction of the certified inequality
};

struct RhoReport {
    Mat G;          // G(i,j) = log growth factor of species j at axial point i
    double rho = 0.0;
    bool cycle_present = false;  // boundary forms the cyclic-competition cycle
};

enum class Verdict { Permanent, Impermanent, Undetermined };
const char* verdict_name(Verdict v);

enum class EvidenceKind {
    BoundaryAttractor,  // impermanence: an attracting boundary fixed point
    CycleCriterion,     // sign of rho at the boundary cycle
    AverageLiapunov,    // LP certificate
    ClassRule,          // permanence forced by the boundary class
    None,
};
const char* evidence_name(EvidenceKind e);

struct PermanenceVerdict {
    Verdict verdict = Verdict::Undetermined;
    EvidenceKind evidence = EvidenceKind::None;
    std::optional<LiapunovCertificate> certificate;
    std::optional<RhoReport> rho_report;
    std::vector<std::string> cross_checks;  // one line per method consulted
    std::vector<std::string> warnings;
};

// Search for an average-Liapunov weight vector by LP over the axial and
// planar fixed points (the boundary omega-limit candidates).  Returns nullopt
// when no certificate with margin > 1e-9 exists in the given direction.
// A returned certificate has been re-verified against every boundary point.
std::optional<LiapunovCertificate> liapunov_lp(const Model& m, bool impermanence);

// Re-check a certificate directly (no LP): the weighted invasion log-rate at
// every axial/planar point must clear the margin, up to 1e-12 slack.
bool certificate_holds(const Model& m, const LiapunovCertificate& cert);

// Cycle criterion data for a 3-species model (rho is computed from the
// invasion log-rates whether or not the cycle is present).
RhoReport rho(const Model& m);

// The bare combination entering rho, exposed for direct testing:
// g12*g23*g31 + g21*g13*g32.
double rho_from_logs(double g12, double g23, double g31,
                     double g21, double g13, double g32);

// Full decision procedure; see file comment for the order of methods.
PermanenceVerdict verdict(const Model& m);

} // namespace kcm
