// SPDX-License-Identifier: MIT

#include "kcm/permanence.hpp"

#include <cmath>
#include <string>

#include "kcm/classify.hpp"
#include "kcm/errors.hpp"
#include "kcm/lp.hpp"

namespace kcm {

namespace {

constexpr double kNuFloor   = 1e-6;  // lower bound on every weight
constexpr double kMarginTol = 1e-9;  // minimum decisive LP margin
constexpr double kRhoBand   = 1e-12; // |rho| below this: undetermined

// Invasion log-rates at the boundary fixed points that can carry boundary
// omega-limit sets: one row per axial/planar point, entries log F_i(x); the
// support entries are exactly 0 (growth factor 1 at a fixed point).
struct BoundaryRates {
    std::vector<Vec> rows;
    std::vector<const FixedPoint*> points;
};

BoundaryRates boundary_rates(const Model& m,
                             const std::vector<FixedPoint>& axial,
                             const std::vector<FixedPoint>& planar) {
    BoundaryRates rates;
    const int n = m.n();
    auto add = [&](const FixedPoint& fp) {
        Vec row(n, 0.0);
        for (const auto& [j, f] : fp.external_eigs) row[j] = std::log(f);
        rates.rows.push_back(std::move(row));
        rates.points.push_back(&fp);
    };
    for (const FixedPoint& fp : axial) add(fp);
    for (const FixedPoint& fp : planar) add(fp);
    return rates;
}

} // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Permanent:    return "Permanent";
        case Verdict::Impermanent:  return "Impermanent";
        case Verdict::Undetermined: return "Undetermined";
    }
    return "?";
}

const char* evidence_name(EvidenceKind e) {
    switch (e) {
        case EvidenceKind::BoundaryAttractor: return "BoundaryAttractor";
        case EvidenceKind::CycleCriterion:    return "CycleCriterion";
        case EvidenceKind::AverageLiapunov:   return "AverageLiapunov";
        case EvidenceKind::ClassRule:         return "ClassRule";
        case EvidenceKind::None:              return "None";
    }
    return "?";
}

double rho_from_logs(double g12, double g23, double g31,
                     double g21, double g13, double g32) {
    return g12 * g23 * g31 + g21 * g13 * g32;
}

RhoReport rho(const Model& m) {
    if (m.n() != 3) throw DomainError("rho: 3-species models only");
    RhoReport report;
    report.G = Mat(3, 3);
    const std::vector<FixedPoint> axial = axial_points(m);
    for (int i = 0; i < 3; ++i)
        for (const auto& [j, f] : axial[i].external_eigs)
            report.G(i, j) = std::log(f);
    report.rho = rho_from_logs(report.G(0, 1), report.G(1, 2), report.G(2, 0),
                               report.G(1, 0), report.G(0, 2), report.G(2, 1));
    try {
        report.cycle_present = classify3(m).catalog_number == 27;
    } catch (const DegenerateError&) {
        report.cycle_present = false;
    }
    return report;
}

std::optional<LiapunovCertificate> liapunov_lp(const Model& m, bool impermanence) {
    const std::vector<FixedPoint> axial = axial_points(m);
    const std::vector<FixedPoint> planar = m.n() == 3 ? planar_points(m)
                                                      : std::vector<FixedPoint>{};
    const BoundaryRates rates = boundary_rates(m, axial, planar);
    const int n = m.n();
    const int nrows = static_cast<int>(rates.rows.size());

    // Variables: xi_1..xi_n (nu_i = floor + xi_i), tau_plus, tau_minus with
    // t = tau_plus - tau_minus.  Maximize t subject to, per boundary point,
    //   sum_i nu_i L_i >= t      (permanence)   or
    //   sum_i nu_i L_i <= -t     (impermanence),
    // with 0 <= xi_i <= 1 - floor and tau bounded to keep the LP finite.
    LpProblem lp;
    lp.nvars = n + 2;
    lp.objective.assign(n + 2, 0.0);
    lp.objective[n] = 1.0;
    lp.objective[n + 1] = -1.0;

    const double dir = impermanence ? 1.0 : -1.0;
    for (int r = 0; r < nrows; ++r) {
        Vec row(n + 2, 0.0);
        double floor_sum = 0.0;
        for (int i = 0; i < n; ++i) {
            row[i] = dir * rates.rows[r][i];
            floor_sum += rates.rows[r][i];
        }
        row[n] = 1.0;
        row[n + 1] = -1.0;
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(-dir * kNuFloor * floor_sum);
    }
    for (int i = 0; i < n; ++i) {
        Vec row(n + 2, 0.0);
        row[i] = 1.0;
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(1.0 - kNuFloor);
    }
    for (int j = n; j < n + 2; ++j) {
        Vec row(n + 2, 0.0);
        row[j] = 1.0;
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(1e3);
    }

    const LpSolution sol = lp_solve(lp);
    if (sol.status != LpStatus::Optimal || sol.value <= kMarginTol)
        return std::nullopt;

    LiapunovCertificate cert;
    cert.nu.assign(n, 0.0);
    for (int i = 0; i < n; ++i) cert.nu[i] = kNuFloor + sol.x[i];
    cert.margin = sol.value;
    cert.impermanence = impermanence;
    if (!certificate_holds(m, cert))
        throw NumericalError("liapunov_lp: certificate failed re-verification");
    return cert;
}

bool certificate_holds(const Model& m, const LiapunovCertificate& cert) {
    const std::vector<FixedPoint> axial = axial_points(m);
    const std::vector<FixedPoint> planar = m.n() == 3 ? planar_points(m)
                                                      : std::vector<FixedPoint>{};
    const BoundaryRates rates = boundary_rates(m, axial, planar);
    for (const Vec& row : rates.rows) {
        double s = 0.0;
        for (int i = 0; i < m.n(); ++i) s += cert.nu[i] * row[i];
        if (cert.impermanence) {
            if (s > -cert.margin + 1e-12) return false;
        } else {
            if (s < cert.margin - 1e-12) return false;
        }
    }
    return true;
}

PermanenceVerdict verdict(const Model& m) {
    PermanenceVerdict out;

    // Permanence is a statement about the boundary: only boundary degeneracy
    // blocks the analysis.  A non-hyperbolic interior point (e.g. a model
    // sitting exactly on a stability-loss crossing) is fine.
    const EquilibriumSet eq = equilibria(m);
    if (eq.boundary_degenerate)
        throw DegenerateError("permanence: " + eq.degeneracy_note);

    // Method 1: an attracting boundary fixed point is decisive.
    const FixedPoint* boundary_attractor = nullptr;
    for (const FixedPoint& fp : eq.axial)
        if (fp.local_type == LocalType::Attractor) boundary_attractor = &fp;
    for (const FixedPoint& fp : eq.planar)
        if (fp.local_type == LocalType::Attractor) boundary_attractor = &fp;
    if (boundary_attractor)
        out.cross_checks.push_back("boundary attractor present -> Impermanent");

    // Method 2: cycle criterion, when the boundary cycle exists.
    std::optional<Verdict> cycle_verdict;
    if (m.n() == 3) {
        RhoReport report = rho(m);
        if (report.cycle_present) {
            if (std::abs(report.rho) <= kRhoBand) {
                out.warnings.push_back("cycle criterion inside the zero band");
                out.cross_checks.push_back("cycle criterion -> Undetermined");
            } else {
                cycle_verdict = report.rho > 0.0 ? Verdict::Permanent
                                                 : Verdict::Impermanent;
                out.cross_checks.push_back(std::string("cycle criterion -> ") +
                                           verdict_name(*cycle_verdict));
            }
        }
        out.rho_report = std::move(report);
    }

    // Method 3: LP certificates, both directions.
    std::optional<LiapunovCertificate> perm_cert = liapunov_lp(m, false);
    std::optional<LiapunovCertificate> imp_cert = liapunov_lp(m, true);
    if (perm_cert)
        out.cross_checks.push_back("average-Liapunov certificate -> Permanent");
    if (imp_cert)
        out.cross_checks.push_back("average-Liapunov certificate -> Impermanent");
    if (perm_cert && imp_cert)
        throw ContradictionError("permanence: LP certified both directions");

    // Class rule: boundary classes whose interior index forces permanence.
    std::optional<Verdict> class_verdict;
    if (m.n() == 3) {
        try {
            const ClassId id = classify3(m);
            if (id.catalog_number == 29 || id.catalog_number == 31 ||
                id.catalog_number == 33) {
                class_verdict = Verdict::Permanent;
                out.cross_checks.push_back("class rule -> Permanent");
            }
        } catch (const DegenerateError&) {
            // class boundary: no class-rule evidence
        }
    }

    // Collect decided methods and check agreement.
    std::vector<std::pair<Verdict, EvidenceKind>> decided;
    if (boundary_attractor)
        decided.emplace_back(Verdict::Impermanent, EvidenceKind::BoundaryAttractor);
    if (cycle_verdict)
        decided.emplace_back(*cycle_verdict, EvidenceKind::CycleCriterion);
    if (perm_cert)
        decided.emplace_back(Verdict::Permanent, EvidenceKind::AverageLiapunov);
    if (imp_cert)
        decided.emplace_back(Verdict::Impermanent, EvidenceKind::AverageLiapunov);
    if (class_verdict)
        decided.emplace_back(*class_verdict, EvidenceKind::ClassRule);

    for (size_t i = 1; i < decided.size(); ++i)
        if (decided[i].first != decided[0].first)
            throw ContradictionError(
                std::string("permanence: ") + evidence_name(decided[0].second) +
                " says " + verdict_name(decided[0].first) + " but " +
                evidence_name(decided[i].second) + " says " +
                verdict_name(decided[i].first));

    if (decided.empty()) {
        out.verdict = Verdict::Undetermined;
        out.evidence = EvidenceKind::None;
    } else {
        out.verdict = decided[0].first;
        out.evidence = decided[0].second;
        if (out.evidence == EvidenceKind::ClassRule && !perm_cert)
            out.warnings.push_back(
                "class rule decided; no average-Liapunov certificate found");
    }
    if (perm_cert) out.certificate = std::move(perm_cert);
    else if (imp_cert) out.certificate = std::move(imp_cert);
    return out;
}

} // namespace kcm
