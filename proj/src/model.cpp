// SPDX-License-Identifier: MIT

#include "kcm/model.hpp"

#include <cmath>
#include <limits>

#include "kcm/errors.hpp"

namespace kcm {

Mat Model::A() const {
    Mat a = U;
    for (int i = 0; i < n(); ++i)
        for (int j = 0; j < n(); ++j) a(i, j) = laws[i].r * U(i, j);
    return a;
}

Model make_model(std::vector<SpeciesLaw> laws, Mat U) {
    const int n = static_cast<int>(laws.size());
    if (n < 1) throw DomainError("model: need at least one species");
    if (U.rows != n || U.cols != n)
        throw DomainError("model: U must be n x n with n = number of species");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(U(i, j) > 0.0) || !std::isfinite(U(i, j)))
                throw DomainError("model: competition coefficients must be positive");
    for (const SpeciesLaw& law : laws) {
        if (!(law.r > 0.0) || !std::isfinite(law.r))
            throw DomainError("model: intrinsic rates must be positive");
        check_growth_param(law.kind);
    }
    return Model{std::move(laws), std::move(U)};
}

namespace {

void check_state(const Model& m, const Vec& x) {
    if (static_cast<int>(x.size()) != m.n())
        throw DomainError("state dimension does not match model");
    for (double v : x)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw DomainError("state must lie in the closed positive cone");
}

} // namespace

Vec evaluate(const Model& m, const Vec& x) {
    check_state(m, x);
    const Vec load = mat_vec(m.U, x);
    Vec y(m.n());
    for (int i = 0; i < m.n(); ++i) {
        const double r = m.laws[i].r;
        y[i] = x[i] * growth(m.laws[i].kind, r * load[i], r);
    }
    return y;
}

Mat jacobian(const Model& m, const Vec& x) {
    check_state(m, x);
    const int n = m.n();
    const Vec load = mat_vec(m.U, x);
    Mat J(n, n);
    for (int i = 0; i < n; ++i) {
        const double r = m.laws[i].r;
        const double z = r * load[i];
        J(i, i) = growth(m.laws[i].kind, z, r);
        if (x[i] == 0.0) continue;  // slope term vanishes with x_i; skipping
                                    // it avoids 0 * inf on the boundary
        const double slope = growth_slope(m.laws[i].kind, z, r);
        for (int j = 0; j < n; ++j) J(i, j) += x[i] * slope * r * m.U(i, j);
    }
    return J;
}

AdmissibilityReport validate(const Model& m) {
    AdmissibilityReport report;
    report.carries_simplex = true;
    const int n = m.n();
    for (int i = 0; i < n; ++i) {
        AdmissibilityCheck check;
        const std::string who = "species " + std::to_string(i + 1);
        if (growth_has_monotone_flux(m.laws[i].kind.tag)) {
            check.condition = who + ": monotone flux (law property)";
            check.pass = true;
            check.margin = std::numeric_limits<double>::infinity();
        } else {
            // Ricker: overcompensation must stay weak enough; either row
            // bound suffices.
            double row = 0.0, normalized = 0.0;
            for (int j = 0; j < n; ++j) {
                row += m.U(i, j);
                normalized += m.U(i, j) / m.U(j, j);
            }
            const double bound_a = m.U(i, i) / row;
            const double bound_b = 1.0 / normalized;
            const double margin_a = bound_a - m.laws[i].r;
            const double margin_b = bound_b - m.laws[i].r;
            if (margin_a > 0.0 && margin_a >= margin_b) {
                check.condition = who + ": rate below diagonal/row-sum bound";
                check.pass = true;
                check.margin = margin_a;
            } else if (margin_b > 0.0) {
                check.condition = who + ": rate below normalized row-sum bound";
                check.pass = true;
                check.margin = margin_b;
            } else {
                check.condition = who + ": rate exceeds both overcompensation bounds";
                check.pass = false;
                check.margin = std::max(margin_a, margin_b);
            }
        }
        report.carries_simplex = report.carries_simplex && check.pass;
        report.checks.push_back(std::move(check));
    }
    return report;
}

} // namespace kcm
