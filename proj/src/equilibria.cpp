// SPDX-License-Identifier: MIT

#include "kcm/equilibria.hpp"

#include <cmath>
#include <string>

#include "kcm/errors.hpp"

namespace kcm {

namespace {

constexpr double kHyperbolicBand = 1e-9;  // |modulus - 1| below this: not hyperbolic
constexpr double kSignBand      = 1e-9;   // zero band for sign quantities

// Largest competition coefficient, used to scale zero bands.
double u_scale(const Model& m) {
    double s = 0.0;
    for (double v : m.U.a) s = std::max(s, std::abs(v));
    return s;
}

// Classify from the moduli of the given spectrum; index from det(I - DT).
void fill_type_and_index(FixedPoint& fp, const Model& m) {
    bool band = false, above = false, below = false;
    auto consider = [&](double modulus) {
        if (std::abs(modulus - 1.0) <= kHyperbolicBand) band = true;
        else if (modulus > 1.0) above = true;
        else below = true;
    };
    for (const Cplx& e : fp.internal_eigs) consider(std::abs(e));
    for (const auto& [j, f] : fp.external_eigs) consider(std::abs(f));

    if (band) {
        fp.local_type = LocalType::NonHyperbolic;
        fp.index = 0;
        return;
    }
    fp.local_type = above ? (below ? LocalType::Saddle : LocalType::Repeller)
                          : LocalType::Attractor;

    const Mat d = Mat::identity(m.n()) - jacobian(m, fp.coords);
    const double dd = det(d);
    fp.index = (dd > 0.0) ? 1 : (dd < 0.0 ? -1 : 0);
}

} // namespace

const char* local_type_name(LocalType t) {
    switch (t) {
        case LocalType::Repeller:      return "Repeller";
        case LocalType::Attractor:     return "Attractor";
        case LocalType::Saddle:        return "Saddle";
        case LocalType::NonHyperbolic: return "NonHyperbolic";
    }
    return "?";
}

GammaTable gamma_table(const Model& m) {
    const int n = m.n();
    GammaTable t;
    t.n = n;
    t.g = Mat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) t.g(i, j) = m.U(i, i) - m.U(j, i);
    return t;
}

FixedPoint origin_point(const Model& m) {
    const int n = m.n();
    FixedPoint fp;
    fp.coords = Vec(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const double r = m.laws[i].r;
        fp.external_eigs.emplace_back(i, growth(m.laws[i].kind, 0.0, r));
    }
    fill_type_and_index(fp, m);
    return fp;
}

std::vector<FixedPoint> axial_points(const Model& m) {
    const int n = m.n();
    std::vector<FixedPoint> points;
    for (int i = 0; i < n; ++i) {
        FixedPoint fp;
        fp.support = {i};
        fp.coords = Vec(n, 0.0);
        fp.coords[i] = 1.0 / m.U(i, i);
        const double ri = m.laws[i].r;
        // DT_ii = F_i + x_i f_i' r_i mu_ii = 1 + r_i f_i'(r_i, r_i)
        fp.internal_eigs = {Cplx(1.0 + ri * growth_slope(m.laws[i].kind, ri, ri), 0.0)};
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const double rj = m.laws[j].r;
            const double load = m.U(j, i) / m.U(i, i);  // (U q_i)_j
            fp.external_eigs.emplace_back(j, growth(m.laws[j].kind, rj * load, rj));
        }
        fill_type_and_index(fp, m);
        points.push_back(std::move(fp));
    }
    return points;
}

std::vector<FixedPoint> planar_points(const Model& m) {
    const int n = m.n();
    if (n != 3) return {};
    const GammaTable gt = gamma_table(m);
    const double scale = u_scale(m);

    std::vector<FixedPoint> points;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            if (!gt.pair_has_planar(i, j)) continue;
            const int k = 3 - i - j;

            const double det2 = m.U(i, i) * m.U(j, j) - m.U(i, j) * m.U(j, i);
            if (std::abs(det2) <= kSignBand * scale * scale)
                throw DegenerateError("planar point: pair system singular");
            FixedPoint fp;
            fp.support = {i, j};
            fp.coords = Vec(3, 0.0);
            fp.coords[i] = (m.U(j, j) - m.U(i, j)) / det2;
            fp.coords[j] = (m.U(i, i) - m.U(j, i)) / det2;
            if (!(fp.coords[i] > 0.0 && fp.coords[j] > 0.0))
                throw DegenerateError("planar point: non-positive coordinates");

            const double load_k = m.U(k, i) * fp.coords[i] + m.U(k, j) * fp.coords[j];
            if (std::abs(load_k - 1.0) <= kSignBand)
                throw DegenerateError("planar point: transverse growth factor on the unit band");

            const Mat J = jacobian(m, fp.coords);
            Mat block(2, 2);
            block(0, 0) = J(i, i); block(0, 1) = J(i, j);
            block(1, 0) = J(j, i); block(1, 1) = J(j, j);
            fp.internal_eigs = eigenvalues(block);

            const double rk = m.laws[k].r;
            fp.external_eigs.emplace_back(k, growth(m.laws[k].kind, rk * load_k, rk));

            fill_type_and_index(fp, m);
            points.push_back(std::move(fp));
        }
    }
    return points;
}

std::optional<FixedPoint> positive_point(const Model& m) {
    const int n = m.n();
    Vec p;
    try {
        p = solve(m.U, Vec(n, 1.0));
    } catch (const DegenerateError&) {
        throw DegenerateError("positive point: U is singular");
    }
    for (double v : p)
        if (!(v > 0.0)) return std::nullopt;

    FixedPoint fp;
    fp.support.resize(n);
    for (int i = 0; i < n; ++i) fp.support[i] = i;
    fp.coords = std::move(p);
    fp.internal_eigs = eigenvalues(jacobian(m, fp.coords));
    fill_type_and_index(fp, m);
    return fp;
}

EquilibriumSet equilibria(const Model& m) {
    EquilibriumSet set;
    set.axial = axial_points(m);
    try {
        set.planar = planar_points(m);
    } catch (const DegenerateError& e) {
        set.degenerate = set.boundary_degenerate = true;
        set.degeneracy_note = e.what();
    }
    try {
        set.positive = positive_point(m);
    } catch (const DegenerateError& e) {
        set.degenerate = true;
        set.degeneracy_note = e.what();
    }
    for (const FixedPoint& fp : set.axial)
        if (fp.local_type == LocalType::NonHyperbolic)
            set.degenerate = set.boundary_degenerate = true;
    for (const FixedPoint& fp : set.planar)
        if (fp.local_type == LocalType::NonHyperbolic)
            set.degenerate = set.boundary_degenerate = true;
    if (set.positive && set.positive->local_type == LocalType::NonHyperbolic)
        set.degenerate = true;
    if (set.boundary_degenerate && set.degeneracy_note.empty())
        set.degeneracy_note = "a boundary fixed point is non-hyperbolic";
    return set;
}

int index_formula_check(const Model& m) {
    if (m.n() != 3) throw DomainError("index check: 3-species models only");
    const GammaTable gt = gamma_table(m);
    const double tol = kSignBand * u_scale(m);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && std::abs(gt.gamma(i, j)) <= tol)
                throw DegenerateError("index check: gamma in the zero band");

    auto eig_index = [&](const FixedPoint& fp) {
        const double dd = det(Mat::identity(3) - jacobian(m, fp.coords));
        if (std::abs(dd) <= 1e-12)
            throw DegenerateError("index check: fixed point not hyperbolic");
        return dd > 0.0 ? 1 : -1;
    };

    int violations = 0;
    int sum = 0;

    // Axial: predicted +1 when both invasion signs agree, -1 otherwise.
    for (int i = 0; i < 3; ++i) {
        double ga = 0.0, gb = 0.0;
        for (int j = 0, slot = 0; j < 3; ++j)
            if (j != i) (slot++ == 0 ? ga : gb) = gt.gamma(i, j);
        const int pred = (ga > 0.0) == (gb > 0.0) ? 1 : -1;
        sum += pred;
        if (pred != eig_index(axial_points(m)[i])) ++violations;
    }

    // Planar: predicted from (pair sign, transverse sign); weighted twice.
    for (const FixedPoint& v : planar_points(m)) {
        const int i = v.support[0], j = v.support[1];
        const int k = 3 - i - j;
        const bool both_plus = gt.gamma(i, j) > 0.0;
        const double load_k = m.U(k, i) * v.coords[i] + m.U(k, j) * v.coords[j];
        const bool transverse_attracts = load_k > 1.0;  // F_k(v) < 1
        const int pred = (both_plus == transverse_attracts) ? 1 : -1;
        sum += 2 * pred;
        if (pred != eig_index(v)) ++violations;
    }

    if (sum != -3 && sum != 1 && sum != 5) ++violations;

    // Interior: index must be sign(det U) and also (1 - boundary sum) / 4.
    const std::optional<FixedPoint> p = positive_point(m);
    const int from_sum = (1 - sum) / 4;
    if (p) {
        const int ind = eig_index(*p);
        const double du = det(m.U);
        const int pred = du > 0.0 ? 1 : -1;
        if (ind != pred) ++violations;
        if (ind != from_sum) ++violations;
    } else {
        if (from_sum != 0) ++violations;
    }
    return violations;
}

} // namespace kcm
