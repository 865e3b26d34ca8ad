// SPDX-License-Identifier: MIT

#include <cmath>

#include <doctest.h>

#include "fixtures.hpp"
#include "kcm/equilibria.hpp"
#include "kcm/errors.hpp"

using namespace kcm;

TEST_CASE("gamma table of the cyclic matrix") {
    const GammaTable g = gamma_table(fixtures::lg1());
    CHECK(g.gamma(0, 1) == 0.5);
    CHECK(g.gamma(1, 0) == -0.25);
    CHECK(g.gamma(0, 2) == -0.5);
    CHECK(g.gamma(2, 0) == 0.5);
    CHECK(g.gamma(1, 2) == 0.25);
    CHECK(g.gamma(2, 1) == -0.5);
    // Every pair is mixed-sign: the cycle class has no planar points.
    CHECK_FALSE(g.pair_has_planar(0, 1));
    CHECK_FALSE(g.pair_has_planar(0, 2));
    CHECK_FALSE(g.pair_has_planar(1, 2));
    CHECK(planar_points(fixtures::lg1()).empty());
}

TEST_CASE("origin and axial points") {
    const Model m = fixtures::lg1(0.1);
    const FixedPoint o = origin_point(m);
    CHECK(o.support.empty());
    CHECK(o.coords == Vec(3, 0.0));
    CHECK(o.local_type == LocalType::Repeller);
    CHECK(o.index == -1);  // sign prod(1 - F_i(0)) = (-1)^3
    for (const auto& e : o.external_eigs) CHECK(e.second > 1.0);

    const std::vector<FixedPoint> ax = axial_points(m);
    REQUIRE(ax.size() == 3);
    for (int i = 0; i < 3; ++i) {
        REQUIRE(ax[i].support == std::vector<int>{i});
        CHECK(ax[i].coords[i] == doctest::Approx(1.0 / m.U(i, i)));
        REQUIRE(ax[i].internal_eigs.size() == 1);
        const double lam = ax[i].internal_eigs[0].real();
        CHECK(lam > 0.0);
        CHECK(lam < 1.0);  // 1 + r f'(r, r) always lands in (0, 1)
        // External growth factors obey sign(F_j - 1) = sign(gamma_ij).
        const GammaTable g = gamma_table(m);
        for (const auto& [j, f] : ax[i].external_eigs) {
            CHECK(((f > 1.0) == (g.gamma(i, j) > 0.0)));
        }
    }
}

TEST_CASE("planar point of the mixed model") {
    const Model m = fixtures::mix1();
    const std::vector<FixedPoint> pl = planar_points(m);
    REQUIRE(pl.size() == 1);
    const FixedPoint& v = pl[0];
    CHECK(v.support == std::vector<int>{0, 1});
    CHECK(v.coords[0] == doctest::Approx(2.0 / 3).epsilon(1e-14));
    CHECK(v.coords[1] == doctest::Approx(2.0 / 3).epsilon(1e-14));
    CHECK(v.coords[2] == 0.0);
    REQUIRE(v.internal_eigs.size() == 2);
    for (const Cplx& lam : v.internal_eigs) CHECK(std::abs(lam) < 1.0);
    // (U v)_3 = 8/9 < 1, so the third species invades: transverse repulsion.
    REQUIRE(v.external_eigs.size() == 1);
    CHECK(v.external_eigs[0].first == 2);
    CHECK(v.external_eigs[0].second > 1.0);
    CHECK(v.local_type == LocalType::Saddle);
}

TEST_CASE("interior point solves U p = 1 exactly") {
    const auto p1 = positive_point(fixtures::lg1());
    REQUIRE(p1.has_value());
    CHECK(p1->support == std::vector<int>{0, 1, 2});
    const Vec want1 = fixtures::lg1_p();
    for (int i = 0; i < 3; ++i)
        CHECK(p1->coords[i] == doctest::Approx(want1[i]).epsilon(1e-14));

    const auto p2 = positive_point(fixtures::mix1());
    REQUIRE(p2.has_value());
    const Vec want2 = fixtures::mix1_p();
    for (int i = 0; i < 3; ++i)
        CHECK(p2->coords[i] == doctest::Approx(want2[i]).epsilon(1e-14));
}

TEST_CASE("dominant species: axial attractor, no interior point") {
    const Model m = fixtures::boundary_attractor();
    CHECK_FALSE(positive_point(m).has_value());

    const EquilibriumSet eq = equilibria(m);
    CHECK_FALSE(eq.positive.has_value());
    CHECK(eq.axial[0].local_type == LocalType::Attractor);
    CHECK(eq.axial[0].index == 1);
    CHECK(eq.axial[1].local_type == LocalType::Saddle);
    CHECK(eq.axial[2].local_type == LocalType::Saddle);
    REQUIRE(eq.planar.size() == 1);
    CHECK(eq.planar[0].support == std::vector<int>{1, 2});
    CHECK(eq.planar[0].local_type == LocalType::Saddle);
    CHECK_FALSE(eq.degenerate);
}

TEST_CASE("interior stability flips across the crossing parameter") {
    const EquilibriumSet below = equilibria(fixtures::lg1(0.1));
    REQUIRE(below.positive.has_value());
    CHECK(below.positive->local_type == LocalType::Attractor);
    CHECK(below.positive->index == 1);
    CHECK_FALSE(below.degenerate);

    const EquilibriumSet above = equilibria(fixtures::lg1(0.2));
    REQUIRE(above.positive.has_value());
    CHECK(above.positive->local_type == LocalType::Saddle);

    // Exactly at the crossing the interior pair sits on the unit circle:
    // the set is flagged degenerate, but the boundary structure is fine,
    // so boundary-sensitive analyses may still proceed.
    const EquilibriumSet at = equilibria(fixtures::lg1(fixtures::lg1_crossing()));
    CHECK(at.degenerate);
    CHECK_FALSE(at.boundary_degenerate);
    REQUIRE(at.positive.has_value());
    CHECK(at.positive->local_type == LocalType::NonHyperbolic);
    CHECK(at.positive->index == 0);
}

TEST_CASE("index bookkeeping closes on the reference models") {
    CHECK(index_formula_check(fixtures::lg1(0.1)) == 0);
    CHECK(index_formula_check(fixtures::lg1(0.2)) == 0);
    CHECK(index_formula_check(fixtures::cgaa1()) == 0);
    CHECK(index_formula_check(fixtures::cgaa2()) == 0);
    CHECK(index_formula_check(fixtures::mix1()) == 0);
    CHECK(index_formula_check(fixtures::mix2()) == 0);
    CHECK(index_formula_check(fixtures::ricker2()) == 0);
    CHECK(index_formula_check(fixtures::ricker_chenciner()) == 0);
    CHECK(index_formula_check(fixtures::class33()) == 0);
    CHECK(index_formula_check(fixtures::boundary_attractor()) == 0);
}

TEST_CASE("index check refuses class-boundary models") {
    // mu_21 == mu_11 makes gamma_12 = 0: the invasion sign is undefined.
    std::vector<SpeciesLaw> laws(3, {GrowthKind::leslie_gower(), 1.0});
    Mat u(3, 3);
    u.a = {1.0, 1.25, 0.5, 1.0, 1.0, 1.5, 1.5, 0.75, 1.0};
    CHECK_THROWS_AS(index_formula_check(make_model(laws, u)), DegenerateError);
}
