// SPDX-License-Identifier: MIT

#include <cmath>

#include <doctest.h>

#include "fixtures.hpp"
#include "kcm/errors.hpp"
#include "kcm/model.hpp"
#include "kcm/rng.hpp"

using namespace kcm;

TEST_CASE("make_model validation") {
    std::vector<SpeciesLaw> laws(2, {GrowthKind::leslie_gower(), 1.0});
    Mat u(2, 2);
    u.a = {1.0, 0.5, 0.5, 1.0};
    CHECK_NOTHROW(make_model(laws, u));

    Mat bad = u;
    bad(0, 1) = 0.0;  // coefficients must be positive
    CHECK_THROWS_AS(make_model(laws, bad), DomainError);
    bad(0, 1) = -0.5;
    CHECK_THROWS_AS(make_model(laws, bad), DomainError);

    CHECK_THROWS_AS(make_model(laws, Mat(3, 3)), DomainError);  // size mismatch

    auto bad_r = laws;
    bad_r[0].r = 0.0;
    CHECK_THROWS_AS(make_model(bad_r, u), DomainError);

    auto bad_param = laws;
    bad_param[1].kind = {GrowthTag::AtkinsonAllen, 1.5};
    CHECK_THROWS_AS(make_model(bad_param, u), DomainError);

    CHECK_THROWS_AS(make_model({}, Mat(0, 0)), DomainError);
}

TEST_CASE("load matrix A = diag(r) U") {
    const Model m = fixtures::lg1(0.25);
    const Mat a = m.A();
    CHECK(a(0, 1) == 1.25);
    CHECK(a(1, 0) == 0.25 * 0.5);
    CHECK(a(1, 2) == 0.25 * 1.5);
    CHECK(a(2, 0) == 1.5);
}

TEST_CASE("evaluate: interior fixed point is bitwise fixed") {
    // The row sums U p are exactly 1 in floating point for this matrix, and
    // the growth laws return exactly 1 at break-even, so T(p) == p bitwise.
    const Model m = fixtures::lg1(0.17);
    const Vec p = fixtures::lg1_p();
    CHECK(evaluate(m, p) == p);

    const Model c2 = fixtures::cgaa2(0.75);
    // (U p)_i = 1 exactly: each row of 7 U sums to 7 in integers.
    const Vec q = fixtures::cgaa2_p();
    const Vec tq = evaluate(c2, q);
    CHECK(tq[0] == doctest::Approx(q[0]).epsilon(1e-15));
    CHECK(tq[1] == doctest::Approx(q[1]).epsilon(1e-15));
    CHECK(tq[2] == doctest::Approx(q[2]).epsilon(1e-15));
}

TEST_CASE("evaluate: axioms and validation") {
    const Model m = fixtures::class33();
    // Origin is fixed.
    CHECK(evaluate(m, Vec(3, 0.0)) == Vec(3, 0.0));
    // Axial points are fixed (mu_ii = 1 so q_i = e_i exactly).
    CHECK(evaluate(m, {1.0, 0.0, 0.0}) == Vec{1.0, 0.0, 0.0});
    // Coordinate planes are invariant.
    const Vec y = evaluate(m, {0.3, 0.0, 0.2});
    CHECK(y[1] == 0.0);
    CHECK(y[0] > 0.0);
    CHECK(y[2] > 0.0);

    CHECK_THROWS_AS(evaluate(m, {0.1, -0.2, 0.1}), DomainError);
    CHECK_THROWS_AS(evaluate(m, {0.1, 0.2}), DomainError);
    CHECK_THROWS_AS(evaluate(m, {0.1, std::nan(""), 0.1}), DomainError);
}

TEST_CASE("jacobian matches finite differences of the map") {
    const std::vector<Model> models = {
        fixtures::lg1(0.2),       fixtures::cgaa2(0.79), fixtures::mix1(0.05),
        fixtures::ricker2(0.01),  fixtures::class33(),
    };
    SplitMix64 rng(11);
    for (const Model& m : models) {
        for (int trial = 0; trial < 20; ++trial) {
            Vec x(3);
            for (double& v : x) v = rng.uniform(0.05, 0.6);
            const Mat j = jacobian(m, x);
            for (int col = 0; col < 3; ++col) {
                const double h = 1e-6 * (1.0 + x[col]);
                Vec xp = x, xm = x;
                xp[col] += h;
                xm[col] -= h;
                const Vec fp = evaluate(m, xp), fm = evaluate(m, xm);
                for (int row = 0; row < 3; ++row) {
                    const double fd = (fp[row] - fm[row]) / (2.0 * h);
                    CHECK(j(row, col) ==
                          doctest::Approx(fd).epsilon(1e-6).scale(1.0));
                }
            }
        }
    }
}

TEST_CASE("jacobian on the boundary avoids the diverging slope") {
    // SigmoidRatio with s < 1 has df/dz = -inf at z = 0; at a state with
    // x_i = 0 the Jacobian must still be finite (the slope term vanishes
    // with x_i).
    std::vector<SpeciesLaw> laws(3, {GrowthKind::sigmoid_ratio(0.5), 1.0});
    Mat u(3, 3);
    u.a = {1.0, 0.5, 0.5, 0.5, 1.0, 0.5, 0.5, 0.5, 1.0};
    const Model m = make_model(laws, u);
    const Mat j = jacobian(m, {0.0, 0.0, 0.0});
    for (double v : j.a) CHECK(std::isfinite(v));
    // Diagonal equals the zero-load growth factor.
    CHECK(j(0, 0) == doctest::Approx(growth(laws[0].kind, 0.0, 1.0)));
}

TEST_CASE("admissibility: monotone-flux laws pass unconditionally") {
    const AdmissibilityReport rep = validate(fixtures::mix1(0.05));
    CHECK(rep.carries_simplex);
    for (const AdmissibilityCheck& c : rep.checks) CHECK(c.pass);
}

TEST_CASE("admissibility: Ricker rate bounds") {
    SUBCASE("admissible rates pass with the right margins") {
        const AdmissibilityReport rep = validate(fixtures::ricker_chenciner());
        CHECK(rep.carries_simplex);
        REQUIRE(rep.checks.size() == 3);
        // Species 1: bound 1/(1+4+3/4) = 4/23, margin 4/23 - 0.1.
        CHECK(rep.checks[0].pass);
        CHECK(rep.checks[0].margin ==
              doctest::Approx(4.0 / 23 - 0.1).epsilon(1e-12));
    }
    SUBCASE("an overcompensating rate fails both branches") {
        std::vector<SpeciesLaw> laws(3, {GrowthKind::ricker(), 1.0});
        laws[0].r = 5.0;  // way past either bound for the matrix below
        Mat u(3, 3);
        u.a = {1.0, 0.5, 0.5, 0.5, 1.0, 0.5, 0.5, 0.5, 1.0};
        const AdmissibilityReport rep = validate(make_model(laws, u));
        CHECK_FALSE(rep.carries_simplex);
        CHECK_FALSE(rep.checks[0].pass);
    }
}
