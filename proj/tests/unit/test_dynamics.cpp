// SPDX-License-Identifier: MIT

#include <algorithm>
#include <cmath>
#include <complex>

#include <doctest.h>

#include "fixtures.hpp"
#include "kcm/dynamics.hpp"
#include "kcm/errors.hpp"
#include "kcm/rng.hpp"

using namespace kcm;

TEST_CASE("parameter references parse") {
    auto r2 = parse_param_ref("r2");
    REQUIRE(r2.has_value());
    CHECK(r2->kind == ParamRef::Kind::Rate);
    CHECK(r2->species == 1);

    auto c3 = parse_param_ref("c3");
    REQUIRE(c3.has_value());
    CHECK(c3->kind == ParamRef::Kind::Shape);
    CHECK(c3->species == 2);

    auto s1 = parse_param_ref("s1");
    REQUIRE(s1.has_value());
    CHECK(s1->kind == ParamRef::Kind::Shape);
    CHECK(s1->species == 0);

    CHECK_FALSE(parse_param_ref("x1").has_value());
    CHECK_FALSE(parse_param_ref("r0").has_value());
    CHECK_FALSE(parse_param_ref("r").has_value());
    CHECK_FALSE(parse_param_ref("c1x").has_value());
    CHECK_FALSE(parse_param_ref("").has_value());
}

TEST_CASE("with_param validates") {
    const Model m = fixtures::mix1();
    const Model m2 = with_param(m, {ParamRef::Kind::Rate, 1}, 0.07);
    CHECK(m2.laws[1].r == 0.07);
    CHECK(m2.laws[0].r == m.laws[0].r);

    const Model m3 = with_param(m, {ParamRef::Kind::Shape, 1}, 0.5);
    CHECK(m3.laws[1].kind.param == 0.5);

    // Species 1 is LeslieGower: it has no shape parameter.
    CHECK_THROWS_AS(with_param(m, {ParamRef::Kind::Shape, 0}, 0.5), DomainError);
    CHECK_THROWS_AS(with_param(m, {ParamRef::Kind::Rate, 1}, -1.0), DomainError);
    CHECK_THROWS_AS(with_param(m, {ParamRef::Kind::Shape, 1}, 1.5), DomainError);
    CHECK_THROWS_AS(with_param(m, {ParamRef::Kind::Rate, 5}, 0.1), DomainError);
}

TEST_CASE("orbit settles onto the stable interior point") {
    const Model m = fixtures::lg1(0.1);
    const SimulationResult res = simulate(m, {0.3, 0.4, 0.3}, 20000);
    CHECK(res.omega.kind == OmegaKind::FixedPoint);
    REQUIRE(res.omega.fixed_point.has_value());
    CHECK(res.omega.fixed_point->support == std::vector<int>{0, 1, 2});
    const Vec p = fixtures::lg1_p();
    const Vec& last = res.orbit.points.back();
    for (int i = 0; i < 3; ++i)
        CHECK(last[i] == doctest::Approx(p[i]).epsilon(1e-6));
}

TEST_CASE("fast convergence stops the orbit early") {
    // The symmetric model contracts hard; the orbit parks on the interior
    // point long before the step budget and the tail window shrinks to the
    // settled plateau.
    const SimulationResult res =
        simulate(fixtures::class33(), {0.9, 0.05, 0.31}, 100000);
    CHECK(res.orbit.truncated);
    CHECK(static_cast<int>(res.orbit.points.size()) < 1000);
    CHECK(res.omega.kind == OmegaKind::FixedPoint);
    REQUIRE(res.omega.fixed_point.has_value());
    CHECK(res.omega.fixed_point->support == std::vector<int>{0, 1, 2});
    const Vec p = fixtures::class33_p();
    for (int i = 0; i < 3; ++i)
        CHECK(res.orbit.points.back()[i] == doctest::Approx(p[i]).epsilon(1e-8));
}

TEST_CASE("orbit lands on the invariant curve past the crossing") {
    const Model m = fixtures::lg1(0.2);
    const SimulationResult res = simulate(m, {1.0, 0.0667, 0.0667}, 20000);
    CHECK(res.omega.kind == OmegaKind::InvariantCurve);
    CHECK(res.omega.min_boundary_distance > 1e-6);
    CHECK(res.omega.tail_diameter > 1e-4);
    CHECK_FALSE(res.orbit.truncated);
}

TEST_CASE("orbit creeps along the boundary cycle") {
    // At this parameter the cycle attracts (rho < 0); a start very close to
    // the boundary spirals outward toward it, visiting each axial
    // neighborhood in turn.
    const Model m = fixtures::cgaa2(0.79);
    const SimulationResult res =
        simulate(m, {0.0002, 0.023, 0.486}, 40000);
    CHECK(res.omega.kind == OmegaKind::HeteroclinicLike);
    CHECK(res.omega.min_boundary_distance < 1e-6);
}

TEST_CASE("interior start at the same parameter finds the curve") {
    const Model m = fixtures::cgaa2(0.79);
    const SimulationResult res = simulate(m, {0.04, 0.12, 0.36}, 20000);
    CHECK(res.omega.kind == OmegaKind::InvariantCurve);
}

TEST_CASE("simulate validates the start point") {
    const Model m = fixtures::lg1();
    CHECK_THROWS_AS(simulate(m, {0.1, -0.1, 0.1}, 100), DomainError);
    CHECK_THROWS_AS(simulate(m, {0.1, 0.1}, 100), DomainError);
    CHECK_THROWS_AS(simulate(m, {0.1, 0.2, 0.3}, 0), DomainError);
}

TEST_CASE("simplex sample is unordered and inside the axial box") {
    const Model m = fixtures::lg1(0.1);
    const std::vector<Vec> pts = sample_simplex(m, 400, 200);
    REQUIRE(static_cast<int>(pts.size()) == 400);
    for (const Vec& x : pts) {
        for (int i = 0; i < 3; ++i) {
            CHECK(x[i] >= 0.0);
            CHECK(x[i] <= 1.0 / m.U(i, i) + 1e-12);
        }
    }
    // No two sampled points may be componentwise ordered: they lie on a
    // decreasing surface.
    int ordered_pairs = 0;
    const double slack = 1e-9;
    for (std::size_t a = 0; a < pts.size(); ++a) {
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            const bool a_le_b = pts[a][0] <= pts[b][0] + slack &&
                                pts[a][1] <= pts[b][1] + slack &&
                                pts[a][2] <= pts[b][2] + slack;
            const bool b_le_a = pts[b][0] <= pts[a][0] + slack &&
                                pts[b][1] <= pts[a][1] + slack &&
                                pts[b][2] <= pts[a][2] + slack;
            if (a_le_b || b_le_a) ++ordered_pairs;
        }
    }
    CHECK(ordered_pairs == 0);

    // Execution policy cannot change the sample.
    const std::vector<Vec> par = sample_simplex(m, 400, 200, Exec::Parallel);
    REQUIRE(par.size() == pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) CHECK(par[k] == pts[k]);
}

TEST_CASE("two-species sampling traces the coexistence curve") {
    const std::vector<Vec> pts = sample_simplex(fixtures::two_coexist(), 50, 300);
    REQUIRE(static_cast<int>(pts.size()) == 50);
    for (const Vec& x : pts) {
        CHECK(x.size() == 2);
        CHECK(x[0] >= 0.0);
        CHECK(x[1] >= 0.0);
    }
}

TEST_CASE("eigenvalue scan brackets and bisects the crossing") {
    const Model m = fixtures::lg1(0.1);
    const ScanResult scan =
        ns_scan(m, {ParamRef::Kind::Rate, 1}, 0.05, 0.3, 200);
    CHECK(scan.param_name == "r2");
    CHECK(static_cast<int>(scan.grid.size()) == 200);
    REQUIRE(scan.crossing.has_value());
    CHECK(std::abs(scan.crossing->param - fixtures::lg1_crossing()) < 1e-8);
    CHECK(scan.crossing->modulus_residual <= 1e-10);
    CHECK(scan.crossing->eigenvalue.imag() > 0.0);
    CHECK(std::abs(std::abs(scan.crossing->eigenvalue) - 1.0) < 1e-9);

    // Below the crossing the interior point is stable on the whole grid.
    const ScanResult low =
        ns_scan(m, {ParamRef::Kind::Rate, 1}, 0.01, 0.05, 50);
    CHECK_FALSE(low.crossing.has_value());
    for (const ScanPoint& pt : low.grid) CHECK(pt.max_modulus < 1.0);
}

TEST_CASE("scan grid is policy independent") {
    const Model m = fixtures::lg1(0.1);
    const ScanResult a = ns_scan(m, {ParamRef::Kind::Rate, 1}, 0.05, 0.3, 64);
    const ScanResult b =
        ns_scan(m, {ParamRef::Kind::Rate, 1}, 0.05, 0.3, 64, Exec::Parallel);
    REQUIRE(a.grid.size() == b.grid.size());
    for (std::size_t k = 0; k < a.grid.size(); ++k) {
        CHECK(a.grid[k].param == b.grid[k].param);
        CHECK(a.grid[k].eigs == b.grid[k].eigs);  // bitwise
    }
    REQUIRE(a.crossing.has_value());
    REQUIRE(b.crossing.has_value());
    CHECK(a.crossing->param == b.crossing->param);
}

TEST_CASE("scan rejects models without an interior point") {
    CHECK_THROWS_AS(ns_scan(fixtures::boundary_attractor(),
                            {ParamRef::Kind::Rate, 0}, 0.1, 0.9, 16),
                    DegenerateError);
}

TEST_CASE("first Lyapunov coefficient at the crossing") {
    const Model m = fixtures::lg1(0.1);
    const ScanResult scan =
        ns_scan_with_l1(m, {ParamRef::Kind::Rate, 1}, 0.05, 0.3, 200);
    REQUIRE(scan.crossing.has_value());
    REQUIRE(scan.l1.has_value());
    CHECK(*scan.l1 < 0.0);
    CHECK(std::abs(*scan.l1 - fixtures::kLg1L1) <
          0.10 * std::abs(fixtures::kLg1L1));
}

TEST_CASE("l1 rejects a non-crossing eigenvalue") {
    const Model m = fixtures::lg1(0.1);
    // A real eigenvalue has no rotation: the normal form does not apply.
    CHECK_THROWS_AS(lyapunov_l1(m, Cplx(1.0, 0.0)), NumericalError);
}

TEST_CASE("l1 needs an interior fixed point") {
    CHECK_THROWS_AS(lyapunov_l1(fixtures::boundary_attractor(), Cplx(0.4, 0.9)),
                    DegenerateError);
}
