// SPDX-License-Identifier: MIT

#include <algorithm>
#include <cmath>
#include <complex>

#include <doctest.h>

#include "kcm/errors.hpp"
#include "kcm/linalg.hpp"
#include "kcm/rng.hpp"

using namespace kcm;

namespace {

Mat mat3(double a, double b, double c, double d, double e, double f, double g,
         double h, double i) {
    Mat m(3, 3);
    m.a = {a, b, c, d, e, f, g, h, i};
    return m;
}

// Characteristic polynomial residual |det(M - lambda I)| via closed form.
double char_residual(const Mat& m, Cplx lambda) {
    const int n = m.rows;
    std::vector<Cplx> s(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            s[i * n + j] = Cplx(m(i, j), 0.0) - (i == j ? lambda : Cplx(0.0));
    if (n == 2) return std::abs(s[0] * s[3] - s[1] * s[2]);
    return std::abs(s[0] * (s[4] * s[8] - s[5] * s[7]) -
                    s[1] * (s[3] * s[8] - s[5] * s[6]) +
                    s[2] * (s[3] * s[7] - s[4] * s[6]));
}

} // namespace

TEST_CASE("matrix arithmetic") {
    const Mat id = Mat::identity(3);
    const Mat m = mat3(1, 2, 3, 4, 5, 6, 7, 8, 10);
    CHECK(m * id == m);
    CHECK(id * m == m);
    CHECK(m + m == 2.0 * m);
    CHECK(m - m == Mat(3, 3));
    const Mat t = transpose(m);
    CHECK(t(0, 1) == 4.0);
    CHECK(t(2, 0) == 3.0);
    const Vec v = mat_vec(m, {1.0, 0.0, -1.0});
    CHECK(v == Vec{-2.0, -2.0, -3.0});
}

TEST_CASE("determinant") {
    CHECK(det(Mat::identity(3)) == doctest::Approx(1.0));
    CHECK(det(mat3(1, 2, 3, 4, 5, 6, 7, 8, 10)) == doctest::Approx(-3.0));
    // Rank-deficient: exactly zero by the pivot cutoff.
    CHECK(det(mat3(1, 2, 3, 2, 4, 6, 1, 1, 1)) == 0.0);
    // Sign of a permutation-like matrix.
    CHECK(det(mat3(0, 1, 0, 0, 0, 1, 1, 0, 0)) == doctest::Approx(1.0));
}

TEST_CASE("linear solve") {
    const Mat u = mat3(1.0, 1.25, 0.5, 0.5, 1.0, 1.5, 1.5, 0.75, 1.0);
    const Vec p = solve(u, Vec(3, 1.0));
    CHECK(p[0] == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(p[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(p[2] == doctest::Approx(0.25).epsilon(1e-14));

    CHECK_THROWS_AS(solve(mat3(1, 2, 3, 2, 4, 6, 1, 1, 1), Vec(3, 1.0)),
                    DegenerateError);
}

TEST_CASE("complex solve") {
    // (M - i I) x = b with known x.
    std::vector<Cplx> m = {Cplx(2, -1), Cplx(1, 0), Cplx(0, 1), Cplx(3, -1)};
    const CVec want = {Cplx(1, 1), Cplx(-2, 0.5)};
    CVec b(2);
    b[0] = m[0] * want[0] + m[1] * want[1];
    b[1] = m[2] * want[0] + m[3] * want[1];
    const CVec got = csolve(m, b, 2);
    CHECK(std::abs(got[0] - want[0]) < 1e-14);
    CHECK(std::abs(got[1] - want[1]) < 1e-14);
}

TEST_CASE("eigenvalues: closed forms") {
    SUBCASE("2x2 rotation-scale has the exact conjugate pair") {
        Mat m(2, 2);
        m.a = {0.8, -0.6, 0.6, 0.8};
        const std::vector<Cplx> e = eigenvalues(m);
        REQUIRE(e.size() == 2);
        CHECK(e[0].real() == doctest::Approx(0.8).epsilon(1e-14));
        CHECK(e[0].imag() == doctest::Approx(0.6).epsilon(1e-14));
        // Conjugate symmetry must be exact, not approximate.
        CHECK(e[0].real() == e[1].real());
        CHECK(e[0].imag() == -e[1].imag());
    }
    SUBCASE("3x3 triangular gives the diagonal") {
        const std::vector<Cplx> e = eigenvalues(mat3(3, 1, 1, 0, 2, 1, 0, 0, 1));
        REQUIRE(e.size() == 3);
        CHECK(e[0].real() == doctest::Approx(3.0).epsilon(1e-13));
        CHECK(e[1].real() == doctest::Approx(2.0).epsilon(1e-13));
        CHECK(e[2].real() == doctest::Approx(1.0).epsilon(1e-13));
        for (const Cplx& x : e) CHECK(x.imag() == 0.0);
    }
    SUBCASE("companion matrix of (x-1)(x-2)(x-3)") {
        // x^3 - 6x^2 + 11x - 6
        const Mat c = mat3(0, 0, 6, 1, 0, -11, 0, 1, 6);
        const std::vector<Cplx> e = eigenvalues(c);
        CHECK(std::abs(e[0] - Cplx(3, 0)) < 1e-12);
        CHECK(std::abs(e[1] - Cplx(2, 0)) < 1e-12);
        CHECK(std::abs(e[2] - Cplx(1, 0)) < 1e-12);
    }
    SUBCASE("near-double real root stays accurate") {
        // (x-1)^2 (x-2) with a tiny split: roots 1-d, 1+d, 2.
        const double d = 1e-5;
        const double s = (1 - d) + (1 + d) + 2;
        const double q = (1 - d) * (1 + d) + (1 - d) * 2 + (1 + d) * 2;
        const double p = (1 - d) * (1 + d) * 2;
        const Mat c = mat3(0, 0, p, 1, 0, -q, 0, 1, s);
        const std::vector<Cplx> e = eigenvalues(c);
        for (const Cplx& x : e) CHECK(char_residual(c, x) < 1e-10);
    }
}

TEST_CASE("eigenvalues: ordering and conjugacy") {
    // Block diag(rotation by 90deg scaled by 2, 0.5).
    const Mat m = mat3(0, -2, 0, 2, 0, 0, 0, 0, 0.5);
    const std::vector<Cplx> e = eigenvalues(m);
    REQUIRE(e.size() == 3);
    // Descending modulus, +Im member of the pair first.
    CHECK(std::abs(e[0]) == doctest::Approx(2.0));
    CHECK(e[0].imag() > 0);
    CHECK(e[1].imag() == -e[0].imag());
    CHECK(e[2].real() == doctest::Approx(0.5));
}

TEST_CASE("eigenvalues: random matrices satisfy trace/det/residual") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Mat m(3, 3);
        for (double& v : m.a) v = rng.uniform(-2.0, 2.0);
        const std::vector<Cplx> e = eigenvalues(m);
        REQUIRE(e.size() == 3);

        const Cplx sum = e[0] + e[1] + e[2];
        const Cplx prod = e[0] * e[1] * e[2];
        const double trace = m(0, 0) + m(1, 1) + m(2, 2);
        CHECK(std::abs(sum - Cplx(trace, 0)) < 1e-9);
        CHECK(std::abs(prod - Cplx(det(m), 0)) < 1e-9);
        for (const Cplx& x : e) CHECK(char_residual(m, x) < 1e-9);

        // Sorted by descending modulus.
        CHECK(std::abs(e[0]) >= std::abs(e[1]) - 1e-15);
        CHECK(std::abs(e[1]) >= std::abs(e[2]) - 1e-15);
    }
}
