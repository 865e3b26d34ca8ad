// SPDX-License-Identifier: MIT
//
// Small dense linear algebra.
//
// Everything in this project runs on 2x2 and 3x3 systems (plus the occasional
// n x n solve for fixed-point coordinates), so we keep a self-contained
// implementation: partial-pivot elimination for solves and determinants, and
// closed-form characteristic polynomials (quadratic / Cardano cubic) with a
// complex Newton polish for eigenvalues.  No external dependency, fully
// deterministic, and accurate to ~1e-14 on the matrices we care about.

#pragma once

#include <complex>
#include <vector>

namespace kcm {

using Vec  = std::vector<double>;
using Cplx = std::complex<double>;
using CVec = std::vector<Cplx>;

struct Mat {
    int rows = 0, cols = 0;
    std::vector<double> a;  // row-major

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

    static Mat identity(int n);

    double&  operator()(int i, int j)       { return a[static_cast<size_t>(i) * cols + j]; }
    double   operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const Mat&) const = default;
};

Mat  operator+(const Mat& x, const Mat& y);
Mat  operator-(const Mat& x, const Mat& y);
Mat  operator*(const Mat& x, const Mat& y);
Mat  operator*(double s, const Mat& x);
Vec  mat_vec(const Mat& m, const Vec& x);
Mat  transpose(const Mat& m);

// Determinant by elimination (exact sign, ~1e-15 relative accuracy).
double det(Mat m);

// Solve m x = b with partial pivoting.  Throws DegenerateError when a pivot
// falls below 1e-12 relative to the largest initial entry.
Vec solve(Mat m, Vec b);

// Complex dense solve for an n x n row-major system; same pivoting rules.
CVec csolve(std::vector<Cplx> m, CVec b, int n);

// Eigenvalues of an n x n matrix, n <= 3, via the characteristic polynomial
// (closed form) plus one complex Newton polish per root.  Real coefficients
// guarantee conjugate symmetry, which is restored exactly after polishing.
// Sorted by descending modulus; within a conjugate pair the +Im root first.
std::vector<Cplx> eigenvalues(const Mat& m);

} // namespace kcm
