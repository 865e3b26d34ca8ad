// SPDX-License-Identifier: MIT

#include "kcm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kcm/errors.hpp"

namespace kcm {

namespace {

constexpr double kSingularRel = 1e-12;  // relative pivot threshold

} // namespace

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Mat operator+(const Mat& x, const Mat& y) {
    Mat r(x.rows, x.cols);
    for (size_t k = 0; k < r.a.size(); ++k) r.a[k] = x.a[k] + y.a[k];
    return r;
}

Mat operator-(const Mat& x, const Mat& y) {
    Mat r(x.rows, x.cols);
    for (size_t k = 0; k < r.a.size(); ++k) r.a[k] = x.a[k] - y.a[k];
    return r;
}

Mat operator*(const Mat& x, const Mat& y) {
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const double xik = x(i, k);
            for (int j = 0; j < y.cols; ++j) r(i, j) += xik * y(k, j);
        }
    return r;
}

Mat operator*(double s, const Mat& x) {
    Mat r = x;
    for (double& v : r.a) v *= s;
    return r;
}

Vec mat_vec(const Mat& m, const Vec& x) {
    Vec r(m.rows, 0.0);
    for (int i = 0; i < m.rows; ++i) {
        double s = 0.0;
        for (int j = 0; j < m.cols; ++j) s += m(i, j) * x[j];
        r[i] = s;
    }
    return r;
}

Mat transpose(const Mat& m) {
    Mat r(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r(j, i) = m(i, j);
    return r;
}

double det(Mat m) {
    const int n = m.rows;
    double scale = 0.0;
    for (double v : m.a) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return 0.0;

    double d = 1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(m(i, k)) > std::abs(m(piv, k))) piv = i;
        if (std::abs(m(piv, k)) <= kSingularRel * scale * 1e-3) return 0.0;
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
            d = -d;
        }
        d *= m(k, k);
        for (int i = k + 1; i < n; ++i) {
            const double f = m(i, k) / m(k, k);
            for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return d;
}

namespace {

// Shared elimination kernel over double or complex scalars.
template <class T>
std::vector<T> eliminate(std::vector<T> m, std::vector<T> b, int n) {
    double scale = 0.0;
    for (const T& v : m) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) throw DegenerateError("linear solve: zero matrix");

    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(m[i * n + k]) > std::abs(m[piv * n + k])) piv = i;
        if (std::abs(m[piv * n + k]) <= kSingularRel * scale)
            throw DegenerateError("linear solve: singular system");
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
            std::swap(b[k], b[piv]);
        }
        for (int i = k + 1; i < n; ++i) {
            const T f = m[i * n + k] / m[k * n + k];
            for (int j = k; j < n; ++j) m[i * n + j] -= f * m[k * n + j];
            b[i] -= f * b[k];
        }
    }
    std::vector<T> x(n);
    for (int i = n - 1; i >= 0; --i) {
        T s = b[i];
        for (int j = i + 1; j < n; ++j) s -= m[i * n + j] * x[j];
        x[i] = s / m[i * n + i];
    }
    return x;
}

} // namespace

Vec solve(Mat m, Vec b) {
    return eliminate<double>(std::move(m.a), std::move(b), m.rows);
}

CVec csolve(std::vector<Cplx> m, CVec b, int n) {
    return eliminate<Cplx>(std::move(m), std::move(b), n);
}

namespace {

// One Newton step per iteration on the monic cubic x^3 + a x^2 + b x + c.
Cplx polish_cubic(Cplx x, double a, double b, double c) {
    for (int it = 0; it < 12; ++it) {
        const Cplx p  = ((x + a) * x + b) * x + c;
        const Cplx dp = (3.0 * x + 2.0 * a) * x + b;
        if (std::abs(dp) == 0.0) break;
        const Cplx step = p / dp;
        x -= step;
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(x))) break;
    }
    return x;
}

std::vector<Cplx> roots_quadratic(double a, double b) {
    // x^2 + a x + b
    const double disc = a * a - 4.0 * b;
    if (disc >= 0.0) {
        const double s = std::sqrt(disc);
        // avoid cancellation: compute the large-magnitude root first
        const double q = -0.5 * (a + (a >= 0.0 ? s : -s));
        double r0 = q;
        double r1 = (q != 0.0) ? b / q : -a - q;
        return {Cplx(r0, 0.0), Cplx(r1, 0.0)};
    }
    const double im = 0.5 * std::sqrt(-disc);
    return {Cplx(-0.5 * a, im), Cplx(-0.5 * a, -im)};
}

std::vector<Cplx> roots_cubic(double a, double b, double c) {
    // x^3 + a x^2 + b x + c, real coefficients.
    // Depressed form t^3 + p t + q with x = t - a/3.
    const double p = b - a * a / 3.0;
    const double q = c + a * (2.0 * a * a - 9.0 * b) / 27.0;
    const double shift = -a / 3.0;

    std::vector<Cplx> roots;
    const double disc = 0.25 * q * q + p * p * p / 27.0;
    if (disc > 0.0) {
        // one real root, one conjugate pair
        const double s  = std::sqrt(disc);
        const double u3 = -0.5 * q + s;
        const double v3 = -0.5 * q - s;
        const double u  = std::cbrt(u3);
        const double v  = std::cbrt(v3);
        const double t0 = u + v;
        const double re = -0.5 * t0;
        const double im = 0.5 * std::sqrt(3.0) * std::abs(u - v);
        roots = {Cplx(t0, 0.0), Cplx(re, im), Cplx(re, -im)};
    } else {
        // three real roots (trigonometric form)
        const double mp = std::max(-p, 0.0);
        const double rad = 2.0 * std::sqrt(mp / 3.0);
        double arg = 0.0;
        if (mp > 0.0) {
            double cosv = 3.0 * q / (p * rad);
            cosv = std::clamp(cosv, -1.0, 1.0);
            arg = std::acos(cosv) / 3.0;
        }
        for (int k = 0; k < 3; ++k) {
            const double t = rad * std::cos(arg - 2.0 * std::numbers::pi * k / 3.0);
            roots.emplace_back(t, 0.0);
        }
    }
    for (Cplx& r : roots) r += shift;
    for (Cplx& r : roots) r = polish_cubic(r, a, b, c);

    // Restore exact conjugate symmetry: with real coefficients the imaginary
    // parts come in +/- pairs.  Pick the two roots with the largest |Im|,
    // average them; collapse to real when within roundoff of the axis.
    double im_max = 0.0;
    for (const Cplx& r : roots) im_max = std::max(im_max, std::abs(r.imag()));
    if (im_max < 1e-13 * (1.0 + std::abs(roots[0]))) {
        for (Cplx& r : roots) r = Cplx(r.real(), 0.0);
    } else {
        std::sort(roots.begin(), roots.end(),
                  [](const Cplx& x, const Cplx& y) { return std::abs(x.imag()) > std::abs(y.imag()); });
        const double re = 0.5 * (roots[0].real() + roots[1].real());
        const double im = 0.5 * (std::abs(roots[0].imag()) + std::abs(roots[1].imag()));
        roots[0] = Cplx(re, im);
        roots[1] = Cplx(re, -im);
        roots[2] = Cplx(roots[2].real(), 0.0);
    }
    return roots;
}

} // namespace

std::vector<Cplx> eigenvalues(const Mat& m) {
    const int n = m.rows;
    std::vector<Cplx> eigs;
    if (n == 1) {
        eigs = {Cplx(m(0, 0), 0.0)};
    } else if (n == 2) {
        const double tr = m(0, 0) + m(1, 1);
        const double dt = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        eigs = roots_quadratic(-tr, dt);
    } else if (n == 3) {
        const double tr = m(0, 0) + m(1, 1) + m(2, 2);
        const double minors =
            (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) +
            (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) +
            (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
        const double dt = det(m);
        eigs = roots_cubic(-tr, minors, -dt);
    } else {
        throw DomainError("eigenvalues: only n <= 3 supported");
    }

    std::sort(eigs.begin(), eigs.end(), [](const Cplx& x, const Cplx& y) {
        const double ax = std::abs(x), ay = std::abs(y);
        if (ax != ay) return ax > ay;
        if (x.real() != y.real()) return x.real() > y.real();
        return x.imag() > y.imag();
    });
    return eigs;
}

} // namespace kcm
