// SPDX-License-Identifier: MIT

#include "kcm/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "kcm/errors.hpp"

namespace kcm {

namespace {

double dist_inf(const Vec& x, const Vec& y) {
    double d = 0.0;
    for (size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
    return d;
}

} // namespace

const char* omega_kind_name(OmegaKind k) {
    switch (k) {
        case OmegaKind::FixedPoint:       return "FixedPoint";
        case OmegaKind::InvariantCurve:   return "InvariantCurve";
        case OmegaKind::HeteroclinicLike: return "HeteroclinicLike";
        case OmegaKind::Undecided:        return "Undecided";
    }
    return "?";
}

SimulationResult simulate(const Model& m, const Vec& x0, int max_steps, double tol) {
    if (max_steps < 1) throw DomainError("simulate: max_steps must be >= 1");
    if (!(tol > 0.0)) throw DomainError("simulate: tol must be > 0");
    const int n = m.n();
    if (static_cast<int>(x0.size()) != n)
        throw DomainError("simulate: start dimension does not match model");
    for (double v : x0)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw DomainError("simulate: start must lie in the closed positive cone");

    // Complete list of fixed points (the fixed-point set is linearly
    // determined, so this list is exhaustive for nondegenerate U).
    std::vector<FixedPoint> known;
    known.push_back(origin_point(m));
    for (FixedPoint& fp : axial_points(m)) known.push_back(std::move(fp));
    try {
        for (FixedPoint& fp : planar_points(m)) known.push_back(std::move(fp));
    } catch (const DegenerateError&) {}
    try {
        if (std::optional<FixedPoint> p = positive_point(m)) known.push_back(std::move(*p));
    } catch (const DegenerateError&) {}

    SimulationResult result;
    Orbit& orbit = result.orbit;
    orbit.points.reserve(std::min(max_steps + 1, 1 << 20));
    orbit.points.push_back(x0);

    // Whole-orbit bookkeeping for the heteroclinic detector: near an
    // attracting boundary cycle the dwell time at each saddle grows
    // geometrically, so any fixed tail window eventually straddles a single
    // vertex; the visit flags have to cover the entire orbit.
    bool visited[3] = {false, false, false};
    double orbit_min = std::numeric_limits<double>::infinity();
    auto note_visits = [&](const Vec& x) {
        for (double v : x) orbit_min = std::min(orbit_min, v);
        if (n != 3) return;
        for (int i = 0; i < 3; ++i) {
            const double qi = 1.0 / m.U(i, i);
            Vec axial(3, 0.0);
            axial[i] = qi;
            if (dist_inf(x, axial) < 0.3 * qi) visited[i] = true;
        }
    };
    note_visits(x0);

    // Stop early once the orbit has clearly settled onto a fixed point.
    int settled = 0;
    for (int k = 0; k < max_steps; ++k) {
        orbit.points.push_back(evaluate(m, orbit.points.back()));
        note_visits(orbit.points.back());
        double dmin = std::numeric_limits<double>::infinity();
        for (const FixedPoint& fp : known)
            dmin = std::min(dmin, dist_inf(orbit.points.back(), fp.coords));
        if (dmin < 0.01 * tol) {
            if (++settled >= 64) {
                orbit.truncated = true;
                break;
            }
        } else {
            settled = 0;
        }
    }

    // Tail window.  A truncated orbit still carries its transient, so the
    // window shrinks to the settled plateau; otherwise the statistics would
    // mix the approach phase into the tail.
    const int points = static_cast<int>(orbit.points.size());
    int window = std::max(1, std::min({2000, max_steps / 4, points}));
    if (orbit.truncated) window = std::min(window, 64);
    const int start = points - window;

    OmegaLimit& omega = result.omega;
    omega.tail_diameter = 0.0;
    omega.min_boundary_distance = std::numeric_limits<double>::infinity();
    Vec lo(n, std::numeric_limits<double>::infinity()), hi(n, 0.0);
    for (int k = start; k < points; ++k) {
        for (int i = 0; i < n; ++i) {
            const double v = orbit.points[k][i];
            lo[i] = std::min(lo[i], v);
            hi[i] = std::max(hi[i], v);
            omega.min_boundary_distance = std::min(omega.min_boundary_distance, v);
        }
    }
    for (int i = 0; i < n; ++i)
        omega.tail_diameter = std::max(omega.tail_diameter, hi[i] - lo[i]);

    // Nearest fixed point, and whether the whole tail sits within tol of one.
    const FixedPoint* best = nullptr;
    double best_worst = std::numeric_limits<double>::infinity();
    for (const FixedPoint& fp : known) {
        double worst = 0.0;
        for (int k = start; k < points; ++k)
            worst = std::max(worst, dist_inf(orbit.points[k], fp.coords));
        if (worst < best_worst) {
            best_worst = worst;
            best = &fp;
        }
    }
    omega.final_distance = std::numeric_limits<double>::infinity();
    for (const FixedPoint& fp : known)
        omega.final_distance =
            std::min(omega.final_distance, dist_inf(orbit.points.back(), fp.coords));

    const bool cycled = visited[0] && visited[1] && visited[2];

    if (best && best_worst <= tol) {
        // An orbit spiraling into an attracting boundary cycle eventually
        // underflows a coordinate and parks on a saddle's invariant face; in
        // exact arithmetic it would leave again.  A parked tail at a boundary
        // saddle after a full tour of the axial points is the cycle, not
        // convergence.
        const bool boundary = !best->support.empty() &&
                              static_cast<int>(best->support.size()) < n;
        if (n == 3 && boundary && best->local_type == LocalType::Saddle &&
            orbit_min < 1e-6 && cycled) {
            omega.kind = OmegaKind::HeteroclinicLike;
            omega.note =
                "orbit numerically pinned to a boundary saddle after cycling "
                "past every axial point";
            return result;
        }
        omega.kind = OmegaKind::FixedPoint;
        omega.fixed_point = *best;
        omega.note = "tail within tolerance of a fixed point";
        return result;
    }

    // Heteroclinic-like: the tail hugs the boundary and the orbit has passed
    // near every axial point in turn.
    if (n == 3 && omega.min_boundary_distance < 1e-6 && cycled) {
        omega.kind = OmegaKind::HeteroclinicLike;
        omega.note = "tail hugs the boundary and the orbit cycles past every axial point";
        return result;
    }

    // Invariant curve: bounded, clear of the boundary, non-convergent, with a
    // diameter that has stopped changing.
    if (omega.min_boundary_distance > 1e-6 && omega.tail_diameter > 100.0 * tol) {
        const int half = window / 2;
        double d1 = 0.0, d2 = 0.0;
        for (int i = 0; i < n; ++i) {
            double lo1 = std::numeric_limits<double>::infinity(), hi1 = 0.0;
            double lo2 = std::numeric_limits<double>::infinity(), hi2 = 0.0;
            for (int k = start; k < start + half; ++k) {
                lo1 = std::min(lo1, orbit.points[k][i]);
                hi1 = std::max(hi1, orbit.points[k][i]);
            }
            for (int k = start + half; k < points; ++k) {
                lo2 = std::min(lo2, orbit.points[k][i]);
                hi2 = std::max(hi2, orbit.points[k][i]);
            }
            d1 = std::max(d1, hi1 - lo1);
            d2 = std::max(d2, hi2 - lo2);
        }
        if (half > 0 && std::abs(d1 - d2) <= 0.3 * std::max(d1, d2)) {
            omega.kind = OmegaKind::InvariantCurve;
            omega.note = "bounded non-convergent tail with stable diameter";
            return result;
        }
    }

    omega.kind = OmegaKind::Undecided;
    omega.note = "tail matches no template within the step budget";
    return result;
}

std::vector<Vec> sample_simplex(const Model& m, int rays, int settle_steps,
                                Exec policy) {
    const int n = m.n();
    if (n != 2 && n != 3)
        throw DomainError("sample_simplex: 2- or 3-species models only");
    if (rays < 1) throw DomainError("sample_simplex: rays must be >= 1");
    if (settle_steps < 0) throw DomainError("sample_simplex: settle_steps must be >= 0");

    Vec q(n);
    for (int i = 0; i < n; ++i) q[i] = 1.0 / m.U(i, i);

    std::vector<Vec> out(static_cast<size_t>(rays));
    parallel_for(rays, policy, [&](int k) {
        // Low-discrepancy directions through the positive cone.
        Vec d(n);
        if (n == 3) {
            constexpr double kGolden = 0.6180339887498949;  // 1/phi
            const double alpha = std::numbers::pi / 2.0 * std::fmod(k * kGolden, 1.0);
            const double w = (k + 0.5) / rays;
            const double rho = std::sqrt(1.0 - w * w);
            d = {rho * std::cos(alpha), rho * std::sin(alpha), w};
        } else {
            const double theta = std::numbers::pi / 2.0 * (k + 0.5) / rays;
            d = {std::cos(theta), std::sin(theta)};
        }
        // Scale onto the box [0, q] spanned by the axial points.
        double t = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i)
            if (d[i] > 0.0) t = std::min(t, q[i] / d[i]);
        Vec x(n);
        for (int i = 0; i < n; ++i) x[i] = t * d[i];
        for (int s = 0; s < settle_steps; ++s) x = evaluate(m, x);
        out[static_cast<size_t>(k)] = std::move(x);
    });
    return out;
}

std::optional<ParamRef> parse_param_ref(std::string_view name) {
    if (name.size() < 2) return std::nullopt;
    ParamRef ref;
    if (name[0] == 'r') ref.kind = ParamRef::Kind::Rate;
    else if (name[0] == 'c' || name[0] == 's') ref.kind = ParamRef::Kind::Shape;
    else return std::nullopt;
    int idx = 0;
    for (size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') return std::nullopt;
        idx = idx * 10 + (name[i] - '0');
    }
    if (idx < 1) return std::nullopt;
    ref.species = idx - 1;
    return ref;
}

Model with_param(const Model& m, ParamRef ref, double value) {
    if (ref.species < 0 || ref.species >= m.n())
        throw DomainError("parameter reference: species out of range");
    Model out = m;
    if (ref.kind == ParamRef::Kind::Rate) {
        if (!(value > 0.0) || !std::isfinite(value))
            throw DomainError("parameter sweep: rate must be positive");
        out.laws[ref.species].r = value;
    } else {
        if (!growth_has_param(out.laws[ref.species].kind.tag))
            throw DomainError("parameter sweep: species law has no shape parameter");
        out.laws[ref.species].kind.param = value;
        check_growth_param(out.laws[ref.species].kind);
    }
    return out;
}

namespace {

// Modulus of the complex conjugate pair, if the spectrum has one.
std::optional<double> complex_pair_modulus(const std::vector<Cplx>& eigs) {
    for (const Cplx& e : eigs)
        if (std::abs(e.imag()) > 1e-10 * (1.0 + std::abs(e))) return std::abs(e);
    return std::nullopt;
}

Cplx complex_pair_member(const std::vector<Cplx>& eigs) {
    for (const Cplx& e : eigs)
        if (e.imag() > 1e-10 * (1.0 + std::abs(e))) return e;
    throw NumericalError("scan: expected a complex pair");
}

} // namespace

ScanResult ns_scan(const Model& m, ParamRef ref, double from, double to,
                   int grid, Exec policy) {
    if (grid < 2) throw DomainError("scan: grid must have at least 2 points");
    if (!(from < to)) throw DomainError("scan: need from < to");
    with_param(m, ref, from);  // validate the range endpoints up front
    with_param(m, ref, to);

    const std::optional<FixedPoint> p = positive_point(m);
    if (!p) throw DegenerateError("scan: model has no interior fixed point");
    const Vec pc = p->coords;

    ScanResult res;
    const char* letter = "r";
    if (ref.kind == ParamRef::Kind::Shape)
        letter = (m.laws[ref.species].kind.tag == GrowthTag::AtkinsonAllen) ? "c" : "s";
    res.param_name = letter + std::to_string(ref.species + 1);

    res.grid.resize(static_cast<size_t>(grid));
    parallel_for(grid, policy, [&](int j) {
        ScanPoint sp;
        sp.param = from + (to - from) * j / (grid - 1);
        const Model mj = with_param(m, ref, sp.param);
        sp.eigs = eigenvalues(jacobian(mj, pc));
        sp.max_modulus = std::abs(sp.eigs[0]);
        sp.pair_modulus = complex_pair_modulus(sp.eigs);
        res.grid[static_cast<size_t>(j)] = std::move(sp);
    });

    auto eigs_at = [&](double t) { return eigenvalues(jacobian(with_param(m, ref, t), pc)); };

    for (int j = 0; j + 1 < grid; ++j) {
        const ScanPoint& s0 = res.grid[j];
        const ScanPoint& s1 = res.grid[j + 1];
        if (!s0.pair_modulus || !s1.pair_modulus) continue;
        const double g0 = *s0.pair_modulus - 1.0;
        const double g1 = *s1.pair_modulus - 1.0;
        if ((g0 > 0.0) == (g1 > 0.0)) continue;

        // Bisect the bracket down to |pair modulus - 1| < 1e-10.
        double lo = s0.param, hi = s1.param, glo = g0;
        double mid = lo, gm = g0;
        Cplx lambda;
        bool ok = true;
        for (int it = 0; it < 200; ++it) {
            mid = 0.5 * (lo + hi);
            const std::vector<Cplx> eigs = eigs_at(mid);
            const std::optional<double> pm = complex_pair_modulus(eigs);
            if (!pm) {
                res.notes.push_back("bracket lost its complex pair during bisection");
                ok = false;
                break;
            }
            gm = *pm - 1.0;
            lambda = complex_pair_member(eigs);
            if (std::abs(gm) < 1e-10) break;
            if ((gm > 0.0) == (glo > 0.0)) { lo = mid; glo = gm; }
            else hi = mid;
        }
        if (!ok) continue;

        // Reject low-order resonances: the normal form breaks down there.
        static const Cplx kExcluded[] = {
            {1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0},
            {-0.5, std::sqrt(3.0) / 2.0}, {-0.5, -std::sqrt(3.0) / 2.0},
        };
        bool resonant = false;
        for (const Cplx& e : kExcluded)
            if (std::abs(lambda - e) <= 1e-6) resonant = true;
        if (resonant) {
            char buf[128];
            std::snprintf(buf, sizeof buf,
                          "crossing near %.12g rejected: low-order resonance", mid);
            res.notes.emplace_back(buf);
            continue;
        }

        CrossingReport report;
        report.param = mid;
        report.eigenvalue = lambda;
        report.modulus_residual = std::abs(gm);
        res.crossing = report;
        break;
    }
    return res;
}

// --- first Lyapunov coefficient ---------------------------------------------

namespace {

using CMat3 = std::vector<Cplx>;  // row-major n x n

Cplx cdot(const CVec& a, const CVec& b) {
    Cplx s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double cnorm(const CVec& a) {
    double s = 0.0;
    for (const Cplx& v : a) s += std::norm(v);
    return std::sqrt(s);
}

// Null vector of a (numerically) rank-deficient complex matrix, n <= 3.
// For n = 3 the cross product of the two most independent rows is orthogonal
// to every row (the third dot product equals det, which is ~0 here).
CVec null_vector(const CMat3& M, int n) {
    CVec best;
    double best_norm = 0.0;
    if (n == 3) {
        auto cross = [&](int r1, int r2) {
            CVec c(3);
            c[0] = M[r1 * 3 + 1] * M[r2 * 3 + 2] - M[r1 * 3 + 2] * M[r2 * 3 + 1];
            c[1] = M[r1 * 3 + 2] * M[r2 * 3 + 0] - M[r1 * 3 + 0] * M[r2 * 3 + 2];
            c[2] = M[r1 * 3 + 0] * M[r2 * 3 + 1] - M[r1 * 3 + 1] * M[r2 * 3 + 0];
            return c;
        };
        for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
            CVec c = cross(a, b);
            const double nn = cnorm(c);
            if (nn > best_norm) {
                best_norm = nn;
                best = std::move(c);
            }
        }
    } else if (n == 2) {
        for (int r = 0; r < 2; ++r) {
            CVec c = {-M[r * 2 + 1], M[r * 2 + 0]};
            const double nn = cnorm(c);
            if (nn > best_norm) {
                best_norm = nn;
                best = std::move(c);
            }
        }
    } else {
        throw DomainError("eigenvector: only n <= 3 supported");
    }
    double scale = 0.0;
    for (const Cplx& v : M) scale = std::max(scale, std::abs(v));
    if (best_norm <= 1e-12 * (1.0 + scale * scale))
        throw NumericalError("eigenvector: null space not one-dimensional");
    for (Cplx& v : best) v /= best_norm;
    return best;
}

CMat3 shifted(const Mat& A, Cplx shift) {  // A - shift * I
    const int n = A.rows;
    CMat3 M(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            M[i * n + j] = Cplx(A(i, j), 0.0) - (i == j ? shift : Cplx(0.0, 0.0));
    return M;
}

Vec axpy(const Vec& x, double a, const Vec& y) {  // x + a y
    Vec r = x;
    for (size_t i = 0; i < r.size(); ++i) r[i] += a * y[i];
    return r;
}

Mat jac_guarded(const Model& m, const Vec& x) {
    try {
        return jacobian(m, x);
    } catch (const DomainError&) {
        throw NumericalError(
            "multilinear forms: fixed point too close to the boundary for "
            "finite differences");
    }
}

// Matrix of the bilinear form B(d, .): Richardson-extrapolated central
// difference of the Jacobian along direction d.
Mat bform(const Model& m, const Vec& p, const Vec& d, double h) {
    auto diff = [&](double step) {
        return (1.0 / (2.0 * step)) *
               (jac_guarded(m, axpy(p, step, d)) - jac_guarded(m, axpy(p, -step, d)));
    };
    return (1.0 / 3.0) * (4.0 * diff(h) - diff(2.0 * h));
}

// Matrix of C(d, d, .): second central difference.
Mat cform_diag(const Model& m, const Vec& p, const Vec& d, double h) {
    const Mat j0 = jac_guarded(m, p);
    auto diff = [&](double step) {
        return (1.0 / (step * step)) *
               (jac_guarded(m, axpy(p, step, d)) - 2.0 * j0 +
                jac_guarded(m, axpy(p, -step, d)));
    };
    return (1.0 / 3.0) * (4.0 * diff(h) - diff(2.0 * h));
}

// Matrix of C(d1, d2, .): mixed second difference.
Mat cform_cross(const Model& m, const Vec& p, const Vec& d1, const Vec& d2,
                double h) {
    auto diff = [&](double step) {
        const Vec pp = axpy(axpy(p, step, d1), step, d2);
        const Vec pm = axpy(axpy(p, step, d1), -step, d2);
        const Vec mp = axpy(axpy(p, -step, d1), step, d2);
        const Vec mm = axpy(axpy(p, -step, d1), -step, d2);
        return (1.0 / (4.0 * step * step)) *
               (jac_guarded(m, pp) - jac_guarded(m, pm) - jac_guarded(m, mp) +
                jac_guarded(m, mm));
    };
    return (1.0 / 3.0) * (4.0 * diff(h) - diff(2.0 * h));
}

CVec to_cvec(const Vec& re, const Vec& im) {
    CVec c(re.size());
    for (size_t i = 0; i < re.size(); ++i) c[i] = Cplx(re[i], im[i]);
    return c;
}

} // namespace

double lyapunov_l1(const Model& m, Cplx lambda) {
    const int n = m.n();
    if (n != 2 && n != 3) throw DomainError("l1: 2- or 3-species models only");
    const std::optional<FixedPoint> p = positive_point(m);
    if (!p) throw DegenerateError("l1: model has no interior fixed point");
    const Vec& pc = p->coords;
    const Mat A = jacobian(m, pc);

    // Right and left eigenvectors of the crossing pair, normalized so that
    // <q, q> = 1 and <p_l, q> = 1 (Hermitian inner product, first slot
    // conjugated).
    const CMat3 Mq = shifted(A, lambda);
    const CMat3 Mw = shifted(transpose(A), std::conj(lambda));
    CVec q = null_vector(Mq, n);
    CVec w = null_vector(Mw, n);

    // The cross-product construction is orthogonal to two rows of the shifted
    // matrix no matter what; only a genuine eigenvalue annihilates the third.
    auto worst_row_residual = [n](const CMat3& M, const CVec& v) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            Cplx s = 0.0;
            for (int j = 0; j < n; ++j) s += M[i * n + j] * v[j];
            worst = std::max(worst, std::abs(s));
        }
        return worst;
    };
    double a_scale = 0.0;
    for (double v : A.a) a_scale = std::max(a_scale, std::abs(v));
    if (worst_row_residual(Mq, q) > 1e-6 * (1.0 + a_scale) ||
        worst_row_residual(Mw, w) > 1e-6 * (1.0 + a_scale))
        throw NumericalError("l1: lambda is not an eigenvalue of the interior Jacobian");

    const Cplx overlap = cdot(w, q);
    if (std::abs(overlap) < 1e-8)
        throw NumericalError("l1: eigenvector pair is ill-conditioned");
    CVec pl(w.size());
    for (size_t i = 0; i < w.size(); ++i) pl[i] = w[i] / std::conj(overlap);

    Vec a(n), b(n);
    for (int i = 0; i < n; ++i) {
        a[i] = q[i].real();
        b[i] = q[i].imag();
    }

    double pinf = 1.0;
    for (double v : pc) pinf = std::max(pinf, std::abs(v));
    const double h = 1e-4 * pinf;

    const Mat Ba = bform(m, pc, a, h);
    const Mat Bb = bform(m, pc, b, h);
    const Mat Caa = cform_diag(m, pc, a, h);
    const Mat Cbb = cform_diag(m, pc, b, h);
    const Mat Cab = cform_cross(m, pc, a, b, h);

    // Polarization: assemble the complex multilinear values from the real
    // directional matrices.
    const Vec Baa = mat_vec(Ba, a), Bab = mat_vec(Ba, b), Bbb = mat_vec(Bb, b);
    Vec b_qqbar(n), b_qq_re(n), b_qq_im(n);
    for (int i = 0; i < n; ++i) {
        b_qqbar[i] = Baa[i] + Bbb[i];             // B(q, conj q), real
        b_qq_re[i] = Baa[i] - Bbb[i];             // B(q, q)
        b_qq_im[i] = 2.0 * Bab[i];
    }
    const Vec Caaa = mat_vec(Caa, a), Caab = mat_vec(Caa, b);
    const Vec Cabb = mat_vec(Cab, b), Cbbb = mat_vec(Cbb, b);
    Vec c_re(n), c_im(n);
    for (int i = 0; i < n; ++i) {
        c_re[i] = Caaa[i] + Cabb[i];              // C(q, q, conj q)
        c_im[i] = Caab[i] + Cbbb[i];
    }

    // Resonant solves: s1 = (I - A)^{-1} B(q, qbar),
    //                  s2 = (lambda^2 I - A)^{-1} B(q, q).
    Vec s1;
    CVec s2;
    try {
        s1 = solve(Mat::identity(n) - A, b_qqbar);
        CMat3 M = shifted(A, lambda * lambda);   // A - lambda^2 I
        for (Cplx& v : M) v = -v;                // lambda^2 I - A
        s2 = csolve(std::move(M), to_cvec(b_qq_re, b_qq_im), n);
    } catch (const DegenerateError&) {
        throw NumericalError("l1: resonant linear solve is singular");
    }

    // B(q, s1) = (Ba + i Bb) s1;  B(conj q, s2) with s2 = c + i d:
    // (Ba c + Bb d) + i (Ba d - Bb c).
    Vec s2_re(n), s2_im(n);
    for (int i = 0; i < n; ++i) {
        s2_re[i] = s2[i].real();
        s2_im[i] = s2[i].imag();
    }
    const Vec Bas1 = mat_vec(Ba, s1), Bbs1 = mat_vec(Bb, s1);
    const Vec Bac = mat_vec(Ba, s2_re), Bad = mat_vec(Ba, s2_im);
    const Vec Bbc = mat_vec(Bb, s2_re), Bbd = mat_vec(Bb, s2_im);

    CVec term_c(n), term_bs1(n), term_bs2(n);
    for (int i = 0; i < n; ++i) {
        term_c[i] = Cplx(c_re[i], c_im[i]);
        term_bs1[i] = Cplx(Bas1[i], Bbs1[i]);
        term_bs2[i] = Cplx(Bac[i] + Bbd[i], Bad[i] - Bbc[i]);
    }

    const Cplx c1 = 0.5 * cdot(pl, term_c) + cdot(pl, term_bs1) +
                    0.5 * cdot(pl, term_bs2);
    return (std::conj(lambda) * c1).real();
}

ScanResult ns_scan_with_l1(const Model& m, ParamRef ref, double from, double to,
                           int grid, Exec policy) {
    ScanResult res = ns_scan(m, ref, from, to, grid, policy);
    if (res.crossing) {
        try {
            res.l1 = lyapunov_l1(with_param(m, ref, res.crossing->param),
                                 res.crossing->eigenvalue);
        } catch (const NumericalError& e) {
            res.notes.push_back(std::string("first Lyapunov coefficient failed: ") +
                                e.what());
        }
    }
    return res;
}

} // namespace kcm
