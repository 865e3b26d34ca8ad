// SPDX-License-Identifier: MIT
//
// Benchmark of the three parallel kernels against their serial reference:
// class enumeration (witness searches), eigenvalue scans, and invariant
// surface sampling.  Every kernel writes into per-index slots, so the two
// execution policies must agree bit for bit; this binary verifies that while
// timing them.  Exit code 0 iff all three kernels match.

#include <chrono>
#include <cstdio>
#include <cstring>

#include "kcm/classify.hpp"
#include "kcm/dynamics.hpp"
#include "kcm/model.hpp"
#include "kcm/parallel.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

kcm::Model bench_model() {
    kcm::Mat U(3, 3);
    const double u[9] = {1.0, 1.25, 0.5, 0.5, 1.0, 1.5, 1.5, 0.75, 1.0};
    std::memcpy(U.a.data(), u, sizeof u);
    std::vector<kcm::SpeciesLaw> laws(3, {kcm::GrowthKind::leslie_gower(), 1.0});
    laws[1].r = 0.1;
    return kcm::make_model(std::move(laws), std::move(U));
}

bool report(const char* name, double serial_ms, double parallel_ms, bool same) {
    std::printf("%-22s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx   %s\n",
                name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                same ? "identical" : "MISMATCH");
    return same;
}

bool bench_atlas() {
    const auto t0 = Clock::now();
    const kcm::ClassAtlas a = kcm::enumerate_classes(4000, 20240001, kcm::Exec::Serial);
    const double ts = ms_since(t0);
    const auto t1 = Clock::now();
    const kcm::ClassAtlas b = kcm::enumerate_classes(4000, 20240001, kcm::Exec::Parallel);
    const double tp = ms_since(t1);

    bool same = a.orbits.size() == b.orbits.size();
    for (size_t i = 0; same && i < a.orbits.size(); ++i) {
        const kcm::OrbitRecord &ra = a.orbits[i], &rb = b.orbits[i];
        same = ra.status == rb.status && ra.witness_margin == rb.witness_margin &&
               ra.witness.has_value() == rb.witness.has_value() &&
               (!ra.witness || ra.witness->a == rb.witness->a);
    }
    return report("class enumeration", ts, tp, same);
}

bool bench_scan() {
    const kcm::Model m = bench_model();
    const kcm::ParamRef ref{kcm::ParamRef::Kind::Rate, 1};
    const auto t0 = Clock::now();
    const kcm::ScanResult a =
        kcm::ns_scan(m, ref, 0.05, 0.3, 40000, kcm::Exec::Serial);
    const double ts = ms_since(t0);
    const auto t1 = Clock::now();
    const kcm::ScanResult b =
        kcm::ns_scan(m, ref, 0.05, 0.3, 40000, kcm::Exec::Parallel);
    const double tp = ms_since(t1);

    bool same = a.grid.size() == b.grid.size();
    for (size_t i = 0; same && i < a.grid.size(); ++i)
        same = a.grid[i].param == b.grid[i].param &&
               a.grid[i].eigs == b.grid[i].eigs;
    return report("eigenvalue scan", ts, tp, same);
}

bool bench_simplex() {
    const kcm::Model m = bench_model();
    const auto t0 = Clock::now();
    const std::vector<kcm::Vec> a =
        kcm::sample_simplex(m, 20000, 400, kcm::Exec::Serial);
    const double ts = ms_since(t0);
    const auto t1 = Clock::now();
    const std::vector<kcm::Vec> b =
        kcm::sample_simplex(m, 20000, 400, kcm::Exec::Parallel);
    const double tp = ms_since(t1);
    return report("surface sampling", ts, tp, a == b);
}

} // namespace

int main() {
    std::printf("threads available: %s\n",
                kcm::parallel_available() ? "OpenMP" : "serial build");
    bool ok = true;
    ok &= bench_simplex();
    ok &= bench_scan();
    ok &= bench_atlas();
    return ok ? 0 : 1;
}
