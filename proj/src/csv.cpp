// SPDX-License-Identifier: MIT

#include "kcm/csv.hpp"

#include <cstdio>

namespace kcm {

namespace {

void append_num(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

} // namespace

std::string orbit_csv(const Orbit& orbit) {
    std::string out = "k";
    const size_t n = orbit.points.empty() ? 0 : orbit.points.front().size();
    for (size_t i = 1; i <= n; ++i) out += ",x" + std::to_string(i);
    out += '\n';
    for (size_t k = 0; k < orbit.points.size(); ++k) {
        out += std::to_string(k);
        for (double v : orbit.points[k]) {
            out += ',';
            append_num(out, v);
        }
        out += '\n';
    }
    return out;
}

std::string samples_csv(const std::vector<Vec>& samples) {
    std::string out = "ray";
    const size_t n = samples.empty() ? 0 : samples.front().size();
    for (size_t i = 1; i <= n; ++i) out += ",x" + std::to_string(i);
    out += '\n';
    for (size_t k = 0; k < samples.size(); ++k) {
        out += std::to_string(k);
        for (double v : samples[k]) {
            out += ',';
            append_num(out, v);
        }
        out += '\n';
    }
    return out;
}

std::string scan_csv(const ScanResult& scan) {
    std::string out = "param";
    const size_t n = scan.grid.empty() ? 0 : scan.grid.front().eigs.size();
    for (size_t i = 1; i <= n; ++i)
        out += ",re" + std::to_string(i) + ",im" + std::to_string(i);
    out += ",max_modulus\n";
    for (const ScanPoint& sp : scan.grid) {
        append_num(out, sp.param);
        for (const Cplx& e : sp.eigs) {
            out += ',';
            append_num(out, e.real());
            out += ',';
            append_num(out, e.imag());
        }
        out += ',';
        append_num(out, sp.max_modulus);
        out += '\n';
    }
    return out;
}

std::string atlas_csv(const ClassAtlas& atlas) {
    std::string out =
        "ordinal,catalog_number,signature,boundary_index_sum,witness_margin";
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            out += ",u" + std::to_string(i) + std::to_string(j);
    out += '\n';
    for (const OrbitRecord& rec : atlas.orbits) {
        if (rec.status != WitnessStatus::Realized || !rec.witness) continue;
        out += std::to_string(rec.ordinal);
        out += ',';
        if (rec.catalog_number) out += std::to_string(*rec.catalog_number);
        out += ',';
        out += rec.signature.str();  // no commas in signature strings
        out += ',';
        out += std::to_string(rec.signature.boundary_index_sum);
        out += ',';
        append_num(out, rec.witness_margin);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                out += ',';
                append_num(out, (*rec.witness)(i, j));
            }
        out += '\n';
    }
    return out;
}

} // namespace kcm
