// SPDX-License-Identifier: MIT

#include "fixtures.hpp"

#include <array>
#include <cmath>

namespace fixtures {

namespace {

using kcm::GrowthKind;
using kcm::Mat;
using kcm::Model;
using kcm::SpeciesLaw;

Mat mat3(const std::array<double, 9>& v) {
    Mat m(3, 3);
    for (int i = 0; i < 9; ++i) m.a[i] = v[i];
    return m;
}

Mat mat2(const std::array<double, 4>& v) {
    Mat m(2, 2);
    for (int i = 0; i < 4; ++i) m.a[i] = v[i];
    return m;
}

// The matrix shared by lg1 and cgaa1.
Mat cyclic_matrix() {
    return mat3({1.0, 5.0 / 4, 1.0 / 2,
                 1.0 / 2, 1.0, 3.0 / 2,
                 3.0 / 2, 3.0 / 4, 1.0});
}

// The matrix shared by mix1 and ricker2.
Mat mixed_matrix() {
    return mat3({1.0, 1.0 / 2, 9.0,
                 1.0 / 2, 1.0, 1.0 / 2,
                 1.0 / 6, 7.0 / 6, 1.0});
}

std::vector<SpeciesLaw> mixed_laws(double r2) {
    return {{GrowthKind::leslie_gower(), 1.0},
            {GrowthKind::atkinson_allen(4.0 / 5), r2},
            {GrowthKind::log_ratio(), 1.0}};
}

} // namespace

Model lg1(double r2) {
    std::vector<SpeciesLaw> laws(3, {GrowthKind::leslie_gower(), 1.0});
    laws[1].r = r2;
    return make_model(std::move(laws), cyclic_matrix());
}

Model cgaa1(double c3) {
    std::vector<SpeciesLaw> laws = {{GrowthKind::atkinson_allen(0.1), 1.0},
                                    {GrowthKind::atkinson_allen(0.2), 1.0},
                                    {GrowthKind::atkinson_allen(c3), 1.0}};
    return make_model(std::move(laws), cyclic_matrix());
}

Model cgaa2(double c2) {
    std::vector<SpeciesLaw> laws = {{GrowthKind::atkinson_allen(0.1), 1.0},
                                    {GrowthKind::atkinson_allen(c2), 1.0},
                                    {GrowthKind::atkinson_allen(0.1), 1.0}};
    return make_model(std::move(laws),
                      mat3({3.0, 3.0, 1.0,
                            3.0 / 2, 3.0 / 2, 4.0,
                            4.0, 1.0, 2.0}));
}

Model mix1(double r2) {
    return make_model(mixed_laws(r2), mixed_matrix());
}

Model mix2(double r2) {
    return make_model(mixed_laws(r2),
                      mat3({1.0, 1.0 / 4, 3.0 / 2,
                            5.0 / 8, 1.0, 5.0 / 8,
                            7.0 / 10, 3.0 / 4, 1.0}));
}

Model ricker2(double r2) {
    std::vector<SpeciesLaw> laws(3, {GrowthKind::ricker(), 1.0});
    laws[0].r = 1.0 / 11;
    laws[1].r = r2;
    laws[2].r = 2.0 / 7;
    return make_model(std::move(laws), mixed_matrix());
}

Model ricker_chenciner() {
    std::vector<SpeciesLaw> laws(3, {GrowthKind::ricker(), 1.0});
    laws[0].r = 0.1;
    laws[1].r = 0.3;
    laws[2].r = 0.25;
    return make_model(std::move(laws),
                      mat3({1.0, 4.0, 3.0 / 4,
                            1.0 / 8, 1.0, 5.0 / 4,
                            3.0 / 4, 5.0 / 4, 1.0}));
}

Model class33() {
    std::vector<SpeciesLaw> laws(3, {GrowthKind::leslie_gower(), 1.0});
    return make_model(std::move(laws),
                      mat3({1.0, 0.5, 0.5,
                            0.5, 1.0, 0.5,
                            0.5, 0.5, 1.0}));
}

Model boundary_attractor() {
    std::vector<SpeciesLaw> laws(3, {GrowthKind::leslie_gower(), 1.0});
    return make_model(std::move(laws),
                      mat3({1.0, 0.5, 0.5,
                            2.0, 1.0, 0.7,
                            2.0, 0.6, 1.0}));
}

Model two_coexist() {
    std::vector<SpeciesLaw> laws(2, {GrowthKind::leslie_gower(), 1.0});
    return make_model(std::move(laws), mat2({1.0, 0.5, 0.5, 1.0}));
}

Model two_bistable() {
    std::vector<SpeciesLaw> laws(2, {GrowthKind::leslie_gower(), 1.0});
    return make_model(std::move(laws), mat2({1.0, 2.0, 2.0, 1.0}));
}

Model two_excl_first() {  // gamma_12 < 0, gamma_21 > 0: q_1 attracts
    std::vector<SpeciesLaw> laws(2, {GrowthKind::leslie_gower(), 1.0});
    return make_model(std::move(laws), mat2({1.0, 0.5, 2.0, 1.0}));
}

Model two_excl_second() {  // gamma_12 > 0, gamma_21 < 0: q_2 attracts
    std::vector<SpeciesLaw> laws(2, {GrowthKind::leslie_gower(), 1.0});
    return make_model(std::move(laws), mat2({1.0, 2.0, 0.5, 1.0}));
}

double lg1_crossing() {
    return -113.0 / 194.0 + 4.0 * std::sqrt(295.0) / 97.0;
}

double cgaa1_crossing() {
    return 432709.0 / 80801.0 - 80.0 * std::sqrt(24656689.0) / 80801.0;
}

double cgaa2_crossing() {
    return 1822387.0 / 382723.0 - 840.0 * std::sqrt(3257017.0) / 382723.0;
}

double ricker2_crossing() {
    return -15.0 / 2128.0 + 3.0 * std::sqrt(231729.0) / 78736.0;
}

} // namespace fixtures
