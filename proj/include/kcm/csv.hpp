// SPDX-License-Identifier: MIT
//
// CSV renderings of the bulk outputs (orbits, simplex samples, eigenvalue
// scans, the class atlas).  Numbers are written with 17 significant digits
// so round-tripping through text is lossless.

#pragma once

#include <string>
#include <vector>

#include "kcm/classify.hpp"
#include "kcm/dynamics.hpp"
#include "kcm/linalg.hpp"

namespace kcm {

// Header "k,x1,...,xn"; one row per orbit point.
std::string orbit_csv(const Orbit& orbit);

// Header "ray,x1,...,xn"; one row per sampled ray.
std::string samples_csv(const std::vector<Vec>& samples);

// Header "param,re1,im1,...,ren,imn,max_modulus"; one row per grid point.
std::string scan_csv(const ScanResult& scan);

// One row per realized class with its witness interaction matrix.
std::string atlas_csv(const ClassAtlas& atlas);

} // namespace kcm
