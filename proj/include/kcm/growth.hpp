// SPDX-License-Identifier: MIT
//
// Per-capita growth laws f(z, r).
//
// Each law maps accumulated competitive load z >= 0 and intrinsic rate r > 0
// to a multiplicative growth factor, with the shared contract
//
//     f(r, r) = 1          (the load r is the break-even point)
//     df/dz   < 0          (more competition, less growth)
//     f > 0
//
// and, for every law except Ricker, the additional monotone-flux property
// d(z f(z,r))/dz > 0 that makes the one-species map invertible on [0, inf).
// The Ricker law violates that for large z (overcompensation), which is why
// admissibility of Ricker models carries an extra rate bound (see model.hpp).

#pragma once

#include <optional>
#include <string_view>

namespace kcm {

enum class GrowthTag {
    LeslieGower,    // (1+r) / (1+z)
    PowerRatio,     // ((1+r) / (1+z))^s,        0 < s <= 1
    SigmoidRatio,   // (1+r^s) / (1+z^s),        0 < s <= 1
    AtkinsonAllen,  // (1-c)(1+r)/(1+z) + c,     0 < c < 1
    LogRatio,       // (1+log(1+r)) / (1+log(1+z))
    Ricker,         // exp(r - z)
};

// A growth law plus its shape parameter (s or c; unused by the others).
struct GrowthKind {
    GrowthTag tag   = GrowthTag::LeslieGower;
    double    param = 0.0;

    static GrowthKind leslie_gower()           { return {GrowthTag::LeslieGower, 0.0}; }
    static GrowthKind power_ratio(double s)    { return {GrowthTag::PowerRatio, s}; }
    static GrowthKind sigmoid_ratio(double s)  { return {GrowthTag::SigmoidRatio, s}; }
    static GrowthKind atkinson_allen(double c) { return {GrowthTag::AtkinsonAllen, c}; }
    static GrowthKind log_ratio()              { return {GrowthTag::LogRatio, 0.0}; }
    static GrowthKind ricker()                 { return {GrowthTag::Ricker, 0.0}; }

    bool operator==(const GrowthKind&) const = default;
};

// Validates ranges (z >= 0, r > 0, parameter in range); throws DomainError.
// Guarantees growth(k, r, r) == 1.0 exactly, bitwise, for every law.
double growth(const GrowthKind& kind, double z, double r);

// Partial derivative df/dz.  Note: SigmoidRatio with s < 1 has slope -inf at
// z = 0; callers that evaluate on the boundary must handle that (the Jacobian
// does, by construction -- the slope is always multiplied by x_i = 0 there
// and the product is taken to be 0).
double growth_slope(const GrowthKind& kind, double z, double r);

// d(z f)/dz = f + z df/dz in closed form (finite even where the slope itself
// diverges).  Positive for every law except Ricker, where it changes sign.
double growth_flux(const GrowthKind& kind, double z, double r);

// False only for Ricker.
bool growth_has_monotone_flux(GrowthTag tag);

// True when the law takes a shape parameter (PowerRatio, SigmoidRatio,
// AtkinsonAllen); the others ignore it.
bool growth_has_param(GrowthTag tag);

const char* growth_name(GrowthTag tag);
std::optional<GrowthTag> growth_tag_from_name(std::string_view name);

// Throws DomainError when the shape parameter is out of range for the law.
void check_growth_param(const GrowthKind& kind);

} // namespace kcm
