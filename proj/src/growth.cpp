// SPDX-License-Identifier: MIT

#include "kcm/growth.hpp"

#include <cmath>
#include <string>

#include "kcm/errors.hpp"

namespace kcm {

namespace {

void check_args(const GrowthKind& kind, double z, double r) {
    if (!(z >= 0.0)) throw DomainError("growth: load z must be >= 0");
    if (!(r > 0.0)) throw DomainError("growth: rate r must be > 0");
    check_growth_param(kind);
}

} // namespace

void check_growth_param(const GrowthKind& kind) {
    switch (kind.tag) {
        case GrowthTag::PowerRatio:
        case GrowthTag::SigmoidRatio:
            if (!(kind.param > 0.0 && kind.param <= 1.0))
                throw DomainError(std::string(growth_name(kind.tag)) +
                                  ": exponent s must lie in (0, 1]");
            break;
        case GrowthTag::AtkinsonAllen:
            if (!(kind.param > 0.0 && kind.param < 1.0))
                throw DomainError("AtkinsonAllen: mixing weight c must lie in (0, 1)");
            break;
        default:
            break;
    }
}

double growth(const GrowthKind& kind, double z, double r) {
    check_args(kind, z, r);
    // Break-even is exact by fiat: every law satisfies f(r, r) = 1
    // analytically, but only some evaluate to 1.0 bitwise (AtkinsonAllen does
    // not).  Fixed-point residuals and sign tests rely on exactness here.
    if (z == r) return 1.0;

    const double s = kind.param;
    switch (kind.tag) {
        case GrowthTag::LeslieGower:
            return (1.0 + r) / (1.0 + z);
        case GrowthTag::PowerRatio:
            return std::pow((1.0 + r) / (1.0 + z), s);
        case GrowthTag::SigmoidRatio:
            return (1.0 + std::pow(r, s)) / (1.0 + std::pow(z, s));
        case GrowthTag::AtkinsonAllen:
            return (1.0 - s) * (1.0 + r) / (1.0 + z) + s;
        case GrowthTag::LogRatio:
            return (1.0 + std::log1p(r)) / (1.0 + std::log1p(z));
        case GrowthTag::Ricker:
            return std::exp(r - z);
    }
    throw DomainError("growth: unknown law");
}

double growth_slope(const GrowthKind& kind, double z, double r) {
    check_args(kind, z, r);
    const double s = kind.param;
    switch (kind.tag) {
        case GrowthTag::LeslieGower:
            return -(1.0 + r) / ((1.0 + z) * (1.0 + z));
        case GrowthTag::PowerRatio:
            return -s * std::pow((1.0 + r) / (1.0 + z), s) / (1.0 + z);
        case GrowthTag::SigmoidRatio: {
            // -inf at z = 0 for s < 1; that is the correct limit.
            const double den = 1.0 + std::pow(z, s);
            return -(1.0 + std::pow(r, s)) * s * std::pow(z, s - 1.0) / (den * den);
        }
        case GrowthTag::AtkinsonAllen:
            return -(1.0 - s) * (1.0 + r) / ((1.0 + z) * (1.0 + z));
        case GrowthTag::LogRatio: {
            const double den = 1.0 + std::log1p(z);
            return -(1.0 + std::log1p(r)) / ((1.0 + z) * den * den);
        }
        case GrowthTag::Ricker:
            return -std::exp(r - z);
    }
    throw DomainError("growth_slope: unknown law");
}

double growth_flux(const GrowthKind& kind, double z, double r) {
    check_args(kind, z, r);
    const double s = kind.param;
    switch (kind.tag) {
        case GrowthTag::LeslieGower:
            return (1.0 + r) / ((1.0 + z) * (1.0 + z));
        case GrowthTag::PowerRatio:
            return std::pow((1.0 + r) / (1.0 + z), s) * (1.0 + z - s * z) / (1.0 + z);
        case GrowthTag::SigmoidRatio: {
            // f + z df/dz collapses to f * (1 + (1-s) z^s) / (1 + z^s),
            // finite at z = 0 even though the slope diverges there.
            const double zs = std::pow(z, s);
            return (1.0 + std::pow(r, s)) / (1.0 + zs) * (1.0 + (1.0 - s) * zs) / (1.0 + zs);
        }
        case GrowthTag::AtkinsonAllen:
            return (1.0 - s) * (1.0 + r) / ((1.0 + z) * (1.0 + z)) + s;
        case GrowthTag::LogRatio: {
            // f + z df/dz = f * (1 - z / ((1+z)(1+log(1+z)))), always positive
            // because z/(1+z) < 1 and the log factor is >= 1.
            const double den = 1.0 + std::log1p(z);
            return (1.0 + std::log1p(r)) / den * (1.0 - z / ((1.0 + z) * den));
        }
        case GrowthTag::Ricker:
            return std::exp(r - z) * (1.0 - z);
    }
    throw DomainError("growth_flux: unknown law");
}

bool growth_has_monotone_flux(GrowthTag tag) {
    return tag != GrowthTag::Ricker;
}

bool growth_has_param(GrowthTag tag) {
    return tag == GrowthTag::PowerRatio || tag == GrowthTag::SigmoidRatio ||
           tag == GrowthTag::AtkinsonAllen;
}

const char* growth_name(GrowthTag tag) {
    switch (tag) {
        case GrowthTag::LeslieGower:   return "LeslieGower";
        case GrowthTag::PowerRatio:    return "PowerRatio";
        case GrowthTag::SigmoidRatio:  return "SigmoidRatio";
        case GrowthTag::AtkinsonAllen: return "AtkinsonAllen";
        case GrowthTag::LogRatio:      return "LogRatio";
        case GrowthTag::Ricker:        return "Ricker";
    }
    return "?";
}

std::optional<GrowthTag> growth_tag_from_name(std::string_view name) {
    for (GrowthTag tag : {GrowthTag::LeslieGower, GrowthTag::PowerRatio,
                          GrowthTag::SigmoidRatio, GrowthTag::AtkinsonAllen,
                          GrowthTag::LogRatio, GrowthTag::Ricker}) {
        if (name == growth_name(tag)) return tag;
    }
    return std::nullopt;
}

} // namespace kcm
