// SPDX-License-Identifier: MIT
//
// JSON model descriptions.
//
// Schema:
//   {
//     "species": [
//       {"growth": "LeslieGower", "r": 1.0},
//       {"growth": "AtkinsonAllen", "r": 1.0, "params": {"c": 0.3}},
//       ...
//     ],
//     "U": [[1, "5/4", 0.5], ...],        // competition matrix, or
//     "A": [[...], ...],                  // load matrix a_ij = r_i mu_ij
//                                         // (exactly one of U / A)
//     "sweep": {"target": "r2", "from": 0.05, "to": 0.3, "grid": 200}  // opt.
//   }
// Matrix entries and rates may be JSON numbers or strings; strings may be
// exact fractions ("7/6") so coefficients that are not representable in
// decimal survive the round trip bit-for-bit.

#pragma once

#include <optional>
#include <string>

#include "kcm/dynamics.hpp"
#include "kcm/model.hpp"

namespace kcm {

struct SweepSpec {
    std::string target;  // e.g. "r2", "c3", "s1"
    ParamRef ref;
    double from = 0.0;
    double to = 0.0;
    int grid = 0;
};

struct ModelConfig {
    Model model;
    std::optional<SweepSpec> sweep;
    std::string canonical;  // canonical JSON text of the model
    std::string digest;     // 64-bit FNV-1a of the canonical text, hex
};

// Parse and validate a JSON model description; throws DomainError with a
// message naming the offending key.
ModelConfig parse_config(const std::string& json_text);

// Canonical JSON for a model: fixed key order, U form, shortest round-trip
// number rendering.  Stable input for the digest.
std::string canonical_json(const Model& m);

// 64-bit FNV-1a of a byte string, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

} // namespace kcm
