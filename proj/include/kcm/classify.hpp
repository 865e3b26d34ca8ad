// SPDX-License-Identifier: MIT
//
// Boundary classification of 3-species models.
//
// The class of a model is the S3-orbit of its boundary fingerprint: one state
// per species pair, built from the invasion signs (gamma_ij, gamma_ji) and,
// when a planar fixed point exists, the sign of its transverse growth factor.
// Six states per pair x three pairs = 216 raw fingerprints, 50 orbits under
// relabeling, of which exactly 33 are realizable by competition matrices.
// Each realizable class fixes the boundary index sum (in {-3, 1, 5}) and
// through it the index of the interior fixed point, (1 - sum) / 4.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcm/equilibria.hpp"
#include "kcm/model.hpp"
#include "kcm/parallel.hpp"

namespace kcm {

// State of an unordered pair {i, j}, i < j.  "Attract"/"Repel" refer to the
// transverse direction at the pair's planar fixed point: Attract means the
// third species' growth factor there is < 1 (the plane attracts).
// The enumerator order defines the canonical (lexicographic) order and must
// not be changed: class ordinals depend on it.
enum class PairState : std::uint8_t {
    BothMinusAttract,  // gamma_ij < 0, gamma_ji < 0, transverse attracts
    BothMinusRepel,    // gamma_ij < 0, gamma_ji < 0, transverse repels
    BothPlusAttract,   // gamma_ij > 0, gamma_ji > 0, transverse attracts
    BothPlusRepel,     // gamma_ij > 0, gamma_ji > 0, transverse repels
    MinusPlus,         // gamma_ij < 0, gamma_ji > 0 (no planar point)
    PlusMinus,         // gamma_ij > 0, gamma_ji < 0 (no planar point)
};

const char* pair_state_name(PairState s);  // "--/+", "--/-", "++/+", "++/-", "-+", "+-"

struct ClassSignature {
    // Canonical representative, pairs in order (1,2), (1,3), (2,3).
    std::array<PairState, 3> states{};
    int boundary_index_sum = 0;  // axial indices + twice planar indices
    int positive_index     = 0;  // (1 - boundary_index_sum) / 4:
                                 // 0 none, +1 attractor-or-spiral, -1 saddle

    auto operator<=>(const ClassSignature&) const = default;

    // e.g. "12:+- 13:++/+ 23:-+"
    std::string str() const;
};

// Canonicalize a raw pair-state triple: the lexicographic minimum over the
// six species relabelings.  Also fills in the index bookkeeping.
ClassSignature make_signature(const std::array<PairState, 3>& raw);

enum class VerdictHint {
    NoInteriorFixedPoint,
    InteriorSaddle,
    InteriorIndexPlusOne,
};

struct ClassId {
    ClassSignature signature;
    int ordinal = 0;                     // 1..33, lexicographic rank among
                                         // realizable classes
    std::optional<int> catalog_number;   // position in the standard 33-class
                                         // catalog, where anchored
    VerdictHint hint = VerdictHint::NoInteriorFixedPoint;
};

// Classify a 3-species model.  Throws DegenerateError when any gamma or any
// transverse factor sits in the zero band (the model lies on a class
// boundary), ContradictionError if the signature is not one of the 33
// realizable classes (impossible for a valid model; indicates a bug).
ClassId classify3(const Model& m);

// Two-species outcome up to relabeling:
//   1 = exclusion (one invasion sign each way),
//   2 = coexistence (mutual invasion, interior attractor),
//   3 = bistability (mutual exclusion, interior saddle).
int classify2(const Model& m);

// --- exhaustive enumeration -------------------------------------------------

enum class WitnessStatus {
    Realized,              // witness matrix found
    IndexExcluded,         // boundary index sum not in {-3, 1, 5}
    TransverseInfeasible,  // a single pair's transverse sign is forced
    CoupledInfeasible,     // two pairs' transverse signs conflict
    SearchInconclusive,    // passes every sign test but no witness in budget
};

const char* witness_status_name(WitnessStatus s);

struct OrbitRecord {
    ClassSignature signature;
    WitnessStatus status = WitnessStatus::SearchInconclusive;
    std::optional<Mat> witness;   // competition matrix U (Realized only)
    double witness_margin = 0.0;  // worst sign margin of the witness
    int ordinal = 0;              // rank among the 33 realizable, 0 otherwise
    std::optional<int> catalog_number;
    std::string note;
};

struct ClassAtlas {
    std::vector<OrbitRecord> orbits;  // all 50, lexicographic order
    int raw_count = 0;       // 216
    int orbit_count = 0;     // 50
    int index_passing = 0;   // 45
    int realized = 0;        // 33
};

// Enumerate every orbit and search for a witness competition matrix for each
// candidate.  The search is sign-aware (draws matrices already matching the
// gamma pattern, then hill-climbs the worst margin) and deterministic: each
// orbit uses its own RNG stream derived from the seed, so results do not
// depend on the execution policy.  A found witness is re-classified as a
// cross-check; disagreement throws ContradictionError.
ClassAtlas enumerate_classes(int budget_per_signature = 10000,
                             std::uint64_t seed = 20240001,
                             Exec policy = Exec::Serial);

// The 33 realizable canonical signatures in lexicographic order, with their
// anchored catalog numbers.  This table is the ordinal authority; the unit
// tests re-derive it through enumerate_classes and compare.
struct RegistryEntry {
    std::array<PairState, 3> states;
    int boundary_index_sum;
    std::optional<int> catalog_number;
};
const std::array<RegistryEntry, 33>& class_registry();

} // namespace kcm
