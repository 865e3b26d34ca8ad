// SPDX-License-Identifier: MIT

#include "kcm/classify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "kcm/errors.hpp"
#include "kcm/rng.hpp"

namespace kcm {

namespace {

constexpr double kSignBand = 1e-9;

// Pair slots: 0 = {0,1}, 1 = {0,2}, 2 = {1,2}.
constexpr int kPairA[3] = {0, 0, 1};
constexpr int kPairB[3] = {1, 2, 2};

int slot_of(int a, int b) {  // a < b
    if (a == 0) return b == 1 ? 0 : 1;
    return 2;
}

// Sign data of a configuration: gamma signs (+1/-1) for ordered pairs and
// transverse signs (+1/-1/0 = no planar point) per pair slot.
struct SignData {
    int g[3][3]{};
    int t[3]{};
};

SignData signs_of(const std::array<PairState, 3>& cfg) {
    SignData s;
    for (int slot = 0; slot < 3; ++slot) {
        const int i = kPairA[slot], j = kPairB[slot];
        switch (cfg[slot]) {
            case PairState::PlusMinus:        s.g[i][j] = +1; s.g[j][i] = -1; s.t[slot] = 0;  break;
            case PairState::MinusPlus:        s.g[i][j] = -1; s.g[j][i] = +1; s.t[slot] = 0;  break;
            case PairState::BothPlusAttract:  s.g[i][j] = +1; s.g[j][i] = +1; s.t[slot] = +1; break;
            case PairState::BothPlusRepel:    s.g[i][j] = +1; s.g[j][i] = +1; s.t[slot] = -1; break;
            case PairState::BothMinusAttract: s.g[i][j] = -1; s.g[j][i] = -1; s.t[slot] = +1; break;
            case PairState::BothMinusRepel:   s.g[i][j] = -1; s.g[j][i] = -1; s.t[slot] = -1; break;
        }
    }
    return s;
}

PairState state_from_signs(int gij, int gji, int t) {
    if (gij > 0 && gji < 0) return PairState::PlusMinus;
    if (gij < 0 && gji > 0) return PairState::MinusPlus;
    if (gij > 0) return t > 0 ? PairState::BothPlusAttract : PairState::BothPlusRepel;
    return t > 0 ? PairState::BothMinusAttract : PairState::BothMinusRepel;
}

// Relabel species by the permutation perm (new label = perm[old label]).
std::array<PairState, 3> act(const int perm[3], const std::array<PairState, 3>& cfg) {
    const SignData s = signs_of(cfg);
    int g2[3][3]{};
    int t2[3]{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) g2[perm[i]][perm[j]] = s.g[i][j];
    for (int slot = 0; slot < 3; ++slot) {
        const int a = perm[kPairA[slot]], b = perm[kPairB[slot]];
        t2[slot_of(std::min(a, b), std::max(a, b))] = s.t[slot];
    }
    std::array<PairState, 3> out{};
    for (int slot = 0; slot < 3; ++slot) {
        const int i = kPairA[slot], j = kPairB[slot];
        out[slot] = state_from_signs(g2[i][j], g2[j][i], t2[slot]);
    }
    return out;
}

constexpr int kPerms[6][3] = {
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
};

std::array<PairState, 3> canonical(const std::array<PairState, 3>& cfg) {
    std::array<PairState, 3> best = act(kPerms[0], cfg);
    for (int p = 1; p < 6; ++p) best = std::min(best, act(kPerms[p], cfg));
    return best;
}

int index_sum(const std::array<PairState, 3>& cfg) {
    const SignData s = signs_of(cfg);
    int sum = 0;
    // Axial points: +1 when both invasion signs at q_i agree (repeller or
    // attractor on the simplex), -1 for a saddle.
    for (int i = 0; i < 3; ++i) {
        int out[2], slot = 0;
        for (int j = 0; j < 3; ++j)
            if (j != i) out[slot++] = s.g[i][j];
        sum += (out[0] == out[1]) ? 1 : -1;
    }
    // Planar points carry double weight in the bookkeeping.
    for (int slot = 0; slot < 3; ++slot) {
        if (s.t[slot] == 0) continue;
        const int i = kPairA[slot], j = kPairB[slot];
        const bool boundary_attracts = s.g[i][j] > 0;   // mutual invasion
        const bool transverse_attracts = s.t[slot] > 0; // F_k(v) < 1
        sum += (boundary_attracts == transverse_attracts) ? 2 : -2;
    }
    return sum;
}

// Rule 1: a single pair's transverse sign can be forced by the gamma signs.
// With s = mu_ii v_i + mu_jj v_j (> 1 for a ++ pair, < 1 for a --), the
// identity (U v)_k = s - gamma_ik v_i - gamma_jk v_j makes  ++ with both
// gamma_.k < 0 transversely repelled only by matrices that cannot exist.
bool transverse_feasible(const std::array<PairState, 3>& cfg) {
    const SignData s = signs_of(cfg);
    for (int slot = 0; slot < 3; ++slot) {
        if (s.t[slot] == 0) continue;
        const int i = kPairA[slot], j = kPairB[slot];
        const int k = 3 - i - j;
        const bool bp = s.g[i][j] > 0;
        if (bp && s.t[slot] < 0 && s.g[i][k] < 0 && s.g[j][k] < 0) return false;
        if (!bp && s.t[slot] > 0 && s.g[i][k] > 0 && s.g[j][k] > 0) return false;
    }
    return true;
}

// Rule 2: two planar pairs sharing a species constrain the shared difference
// gamma_ij - gamma_ik with opposite signs.
// (U v)_k - 1 = (gamma_ij - gamma_ik) v_i - gamma_jk v_j for pair {i,j}.
bool coupled_feasible(const std::array<PairState, 3>& cfg) {
    const SignData s = signs_of(cfg);
    for (int i = 0; i < 3; ++i) {
        int rest[2], slot = 0;
        for (int x = 0; x < 3; ++x)
            if (x != i) rest[slot++] = x;
        const int j = rest[0], k = rest[1];
        const int tk = s.t[slot_of(std::min(i, j), std::max(i, j))];
        const int tj = s.t[slot_of(std::min(i, k), std::max(i, k))];
        if (tk == 0 || tj == 0) continue;
        if (tk == +1 && tj == +1 && s.g[j][k] > 0 && s.g[k][j] > 0) return false;
        if (tk == -1 && tj == -1 && s.g[j][k] < 0 && s.g[k][j] < 0) return false;
    }
    return true;
}

// Worst signed margin of U against a target sign pattern: gamma margins,
// transverse margins, and planar-coordinate positivity.  Large negative
// sentinel when the pattern is impossible for this U.
double margin_for(const Mat& U, const SignData& target) {
    double worst = 1e18;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b)
                worst = std::min(worst, target.g[a][b] * (U(a, a) - U(b, a)));
    for (int slot = 0; slot < 3; ++slot) {
        if (target.t[slot] == 0) continue;
        const int i = kPairA[slot], j = kPairB[slot];
        const int k = 3 - i - j;
        const double det2 = U(i, i) * U(j, j) - U(i, j) * U(j, i);
        if (std::abs(det2) < 1e-12) return -1e9;
        const double vi = (U(j, j) - U(i, j)) / det2;
        const double vj = (U(i, i) - U(j, i)) / det2;
        if (vi <= 0.0 || vj <= 0.0) return -1e9;
        const double uvk = U(k, i) * vi + U(k, j) * vj;
        worst = std::min(worst, target.t[slot] * (uvk - 1.0));
        worst = std::min(worst, std::min(vi, vj));
    }
    return worst;
}

struct SearchResult {
    double margin = -1e18;
    Mat witness;
};

// Sign-aware witness search: draw U already matching the gamma signs
// (diagonal 1, off-diagonals sampled on the correct side of 1), then
// hill-climb the worst margin with a shrinking multiplicative step.
SearchResult search_witness(const std::array<PairState, 3>& target,
                            int budget, SplitMix64 rng) {
    const SignData t = signs_of(target);
    SearchResult best;
    int evals = 0;
    while (evals < budget) {
        Mat U(3, 3);
        for (int i = 0; i < 3; ++i) U(i, i) = 1.0;
        for (int slot = 0; slot < 3; ++slot) {
            const int i = kPairA[slot], j = kPairB[slot];
            // gamma_ab = mu_aa - mu_ba fixes mu_ba relative to 1
            for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
                U(b, a) = t.g[a][b] > 0 ? 1.0 - rng.uniform(0.05, 0.95)
                                        : 1.0 + rng.uniform(0.05, 9.0);
            }
        }
        ++evals;
        double m = margin_for(U, t);

        double step = 0.5;
        while (step > 1e-5 && evals < budget && m <= 1e-3) {
            bool improved = false;
            for (int idx = 0; idx < 9; ++idx) {
                for (int dir : {+1, -1}) {
                    Mat V = U;
                    V.a[idx] = std::clamp(U.a[idx] * (1.0 + dir * step), 1e-3, 10.0);
                    ++evals;
                    const double m2 = margin_for(V, t);
                    if (m2 > m) {
                        U = V;
                        m = m2;
                        improved = true;
                    }
                }
            }
            if (!improved) step *= 0.5;
        }
        if (m > best.margin) {
            best.margin = m;
            best.witness = U;
        }
        if (best.margin > 1e-3) break;
    }
    return best;
}

// The 33 realizable canonical signatures, lexicographic, with anchored
// catalog numbers.  Derived by exhaustive enumeration + witness search and
// cross-checked by the unit tests against enumerate_classes output.
using PS = PairState;
constexpr PS BMA = PS::BothMinusAttract, BMR = PS::BothMinusRepel,
             BPA = PS::BothPlusAttract, BPR = PS::BothPlusRepel,
             MP = PS::MinusPlus, PM = PS::PlusMinus;

const std::array<RegistryEntry, 33> kRegistry = {{
    {{BMA, BMA, BMA}, -3, std::nullopt},  //  1
    {{BMA, BMA, BMR}, 1, std::nullopt},   //  2
    {{BMA, BMA, MP}, -3, std::nullopt},   //  3
    {{BMA, BMR, BPA}, 1, std::nullopt},   //  4
    {{BMA, BMR, MP}, 1, std::nullopt},    //  5
    {{BMA, BMR, PM}, 1, std::nullopt},    //  6
    {{BMA, BPA, MP}, 1, std::nullopt},    //  7
    {{BMA, BPR, MP}, -3, 26},             //  8
    {{BMA, MP, MP}, 1, std::nullopt},     //  9
    {{BMA, MP, PM}, -3, std::nullopt},    // 10
    {{BMR, BMR, BPA}, 5, std::nullopt},   // 11
    {{BMR, BMR, MP}, 5, std::nullopt},    // 12
    {{BMR, BPA, BPA}, 5, std::nullopt},   // 13
    {{BMR, BPA, BPR}, 1, std::nullopt},   // 14
    {{BMR, BPA, MP}, 5, std::nullopt},    // 15
    {{BMR, BPA, PM}, 1, std::nullopt},    // 16
    {{BMR, BPR, MP}, 1, std::nullopt},    // 17
    {{BMR, MP, MP}, 5, std::nullopt},     // 18
    {{BMR, MP, PM}, 1, std::nullopt},     // 19
    {{BMR, PM, PM}, 1, std::nullopt},     // 20
    {{BPA, BPA, MP}, 5, std::nullopt},    // 21
    {{BPA, BPR, BPR}, 1, std::nullopt},   // 22
    {{BPA, BPR, MP}, 1, std::nullopt},    // 23
    {{BPA, BPR, PM}, 1, std::nullopt},    // 24
    {{BPA, MP, MP}, 1, std::nullopt},     // 25
    {{BPA, MP, PM}, 1, std::nullopt},     // 26
    {{BPA, PM, PM}, 5, std::nullopt},     // 27
    {{BPR, BPR, BPR}, -3, 33},            // 28
    {{BPR, BPR, MP}, -3, 31},             // 29
    {{BPR, MP, PM}, -3, 29},              // 30
    {{BPR, PM, PM}, 1, std::nullopt},     // 31
    {{MP, MP, MP}, 1, std::nullopt},      // 32
    {{MP, PM, MP}, -3, 27},               // 33
}};

// Raw (uncanonicalized) pair states of a model, with zero-band checks.
std::array<PairState, 3> raw_states(const Model& m) {
    const GammaTable gt = gamma_table(m);
    double scale = 0.0;
    for (double v : m.U.a) scale = std::max(scale, std::abs(v));
    const double band = kSignBand * scale;

    std::array<PairState, 3> cfg{};
    for (int slot = 0; slot < 3; ++slot) {
        const int i = kPairA[slot], j = kPairB[slot];
        const double gij = gt.gamma(i, j), gji = gt.gamma(j, i);
        if (std::abs(gij) <= band || std::abs(gji) <= band)
            throw DegenerateError("classification: invasion sign in the zero band");
        if (gij > 0 && gji < 0) { cfg[slot] = PairState::PlusMinus; continue; }
        if (gij < 0 && gji > 0) { cfg[slot] = PairState::MinusPlus; continue; }
        const int k = 3 - i - j;
        const double det2 = m.U(i, i) * m.U(j, j) - m.U(i, j) * m.U(j, i);
        if (std::abs(det2) <= kSignBand * scale * scale)
            throw DegenerateError("classification: planar pair system singular");
        const double vi = (m.U(j, j) - m.U(i, j)) / det2;
        const double vj = (m.U(i, i) - m.U(j, i)) / det2;
        const double uvk = m.U(k, i) * vi + m.U(k, j) * vj;
        if (std::abs(uvk - 1.0) <= kSignBand)
            throw DegenerateError("classification: transverse factor in the zero band");
        cfg[slot] = state_from_signs(gij > 0 ? 1 : -1, gji > 0 ? 1 : -1,
                                     uvk > 1.0 ? 1 : -1);
    }
    return cfg;
}

} // namespace

const char* pair_state_name(PairState s) {
    switch (s) {
        case PairState::BothMinusAttract: return "--/+";
        case PairState::BothMinusRepel:   return "--/-";
        case PairState::BothPlusAttract:  return "++/+";
        case PairState::BothPlusRepel:    return "++/-";
        case PairState::MinusPlus:        return "-+";
        case PairState::PlusMinus:        return "+-";
    }
    return "?";
}

std::string ClassSignature::str() const {
    std::string out;
    const char* labels[3] = {"12:", "13:", "23:"};
    for (int slot = 0; slot < 3; ++slot) {
        if (slot) out += ' ';
        out += labels[slot];
        out += pair_state_name(states[slot]);
    }
    return out;
}

ClassSignature make_signature(const std::array<PairState, 3>& raw) {
    ClassSignature sig;
    sig.states = canonical(raw);
    sig.boundary_index_sum = index_sum(sig.states);
    sig.positive_index = (1 - sig.boundary_index_sum) / 4;
    return sig;
}

const std::array<RegistryEntry, 33>& class_registry() { return kRegistry; }

ClassId classify3(const Model& m) {
    if (m.n() != 3) throw DomainError("classify3: 3-species models only");
    ClassId id;
    id.signature = make_signature(raw_states(m));

    for (size_t r = 0; r < kRegistry.size(); ++r) {
        if (kRegistry[r].states == id.signature.states) {
            id.ordinal = static_cast<int>(r) + 1;
            id.catalog_number = kRegistry[r].catalog_number;
            break;
        }
    }
    if (id.ordinal == 0)
        throw ContradictionError("classify3: signature " + id.signature.str() +
                                 " is not a realizable class");
    switch (id.signature.positive_index) {
        case 0:  id.hint = VerdictHint::NoInteriorFixedPoint; break;
        case -1: id.hint = VerdictHint::InteriorSaddle; break;
        default: id.hint = VerdictHint::InteriorIndexPlusOne; break;
    }
    return id;
}

int classify2(const Model& m) {
    if (m.n() != 2) throw DomainError("classify2: 2-species models only");
    const GammaTable gt = gamma_table(m);
    double scale = 0.0;
    for (double v : m.U.a) scale = std::max(scale, std::abs(v));
    const double g01 = gt.gamma(0, 1), g10 = gt.gamma(1, 0);
    if (std::abs(g01) <= kSignBand * scale || std::abs(g10) <= kSignBand * scale)
        throw DegenerateError("classify2: invasion sign in the zero band");
    if ((g01 > 0) != (g10 > 0)) return 1;  // exclusion
    return g01 > 0 ? 2 : 3;                // coexistence : bistability
}

const char* witness_status_name(WitnessStatus s) {
    switch (s) {
        case WitnessStatus::Realized:             return "Realized";
        case WitnessStatus::IndexExcluded:        return "IndexExcluded";
        case WitnessStatus::TransverseInfeasible: return "TransverseInfeasible";
        case WitnessStatus::CoupledInfeasible:    return "CoupledInfeasible";
        case WitnessStatus::SearchInconclusive:   return "SearchInconclusive";
    }
    return "?";
}

ClassAtlas enumerate_classes(int budget_per_signature, std::uint64_t seed, Exec policy) {
    if (budget_per_signature < 1) throw DomainError("enumerate_classes: budget must be positive");

    ClassAtlas atlas;
    atlas.raw_count = 6 * 6 * 6;

    std::set<std::array<PairState, 3>> orbit_set;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c)
                orbit_set.insert(canonical({static_cast<PairState>(a),
                                            static_cast<PairState>(b),
                                            static_cast<PairState>(c)}));
    atlas.orbit_count = static_cast<int>(orbit_set.size());

    std::vector<int> candidates;  // record slots that need a witness search
    for (const std::array<PairState, 3>& rep : orbit_set) {
        OrbitRecord rec;
        rec.signature = make_signature(rep);
        const int sum = rec.signature.boundary_index_sum;
        if (sum != -3 && sum != 1 && sum != 5) {
            rec.status = WitnessStatus::IndexExcluded;
            rec.note = "boundary index sum " + std::to_string(sum) +
                       " violates the index bookkeeping";
        } else {
            ++atlas.index_passing;
            if (!transverse_feasible(rep)) {
                rec.status = WitnessStatus::TransverseInfeasible;
                rec.note = "a planar transverse sign is forced the other way "
                           "by the invasion signs";
            } else if (!coupled_feasible(rep)) {
                rec.status = WitnessStatus::CoupledInfeasible;
                rec.note = "two planar transverse signs demand opposite signs "
                           "of the same invasion-sign difference";
            } else {
                candidates.push_back(static_cast<int>(atlas.orbits.size()));
            }
        }
        for (size_t r = 0; r < kRegistry.size(); ++r) {
            if (kRegistry[r].states == rec.signature.states) {
                rec.ordinal = static_cast<int>(r) + 1;
                rec.catalog_number = kRegistry[r].catalog_number;
            }
        }
        atlas.orbits.push_back(std::move(rec));
    }

    // Witness searches are independent; each candidate owns an RNG stream
    // derived from its slot, so the outcome is identical for any policy.
    std::vector<SearchResult> results(candidates.size());
    parallel_for(static_cast<int>(candidates.size()), policy, [&](int c) {
        results[c] = search_witness(atlas.orbits[candidates[c]].signature.states,
                                    budget_per_signature,
                                    stream_for(seed, static_cast<std::uint64_t>(c)));
    });

    for (size_t c = 0; c < candidates.size(); ++c) {
        OrbitRecord& rec = atlas.orbits[candidates[c]];
        if (results[c].margin > 1e-3) {
            rec.status = WitnessStatus::Realized;
            rec.witness = results[c].witness;
            rec.witness_margin = results[c].margin;
            ++atlas.realized;
        } else {
            rec.status = WitnessStatus::SearchInconclusive;
            rec.witness_margin = results[c].margin;
            rec.note = "no witness found within budget";
        }
    }

    // Cross-check: every witness must classify back to its own signature.
    for (const OrbitRecord& rec : atlas.orbits) {
        if (rec.status != WitnessStatus::Realized) continue;
        const Model check = make_model(
            {SpeciesLaw{GrowthKind::leslie_gower(), 1.0},
             SpeciesLaw{GrowthKind::leslie_gower(), 1.0},
             SpeciesLaw{GrowthKind::leslie_gower(), 1.0}},
            *rec.witness);
        if (classify3(check).signature.states != rec.signature.states)
            throw ContradictionError("enumerate_classes: witness for " +
                                     rec.signature.str() +
                                     " classifies to a different signature");
    }
    return atlas;
}

} // namespace kcm
