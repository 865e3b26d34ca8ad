// SPDX-License-Identifier: MIT
//
// kcmap: command-line front end.
//
//   kcmap classify   --config model.json
//   kcmap permanence --config model.json
//   kcmap simulate   --config model.json --x0 0.1,0.2,0.3 --steps 20000
//   kcmap simplex    --config model.json --rays 500 --settle 200
//   kcmap scan       --config model.json [--target r2 --from A --to B]
//   kcmap atlas      [--budget N --seed S]
//   kcmap models
//
// Exit codes: 0 success, 2 bad input (config/arguments), 3 degenerate model
// (class boundary, singular system, missing simplex), 4 numerical failure or
// internal inconsistency.

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kcm/classify.hpp"
#include "kcm/config.hpp"
#include "kcm/csv.hpp"
#include "kcm/dynamics.hpp"
#include "kcm/equilibria.hpp"
#include "kcm/errors.hpp"
#include "kcm/model.hpp"
#include "kcm/parallel.hpp"
#include "kcm/permanence.hpp"

namespace {

using json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt_vec(const kcm::Vec& x) {
    std::string s = "(";
    for (size_t i = 0; i < x.size(); ++i) {
        if (i) s += ", ";
        s += fmt(x[i]);
    }
    return s + ")";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw kcm::DomainError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw kcm::DomainError("cannot open output file: " + out_path);
    out << text;
}

kcm::Exec policy_from_jobs(int jobs) {
    if (jobs == 1) return kcm::Exec::Serial;
    if (jobs > 1) kcm::set_max_threads(jobs);
    return kcm::Exec::Parallel;
}

// Shared model-loading step: parse, then warn (or fail, for commands that
// need the invariant surface) when the model does not carry one.
kcm::ModelConfig load_model(const std::string& path, bool require_simplex) {
    kcm::ModelConfig cfg = kcm::parse_config(slurp(path));
    const kcm::AdmissibilityReport rep = kcm::validate(cfg.model);
    if (!rep.carries_simplex) {
        std::string detail;
        for (const kcm::AdmissibilityCheck& c : rep.checks)
            if (!c.pass) detail += "\n  " + c.condition;
        if (require_simplex)
            throw kcm::DegenerateError(
                "model does not carry an invariant simplex:" + detail);
        std::fprintf(stderr,
                     "warning: model does not carry an invariant simplex:%s\n",
                     detail.c_str());
    }
    return cfg;
}

std::string fp_label(const kcm::FixedPoint& fp) {
    if (fp.support.empty()) return "origin";
    if (fp.support.size() == fp.coords.size()) return "interior";
    if (fp.support.size() == 1) return "axial " + std::to_string(fp.support[0] + 1);
    std::string s = "planar {";
    for (size_t i = 0; i < fp.support.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(fp.support[i] + 1);
    }
    return s + "}";
}

json fp_json(const kcm::FixedPoint& fp) {
    json j;
    j["label"] = fp_label(fp);
    json sup = json::array();
    for (int i : fp.support) sup.push_back(i + 1);
    j["support"] = std::move(sup);
    j["coords"] = fp.coords;
    j["type"] = kcm::local_type_name(fp.local_type);
    j["index"] = fp.index;
    json ie = json::array();
    for (const kcm::Cplx& e : fp.internal_eigs)
        ie.push_back({e.real(), e.imag()});
    j["internal_eigenvalues"] = std::move(ie);
    json xe = json::array();
    for (const auto& [sp, f] : fp.external_eigs)
        xe.push_back({{"species", sp + 1}, {"growth_factor", f}});
    j["external_growth_factors"] = std::move(xe);
    return j;
}

// --- classify ----------------------------------------------------------------

int run_classify(const kcm::ModelConfig& cfg, const std::string& format,
                 const std::string& out) {
    const kcm::Model& m = cfg.model;
    if (m.n() == 2) {
        const int outcome = kcm::classify2(m);
        const char* names[] = {"", "exclusion", "coexistence", "bistability"};
        if (format == "json") {
            json j;
            j["digest"] = cfg.digest;
            j["species"] = 2;
            j["outcome"] = outcome;
            j["name"] = names[outcome];
            emit(j.dump(2) + "\n", out);
        } else {
            emit("model digest: " + cfg.digest + "\n" +
                 "two-species outcome: " + std::to_string(outcome) + " (" +
                 names[outcome] + ")\n", out);
        }
        return 0;
    }
    if (m.n() != 3)
        throw kcm::DomainError("classify: 2- or 3-species models only");

    const kcm::ClassId id = kcm::classify3(m);
    const kcm::EquilibriumSet eq = kcm::equilibria(m);
    std::vector<const kcm::FixedPoint*> fps;
    const kcm::FixedPoint origin = kcm::origin_point(m);
    for (const kcm::FixedPoint& fp : eq.axial) fps.push_back(&fp);
    for (const kcm::FixedPoint& fp : eq.planar) fps.push_back(&fp);
    if (eq.positive) fps.push_back(&*eq.positive);

    const char* hint =
        id.hint == kcm::VerdictHint::NoInteriorFixedPoint ? "no interior fixed point"
        : id.hint == kcm::VerdictHint::InteriorSaddle     ? "interior saddle"
                                                          : "interior index +1";
    if (format == "json") {
        json j;
        j["digest"] = cfg.digest;
        j["species"] = 3;
        j["class"] = {{"ordinal", id.ordinal},
                      {"catalog_number", id.catalog_number
                                             ? json(*id.catalog_number)
                                             : json(nullptr)},
                      {"signature", id.signature.str()},
                      {"boundary_index_sum", id.signature.boundary_index_sum},
                      {"positive_index", id.signature.positive_index},
                      {"hint", hint}};
        json pts = json::array();
        pts.push_back(fp_json(origin));
        for (const kcm::FixedPoint* fp : fps) pts.push_back(fp_json(*fp));
        j["fixed_points"] = std::move(pts);
        j["degenerate"] = eq.degenerate;
        if (eq.degenerate) j["degeneracy_note"] = eq.degeneracy_note;
        emit(j.dump(2) + "\n", out);
        return 0;
    }

    std::string text = "model digest: " + cfg.digest + "\n";
    text += "class: ordinal " + std::to_string(id.ordinal);
    if (id.catalog_number)
        text += " (catalog " + std::to_string(*id.catalog_number) + ")";
    text += "\nsignature: " + id.signature.str() + "\n";
    text += "boundary index sum: " +
            std::to_string(id.signature.boundary_index_sum) +
            "   interior: " + hint + "\n";
    text += "fixed points:\n";
    auto line = [&](const kcm::FixedPoint& fp) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "  %-12s %-34s %s\n",
                      fp_label(fp).c_str(), fmt_vec(fp.coords).c_str(),
                      kcm::local_type_name(fp.local_type));
        text += buf;
    };
    line(origin);
    for (const kcm::FixedPoint* fp : fps) line(*fp);
    if (eq.degenerate) text += "degenerate: " + eq.degeneracy_note + "\n";
    emit(text, out);
    return 0;
}

// --- permanence ----------------------------------------------------------------

int run_permanence(const kcm::ModelConfig& cfg, const std::string& format,
                   const std::string& out) {
    const kcm::PermanenceVerdict v = kcm::verdict(cfg.model);
    if (format == "json") {
        json j;
        j["digest"] = cfg.digest;
        j["verdict"] = kcm::verdict_name(v.verdict);
        j["evidence"] = kcm::evidence_name(v.evidence);
        if (v.certificate) {
            j["certificate"] = {{"nu", v.certificate->nu},
                                {"margin", v.certificate->margin},
                                {"impermanence", v.certificate->impermanence}};
        } else {
            j["certificate"] = nullptr;
        }
        if (v.rho_report) {
            json g = json::array();
            for (int i = 0; i < 3; ++i) {
                json row = json::array();
                for (int k = 0; k < 3; ++k) row.push_back(v.rho_report->G(i, k));
                g.push_back(std::move(row));
            }
            j["rho"] = {{"value", v.rho_report->rho},
                        {"cycle_present", v.rho_report->cycle_present},
                        {"invasion_log_rates", std::move(g)}};
        } else {
            j["rho"] = nullptr;
        }
        j["cross_checks"] = v.cross_checks;
        j["warnings"] = v.warnings;
        emit(j.dump(2) + "\n", out);
        return 0;
    }

    std::string text = "model digest: " + cfg.digest + "\n";
    text += std::string("verdict: ") + kcm::verdict_name(v.verdict) + "\n";
    text += std::string("evidence: ") + kcm::evidence_name(v.evidence) + "\n";
    if (v.certificate) {
        text += "certificate: nu = " + fmt_vec(v.certificate->nu) +
                ", margin = " + fmt(v.certificate->margin) +
                (v.certificate->impermanence ? " (impermanence)" : " (permanence)") +
                "\n";
    }
    if (v.rho_report) {
        text += "cycle criterion: rho = " + fmt(v.rho_report->rho) +
                (v.rho_report->cycle_present ? " (boundary cycle present)"
                                             : " (no boundary cycle)") +
                "\n";
    }
    for (const std::string& s : v.cross_checks) text += "  check: " + s + "\n";
    for (const std::string& s : v.warnings) text += "  warning: " + s + "\n";
    emit(text, out);
    return 0;
}

// --- simulate / simplex ------------------------------------------------------

int run_simulate(const kcm::ModelConfig& cfg, const std::vector<double>& x0,
                 int steps, double tol, const std::string& format,
                 const std::string& out) {
    const kcm::SimulationResult res = kcm::simulate(cfg.model, x0, steps, tol);
    if (format == "csv") {
        emit(kcm::orbit_csv(res.orbit), out);
        return 0;
    }
    if (format == "json") {
        json j;
        j["digest"] = cfg.digest;
        j["steps"] = res.orbit.points.size() - 1;
        j["truncated"] = res.orbit.truncated;
        j["omega"] = {{"kind", kcm::omega_kind_name(res.omega.kind)},
                      {"fixed_point", res.omega.fixed_point
                                          ? json(fp_label(*res.omega.fixed_point))
                                          : json(nullptr)},
                      {"tail_diameter", res.omega.tail_diameter},
                      {"final_distance", res.omega.final_distance},
                      {"min_boundary_distance", res.omega.min_boundary_distance},
                      {"note", res.omega.note}};
        j["final_state"] = res.orbit.points.back();
        emit(j.dump(2) + "\n", out);
        return 0;
    }
    std::string text = "model digest: " + cfg.digest + "\n";
    text += "steps: " + std::to_string(res.orbit.points.size() - 1) +
            (res.orbit.truncated ? " (settled early)" : "") + "\n";
    text += std::string("omega limit: ") + kcm::omega_kind_name(res.omega.kind);
    if (res.omega.fixed_point) text += " at " + fp_label(*res.omega.fixed_point);
    text += "\n";
    text += "tail diameter: " + fmt(res.omega.tail_diameter) +
            "   distance to nearest fixed point: " + fmt(res.omega.final_distance) +
            "\n";
    text += "min boundary distance: " + fmt(res.omega.min_boundary_distance) + "\n";
    text += "final state: " + fmt_vec(res.orbit.points.back()) + "\n";
    text += "note: " + res.omega.note + "\n";
    emit(text, out);
    return 0;
}

int run_simplex(const kcm::ModelConfig& cfg, int rays, int settle, int jobs,
                const std::string& format, const std::string& out) {
    const std::vector<kcm::Vec> pts =
        kcm::sample_simplex(cfg.model, rays, settle, policy_from_jobs(jobs));
    if (format == "json") {
        json j;
        j["digest"] = cfg.digest;
        j["rays"] = rays;
        j["settle_steps"] = settle;
        j["points"] = pts;
        emit(j.dump(2) + "\n", out);
        return 0;
    }
    if (format == "text") {
        // Unordered check: on a decreasing invariant surface no two points
        // are componentwise ordered.
        int ordered_pairs = 0;
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t k = i + 1; k < pts.size(); ++k) {
                bool le = true, ge = true;
                for (size_t c = 0; c < pts[i].size(); ++c) {
                    le = le && pts[i][c] <= pts[k][c];
                    ge = ge && pts[i][c] >= pts[k][c];
                }
                if (le || ge) ++ordered_pairs;
            }
        std::string text = "model digest: " + cfg.digest + "\n";
        text += "sampled " + std::to_string(pts.size()) + " surface points (" +
                std::to_string(settle) + " settle steps)\n";
        text += "componentwise-ordered pairs: " + std::to_string(ordered_pairs) +
                "\n";
        emit(text, out);
        return 0;
    }
    emit(kcm::samples_csv(pts), out);
    return 0;
}

// --- scan ----------------------------------------------------------------------

int run_scan(const kcm::ModelConfig& cfg, std::string target, double from,
             double to, int grid, bool with_l1, int jobs,
             const std::string& format, const std::string& out) {
    if (target.empty()) {
        if (!cfg.sweep)
            throw kcm::DomainError(
                "scan: no --target given and the config has no \"sweep\" block");
        target = cfg.sweep->target;
        from = cfg.sweep->from;
        to = cfg.sweep->to;
        if (grid <= 0) grid = cfg.sweep->grid;
    }
    if (grid <= 0) grid = 200;
    const std::optional<kcm::ParamRef> ref = kcm::parse_param_ref(target);
    if (!ref) throw kcm::DomainError("scan: bad target \"" + target + "\"");

    const kcm::Exec policy = policy_from_jobs(jobs);
    const kcm::ScanResult res =
        with_l1 ? kcm::ns_scan_with_l1(cfg.model, *ref, from, to, grid, policy)
                : kcm::ns_scan(cfg.model, *ref, from, to, grid, policy);

    if (format == "csv") {
        emit(kcm::scan_csv(res), out);
        return 0;
    }
    if (format == "json") {
        json j;
        j["digest"] = cfg.digest;
        j["param"] = res.param_name;
        j["from"] = from;
        j["to"] = to;
        j["grid"] = grid;
        if (res.crossing) {
            j["crossing"] = {{"param", res.crossing->param},
                             {"eigenvalue",
                              {res.crossing->eigenvalue.real(),
                               res.crossing->eigenvalue.imag()}},
                             {"modulus_residual", res.crossing->modulus_residual}};
        } else {
            j["crossing"] = nullptr;
        }
        j["l1"] = res.l1 ? json(*res.l1) : json(nullptr);
        j["notes"] = res.notes;
        emit(j.dump(2) + "\n", out);
        return 0;
    }
    std::string text = "model digest: " + cfg.digest + "\n";
    text += "parameter: " + res.param_name + " in [" + fmt(from) + ", " +
            fmt(to) + "], " + std::to_string(grid) + " grid points\n";
    if (res.crossing) {
        text += "crossing: " + res.param_name + " = " + fmt(res.crossing->param) +
                ", eigenvalue = " + fmt(res.crossing->eigenvalue.real()) + " + " +
                fmt(res.crossing->eigenvalue.imag()) + "i, |modulus - 1| = " +
                fmt(res.crossing->modulus_residual) + "\n";
        if (res.l1)
            text += "first Lyapunov coefficient: " + fmt(*res.l1) +
                    (*res.l1 < 0 ? " (stable invariant curve branches off)"
                                 : " (unstable branch)") +
                    "\n";
    } else {
        text += "no crossing of the unit circle by a complex pair in range\n";
    }
    for (const std::string& s : res.notes) text += "  note: " + s + "\n";
    emit(text, out);
    return 0;
}

// --- atlas / models ------------------------------------------------------------

int run_atlas(int budget, std::uint64_t seed, int jobs,
              const std::string& format, const std::string& out) {
    const kcm::ClassAtlas atlas =
        kcm::enumerate_classes(budget, seed, policy_from_jobs(jobs));
    if (format == "csv") {
        emit(kcm::atlas_csv(atlas), out);
        return 0;
    }
    if (format == "json") {
        json j;
        j["raw_count"] = atlas.raw_count;
        j["orbit_count"] = atlas.orbit_count;
        j["index_passing"] = atlas.index_passing;
        j["realized"] = atlas.realized;
        json recs = json::array();
        for (const kcm::OrbitRecord& r : atlas.orbits) {
            json rec;
            rec["signature"] = r.signature.str();
            rec["boundary_index_sum"] = r.signature.boundary_index_sum;
            rec["status"] = kcm::witness_status_name(r.status);
            rec["ordinal"] = r.ordinal ? json(r.ordinal) : json(nullptr);
            rec["catalog_number"] =
                r.catalog_number ? json(*r.catalog_number) : json(nullptr);
            if (r.witness) {
                json rows = json::array();
                for (int i = 0; i < 3; ++i) {
                    json row = json::array();
                    for (int k = 0; k < 3; ++k) row.push_back((*r.witness)(i, k));
                    rows.push_back(std::move(row));
                }
                rec["witness"] = std::move(rows);
                rec["witness_margin"] = r.witness_margin;
            }
            if (!r.note.empty()) rec["note"] = r.note;
            recs.push_back(std::move(rec));
        }
        j["orbits"] = std::move(recs);
        emit(j.dump(2) + "\n", out);
        return 0;
    }
    std::string text;
    text += "raw fingerprints: " + std::to_string(atlas.raw_count) + "\n";
    text += "relabeling orbits: " + std::to_string(atlas.orbit_count) + "\n";
    text += "index-compatible: " + std::to_string(atlas.index_passing) + "\n";
    text += "realized classes: " + std::to_string(atlas.realized) + "\n\n";
    for (const kcm::OrbitRecord& r : atlas.orbits) {
        char buf[192];
        if (r.status == kcm::WitnessStatus::Realized) {
            std::snprintf(buf, sizeof buf, "%2d  %-28s sum %+d  margin %.3g%s\n",
                          r.ordinal, r.signature.str().c_str(),
                          r.signature.boundary_index_sum, r.witness_margin,
                          r.catalog_number
                              ? ("  catalog " + std::to_string(*r.catalog_number))
                                    .c_str()
                              : "");
        } else {
            std::snprintf(buf, sizeof buf, " -  %-28s sum %+d  %s\n",
                          r.signature.str().c_str(),
                          r.signature.boundary_index_sum,
                          kcm::witness_status_name(r.status));
        }
        text += buf;
    }
    emit(text, out);
    return 0;
}

int run_models(const std::string& format, const std::string& out) {
    struct Row {
        kcm::GrowthTag tag;
        const char* formula;
        const char* param;
    };
    const Row rows[] = {
        {kcm::GrowthTag::LeslieGower, "(1+r)/(1+z)", ""},
        {kcm::GrowthTag::PowerRatio, "((1+r)/(1+z))^s", "s in (0, 1]"},
        {kcm::GrowthTag::SigmoidRatio, "(1+r^s)/(1+z^s)", "s in (0, 1]"},
        {kcm::GrowthTag::AtkinsonAllen, "(1-c)(1+r)/(1+z) + c", "c in (0, 1)"},
        {kcm::GrowthTag::LogRatio, "(1+log(1+r))/(1+log(1+z))", ""},
        {kcm::GrowthTag::Ricker, "exp(r-z)", ""},
    };
    if (format == "json") {
        json j = json::array();
        for (const Row& row : rows) {
            json entry;
            entry["name"] = kcm::growth_name(row.tag);
            entry["factor"] = row.formula;
            if (*row.param) entry["param"] = row.param;
            entry["monotone_flux"] = kcm::growth_has_monotone_flux(row.tag);
            j.push_back(std::move(entry));
        }
        emit(j.dump(2) + "\n", out);
        return 0;
    }
    std::string text = "growth laws (z = weighted load, r = intrinsic rate):\n";
    for (const Row& row : rows) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "  %-14s f(z,r) = %-28s %s%s\n",
                      kcm::growth_name(row.tag), row.formula, row.param,
                      kcm::growth_has_monotone_flux(row.tag)
                          ? ""
                          : "  [overcompensating: rate bound applies]");
        text += buf;
    }
    emit(text, out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analysis of discrete-time competition models with linearly "
                 "determined fixed points"};
    app.require_subcommand(1);

    std::string config_path, format = "text", out_path, target;
    std::vector<double> x0;
    int steps = 20000, grid = 0, rays = 500, settle = 200, jobs = 0;
    int budget = 10000;
    std::uint64_t seed = 20240001;
    double tol = 1e-8, from = 0.0, to = 0.0;
    bool no_l1 = false;

    auto add_common = [&](CLI::App* sub, bool needs_config) {
        if (needs_config)
            sub->add_option("--config", config_path, "model description (JSON)")
                ->required();
        sub->add_option("--format", format, "text | json | csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", out_path, "write output to a file");
        return sub;
    };

    CLI::App* c_classify = add_common(
        app.add_subcommand("classify", "boundary class and fixed points"), true);
    CLI::App* c_perm = add_common(
        app.add_subcommand("permanence", "permanence verdict with certificates"),
        true);
    CLI::App* c_sim = add_common(
        app.add_subcommand("simulate", "iterate an orbit and classify its tail"),
        true);
    c_sim->add_option("--x0", x0, "start point, comma-separated")
        ->required()
        ->delimiter(',');
    c_sim->add_option("--steps", steps, "maximum iterations");
    c_sim->add_option("--tol", tol, "fixed-point tolerance");
    CLI::App* c_simplex = add_common(
        app.add_subcommand("simplex", "sample the invariant surface"), true);
    c_simplex->add_option("--rays", rays, "number of sample directions");
    c_simplex->add_option("--settle", settle, "iterations per sample");
    c_simplex->add_option("--jobs", jobs, "worker threads (1 = serial)");
    CLI::App* c_scan = add_common(
        app.add_subcommand("scan", "eigenvalue sweep for stability loss"), true);
    c_scan->add_option("--target", target, "parameter to sweep, e.g. r2 or c3");
    c_scan->add_option("--from", from, "sweep start");
    c_scan->add_option("--to", to, "sweep end");
    c_scan->add_option("--grid", grid, "grid points");
    c_scan->add_flag("--no-l1", no_l1, "skip the first Lyapunov coefficient");
    c_scan->add_option("--jobs", jobs, "worker threads (1 = serial)");
    CLI::App* c_atlas = add_common(
        app.add_subcommand("atlas", "enumerate the 33 realizable classes"), false);
    c_atlas->add_option("--budget", budget, "search budget per class");
    c_atlas->add_option("--seed", seed, "witness search seed");
    c_atlas->add_option("--jobs", jobs, "worker threads (1 = serial)");
    CLI::App* c_models = add_common(
        app.add_subcommand("models", "list the growth-law catalog"), false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_models->parsed()) return run_models(format, out_path);
        if (c_atlas->parsed())
            return run_atlas(budget, seed, jobs, format, out_path);

        // Everything else needs a model.
        const bool require_simplex = c_simplex->parsed();
        const kcm::ModelConfig cfg = load_model(config_path, require_simplex);
        if (c_classify->parsed()) return run_classify(cfg, format, out_path);
        if (c_perm->parsed()) return run_permanence(cfg, format, out_path);
        if (c_sim->parsed())
            return run_simulate(cfg, x0, steps, tol, format, out_path);
        if (c_simplex->parsed())
            return run_simplex(cfg, rays, settle, jobs, format, out_path);
        if (c_scan->parsed())
            return run_scan(cfg, target, from, to, grid, !no_l1, jobs, format,
                            out_path);
    } catch (const kcm::DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const kcm::DegenerateError& e) {
        std::fprintf(stderr, "degenerate: %s\n", e.what());
        return 3;
    } catch (const kcm::ContradictionError& e) {
        std::fprintf(stderr, "inconsistency: %s\n", e.what());
        return 4;
    } catch (const kcm::NumericalError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "unexpected failure: %s\n", e.what());
        return 4;
    }
    return 0;
}
