// Command-line driver: orbit experiments, winding numbers of arc files,
// coded-orbit diagnostics, the system gallery, and the verification suites.
//
// Exit codes: 0 success, 1 I/O or internal failure, 2 precondition violation
// (bad config values, unknown names, intersecting arcs, ...).

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rotlab/arc.hpp"
#include "rotlab/config.hpp"
#include "rotlab/experiment.hpp"
#include "rotlab/gallery.hpp"
#include "rotlab/geom.hpp"
#include "rotlab/horseshoe.hpp"
#include "rotlab/verify.hpp"
#include "rotlab/winding.hpp"

namespace {

std::pair<std::string, std::string> split_tol(const std::string& spec) {
    std::size_t eq = spec.find('=');
    if (eq == std::string::npos || eq == 0)
        throw rotlab::precondition_error("--tol expects NAME=VALUE, got '" + spec + "'");
    return {spec.substr(0, eq), spec.substr(eq + 1)};
}

int do_orbit(const std::string& config_path, const rotlab::Config& overrides) {
    rotlab::Config cfg;
    if (!config_path.empty()) cfg = rotlab::Config::load(config_path);
    for (const auto& [k, v] : overrides.all()) cfg.set(k, v);
    rotlab::ExperimentConfig exp = rotlab::experiment_from_config(cfg);
    rotlab::OrbitRunResult res = rotlab::run_orbit(exp);
    std::cout << res.summary;
    std::cerr << "wrote " << res.series_path << " and " << res.summary_path << "\n";
    return 0;
}

int do_winding(const std::string& path_a, const std::string& path_b, double tol,
               double tie_tol) {
    rotlab::HangingArc a = rotlab::read_arc(path_a);
    rotlab::HangingArc b = rotlab::read_arc(path_b);
    rotlab::Disjointness dj = rotlab::arcs_disjoint(a, b);
    if (!dj.disjoint)
        throw rotlab::precondition_error(
            dj.shares_landing_only
                ? "winding: arcs share their landing point"
                : "winding: arcs intersect; relative winding is undefined");
    rotlab::WindingResult w = rotlab::relative_winding(a, b, tol, tie_tol);
    nlohmann::json j;
    j["w"] = w.w;
    if (w.nearest)
        j["nearest_int"] = *w.nearest;
    else
        j["nearest_int"] = nullptr;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int do_horseshoe(const std::string& literal, long horizon) {
    rotlab::SymbolCode code = rotlab::parse_code(literal);
    rotlab::ShiftBoundReport shift = rotlab::verify_shift_bound(code, horizon);
    rotlab::RotationBounds rot = rotlab::rotation_bounds_from_code(code, horizon);
    nlohmann::json j;
    j["code"] = literal;
    j["horizon"] = horizon;
    j["shift"] = {{"max_dev", shift.max_dev}, {"arg_k", shift.arg_k},
                  {"pass", shift.pass}};
    j["rotation"] = {{"lo", rot.lo}, {"hi", rot.hi}, {"estimate", rot.estimate}};
    std::cout << j.dump(2) << "\n";
    return shift.pass ? 0 : 1;
}

int do_gallery(const std::string& name) {
    if (name.empty()) {
        for (const std::string& n : rotlab::gallery_names()) std::cout << n << "\n";
        return 0;
    }
    rotlab::MarkedSystem sys = rotlab::system_by_name(name);
    nlohmann::json j;
    j["name"] = sys.name;
    if (sys.rho_hat)
        j["rho_hat"] = *sys.rho_hat;
    else
        j["rho_hat"] = nullptr;
    if (!sys.proxy_note.empty()) j["boundary_proxy"] = sys.proxy_note;
    j["marked"] = nlohmann::json::array();
    for (const rotlab::MarkedPoint& m : sys.marked) {
        nlohmann::json e;
        e["name"] = m.name;
        if (m.seed.pt)
            e["start"] = {m.seed.pt->x1, m.seed.pt->r};
        else
            e["start"] = m.seed.name;
        e["has_backward"] = m.has_backward;
        if (!m.note.empty()) e["note"] = m.note;
        j["marked"].push_back(e);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "rotlab: annulus dynamics experiments on the universal cover\n"
        "(orbit drift, relative winding of hanging arcs, coded horseshoe orbits)"};
    app.require_subcommand(1);

    // orbit
    auto* orbit = app.add_subcommand(
        "orbit", "Iterate an orbit; write <prefix>.series.csv and <prefix>.summary.json");
    std::string config_path, o_system, o_seed, o_out, o_direction, o_rho, o_horizon;
    std::vector<std::string> o_tols;
    orbit->add_option("--config", config_path, "Experiment config file");
    orbit->add_option("--system", o_system,
                      "System name: periodic:a/b | transverse | boomerang | horseshoe");
    orbit->add_option("--seed", o_seed,
                      "Start: marked-point name, code literal, or coordinates x,r");
    orbit->add_option("--horizon", o_horizon, "Number of iterates (>= 1)");
    orbit->add_option("--direction", o_direction, "forward (default) or backward");
    orbit->add_option("--rho", o_rho, "Drift reference rotation number");
    orbit->add_option("--out", o_out, "Output path prefix");
    orbit->add_option("--tol", o_tols, "Tolerance override NAME=VALUE (repeatable)");

    // winding
    auto* winding = app.add_subcommand(
        "winding", "Relative winding (half turns) of two arc files; JSON on stdout");
    std::string arc_a, arc_b;
    std::vector<std::string> w_tols;
    winding->add_option("arc_a", arc_a, "Leading arc file")->required();
    winding->add_option("arc_b", arc_b, "Trailing arc file")->required();
    winding->add_option("--tol", w_tols,
                        "tol=SEP (matched-parameter separation, default 1e-9) or "
                        "tie=T (half-integer tie tolerance, default 1e-6)");

    // horseshoe
    auto* horseshoe = app.add_subcommand(
        "horseshoe", "Shift accounting and rotation bounds for a symbol code");
    std::string code_literal;
    long h_horizon = 1000;
    horseshoe->add_option("--code", code_literal,
                          "periodic:WORD | list:WORD | blocks:s*L,s*L,...")
        ->required();
    horseshoe->add_option("--horizon", h_horizon, "Iterates to examine (default 1000)");

    // gallery
    auto* gallery = app.add_subcommand(
        "gallery", "List example systems, or describe one as JSON");
    std::string g_name;
    gallery->add_option("name", g_name, "System name (omit to list all)");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "Run verification suites; per-check PASS/FAIL lines, exit 0 iff all pass");
    std::string suite = "all";
    std::uint64_t v_seed = 0;
    bool v_list = false;
    verify->add_option("suite", suite,
                       "Suite name, prefix (e.g. 'winding'), or 'all' (default)");
    verify->add_option("--seed", v_seed, "RNG seed for randomized checks (default 0)");
    verify->add_flag("--list", v_list, "Print suite names and exit");

    try {
        app.parse(argc, argv);

        if (*orbit) {
            rotlab::Config over;
            if (!o_system.empty()) over.set("experiment.system", o_system);
            if (!o_seed.empty()) over.set("experiment.seed", o_seed);
            if (!o_horizon.empty()) over.set("experiment.horizon", o_horizon);
            if (!o_direction.empty()) over.set("experiment.direction", o_direction);
            if (!o_rho.empty()) over.set("experiment.rho", o_rho);
            if (!o_out.empty()) over.set("experiment.output", o_out);
            for (const std::string& spec : o_tols) {
                auto [k, v] = split_tol(spec);
                over.set("tolerances." + k, v);
            }
            return do_orbit(config_path, over);
        }
        if (*winding) {
            double tol = 1e-9, tie = 1e-6;
            for (const std::string& spec : w_tols) {
                auto [k, v] = split_tol(spec);
                if (k == "tol")
                    tol = std::stod(v);
                else if (k == "tie")
                    tie = std::stod(v);
                else
                    throw rotlab::precondition_error("winding: unknown tolerance '" + k +
                                                     "' (use tol or tie)");
            }
            return do_winding(arc_a, arc_b, tol, tie);
        }
        if (*horseshoe) return do_horseshoe(code_literal, h_horizon);
        if (*gallery) return do_gallery(g_name);
        if (*verify) {
            if (v_list) {
                for (const std::string& n : rotlab::verify::suite_names())
                    std::cout << n << "\n";
                return 0;
            }
            return rotlab::verify::run(suite, v_seed, std::cout);
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const rotlab::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rotlab::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
