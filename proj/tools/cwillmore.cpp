// cwillmore: command-line front end.
//
// Exit codes: 0 success, 1 a requested tolerance failed, 2 usage or schema
// error, 3 neck, 4 bump / sweep, 5 optimize, 6 report / verify failures.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cwillmore/cwillmore.hpp"

namespace cw = cwillmore;

namespace {

struct Output {
    std::string path;
    std::string format = "json";
};

void emit(const Output& out, const std::string& text) {
    if (out.path.empty() || out.path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out.path, std::ios::binary);
    if (!f) throw cw::SchemaError("cannot open output file " + out.path);
    f << text;
}

std::string dump(const cw::json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw cw::SchemaError("cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

// Accepts a bare surface or any object carrying one under "surface".
cw::RevolutionSurface load_surface(const std::string& path) {
    cw::json j;
    try {
        j = cw::json::parse(read_file(path));
    } catch (const cw::json::parse_error& e) {
        throw cw::SchemaError(std::string("malformed JSON: ") + e.what());
    }
    if (j.is_object() && !j.contains("segments") && j.contains("surface")) j = j.at("surface");
    return cw::surface_from_json(j);
}

void add_output(CLI::App* cmd, Output& out, std::initializer_list<const char*> formats) {
    cmd->add_option("--out", out.path, "output file (default stdout)");
    std::vector<std::string> f(formats.begin(), formats.end());
    cmd->add_option("--format", out.format, "output format")->check(CLI::IsMember(f));
}

int run_report(const std::string& path, const Output& out) {
    const cw::RevolutionSurface s = load_surface(path);
    const cw::SurfaceReport r = cw::report_with_identities(s, cw::QuadTol::from_environment());
    if (out.format == "csv") {
        emit(out, cw::report_csv(r));
    } else if (out.format == "svg") {
        emit(out, cw::profile_svg(s));
    } else {
        emit(out, dump(cw::to_json(r)));
    }
    return 0;
}

int run_verify(const std::string& path, double tol, const Output& out) {
    const cw::RevolutionSurface s = load_surface(path);
    const cw::QuadTol qt = cw::QuadTol::from_environment();
    const cw::IdentityReport r = cw::verify_all(s, qt);
    const double pointwise = cw::max_tracefree_pointwise_violation(s);
    cw::json checks = cw::json::object();
    auto check = [&](const char* name, double value, double limit) {
        const bool ok = std::abs(value) <= limit;
        checks[name] = {{"value", value}, {"tolerance", limit}, {"pass", ok}};
        return ok;
    };
    bool ok = true;
    ok &= check("first_variation", r.residual_first_variation, tol);
    ok &= check("area_defect", r.residual_area_defect, tol);
    ok &= check("gauss_bonnet", r.residual_gauss_bonnet, tol);
    ok &= check("tracefree", r.residual_tracefree, tol);
    ok &= check("tracefree_pointwise", pointwise, 1e-12);
    if (r.confined) {
        const bool gap_ok = r.willmore_area_gap >= -tol;
        checks["willmore_area_gap"] = {
            {"value", r.willmore_area_gap}, {"lower_bound", -tol}, {"pass", gap_ok}};
        ok &= gap_ok;
    } else {
        checks["willmore_area_gap"] = {{"value", r.willmore_area_gap},
                                       {"pass", nullptr},
                                       {"note", "surface not confined; bound not claimed"}};
    }
    cw::json j = {{"label", s.label()}, {"identities", cw::to_json(r)}, {"checks", checks},
                  {"pass", ok}};
    if (out.format == "csv") {
        std::ostringstream os;
        cw::CsvWriter w(os);
        w.header({"check", "value", "pass"});
        for (auto& [name, c] : checks.items()) {
            w.row_strings({name, cw::format_number(c["value"].get<double>()),
                           c["pass"].is_null() ? "n/a" : (c["pass"].get<bool>() ? "true" : "false")});
        }
        emit(out, os.str());
    } else {
        emit(out, dump(j));
    }
    return ok ? 0 : 1;
}

int run_neck(double r, const std::string& shape, const Output& out) {
    const cw::NeckSolution sol = cw::solve_neck(r);
    const cw::NeckEnergies e = cw::closed_form_energies(sol);
    cw::RevolutionSurface surf = cw::build_sigma_plus(sol);
    if (shape == "shell") surf = cw::build_neck_shell(sol);
    if (shape == "double") surf = cw::build_double_sphere(r).surface;
    if (out.format == "csv") {
        emit(out, cw::neck_csv(sol, e));
    } else if (out.format == "svg") {
        emit(out, cw::profile_svg(surf));
    } else {
        emit(out, dump({{"solution", cw::to_json(sol)},
                        {"energies", cw::to_json(e)},
                        {"surface", cw::surface_to_json(surf)}}));
    }
    return 0;
}

struct BumpArgs {
    double s = 0.1;
    double alpha = std::numeric_limits<double>::quiet_NaN();
    std::string eta = "std_bump";
    bool sweep = false;
    double s_min = 0.02;
    double s_max = 0.2;
    int count = 8;
};

int run_bump(const BumpArgs& a, const Output& out) {
    const double alpha = std::isnan(a.alpha) ? 2.0 * cw::compute_alpha_star(a.eta) : a.alpha;
    if (a.sweep) {
        const cw::BumpSweep sw = cw::sweep_bump(cw::log_spaced(a.s_min, a.s_max, a.count), alpha, a.eta);
        if (out.format == "json") {
            cw::json rows = cw::json::array();
            for (const auto& r : sw.rows) {
                rows.push_back({{"s", r.s}, {"t", r.t}, {"area", r.area},
                                {"area_excess", r.area_excess}, {"willmore", r.willmore},
                                {"willmore_excess", r.willmore_excess},
                                {"slope_partial", r.slope_partial}});
            }
            emit(out, dump({{"alpha", alpha}, {"rows", rows},
                            {"fit", {{"slope", sw.fit.slope}, {"intercept", sw.fit.intercept},
                                     {"r_squared", sw.fit.r_squared}}}}));
        } else {
            emit(out, cw::bump_sweep_csv(sw));
        }
        return 0;
    }
    const cw::RevolutionSurface s = cw::build_bump_sphere(a.s, alpha, a.eta);
    if (out.format == "svg") {
        emit(out, cw::profile_svg(s));
        return 0;
    }
    const cw::SurfaceReport r = cw::report_with_identities(s, cw::QuadTol::from_environment());
    if (out.format == "csv") {
        emit(out, cw::report_csv(r));
    } else {
        const cw::BumpConstants c = cw::compute_bump_constants(a.eta);
        emit(out, dump({{"s", a.s}, {"alpha", alpha}, {"t", alpha * a.s * a.s},
                        {"alpha_star", c.alpha_star},
                        {"area_excess", cw::area_excess(a.s, alpha, a.eta)},
                        {"max_abs_mean_curvature", cw::max_abs_mean_curvature(s)},
                        {"report", cw::to_json(r)},
                        {"surface", cw::surface_to_json(s)}}));
    }
    return 0;
}

int run_optimize(double area, int nodes, int max_iter, const Output& out) {
    cw::ProbeConfig cfg;
    cfg.nodes = nodes;
    cfg.max_iterations = max_iter;
    const cw::ProbeResult r = cw::minimize(area, cw::initial_profile(area, nodes), cfg);
    if (out.format == "csv") {
        emit(out, cw::profile_csv(r.profile));
    } else if (out.format == "svg") {
        emit(out, cw::profile_svg(r.profile.nodes,
                                  "W = " + cw::format_number(r.willmore) + " at area " +
                                      cw::format_number(r.area)));
    } else {
        emit(out, dump(cw::to_json(r)));
    }
    return 0;
}

int run_sweep(double a_min, double a_max, int steps, bool probe, const Output& out) {
    cw::SweepTable t = cw::sweep_bounds(a_min, a_max, steps);
    if (probe) {
        for (auto& row : t.rows) {
            if (row.a < 4.0 * std::numbers::pi || row.a > 16.0 * std::numbers::pi) continue;
            row.w_probe = cw::minimize(row.a, cw::initial_profile(row.a)).willmore;
        }
    }
    if (out.format == "svg") {
        emit(out, cw::sweep_svg(t));
    } else if (out.format == "json") {
        cw::json rows = cw::json::array();
        auto opt = [](const std::optional<double>& v) { return v ? cw::json(*v) : cw::json(nullptr); };
        for (const auto& r : t.rows) {
            rows.push_back({{"a", r.a}, {"lower_bound", r.lower_bound},
                            {"upper_neck", opt(r.upper_neck)}, {"upper_bump", opt(r.upper_bump)},
                            {"w_probe", opt(r.w_probe)}, {"upper_envelope", r.upper_envelope},
                            {"source", r.source}});
        }
        emit(out, dump({{"rows", rows},
                        {"sqrt_fit", {{"slope", t.sqrt_fit_slope},
                                      {"intercept", t.sqrt_fit_intercept},
                                      {"r_squared", t.sqrt_fit_r_squared}}}}));
    } else {
        emit(out, cw::sweep_table_csv(t));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Willmore energy of confined surfaces of revolution"};
    app.require_subcommand(1);

    Output out;
    std::string surface_path;

    auto* report = app.add_subcommand("report", "evaluate a surface JSON file");
    report->add_option("surface", surface_path, "surface JSON")->required();
    add_output(report, out, {"json", "csv", "svg"});

    double verify_tol = 1e-6;
    auto* verify = app.add_subcommand("verify", "check the integral identities on a surface");
    verify->add_option("surface", surface_path, "surface JSON")->required();
    verify->add_option("--tol", verify_tol, "residual tolerance");
    add_output(verify, out, {"json", "csv"});

    double neck_r = 0.95;
    std::string neck_shape = "sigma_plus";
    auto* neck = app.add_subcommand("neck", "solve the sphere-catenoid-sphere neck");
    neck->add_option("--r", neck_r, "inner sphere radius")->required();
    neck->add_option("--surface", neck_shape, "surface to emit")
        ->check(CLI::IsMember({"sigma_plus", "shell", "double"}));
    add_output(neck, out, {"json", "csv", "svg"});

    BumpArgs bump_args;
    auto* bump = app.add_subcommand("bump", "bump sphere, or a sweep over s");
    bump->add_option("--s", bump_args.s, "bump scale");
    bump->add_option("--alpha", bump_args.alpha, "t / s^2 (default 2 alpha*)");
    bump->add_option("--eta", bump_args.eta, "bump profile")->check(CLI::IsMember({"std_bump", "poly4"}));
    bump->add_flag("--sweep", bump_args.sweep, "log-spaced sweep over s");
    bump->add_option("--s-min", bump_args.s_min);
    bump->add_option("--s-max", bump_args.s_max);
    bump->add_option("--count", bump_args.count);
    add_output(bump, out, {"json", "csv", "svg"});

    double opt_area = 4.0 * std::numbers::pi;
    int opt_nodes = 400;
    int opt_iter = 20000;
    auto* optimize = app.add_subcommand("optimize", "penalized descent at fixed area");
    optimize->add_option("--area", opt_area, "target area")->required();
    optimize->add_option("--nodes", opt_nodes, "profile segments")->check(CLI::Range(8, 100000));
    optimize->add_option("--max-iter", opt_iter, "iteration budget")->check(CLI::PositiveNumber);
    add_output(optimize, out, {"json", "csv", "svg"});

    double a_min = 4.0 * std::numbers::pi, a_max = 4.0 * std::numbers::pi + 0.5;
    int steps = 11;
    bool with_probe = false;
    auto* sweep = app.add_subcommand("sweep", "bounds on the least energy over an area range");
    sweep->add_option("--a-min", a_min);
    sweep->add_option("--a-max", a_max);
    sweep->add_option("--steps", steps)->check(CLI::PositiveNumber);
    sweep->add_flag("--probe", with_probe, "run the optimizer at every row");
    add_output(sweep, out, {"csv", "json", "svg"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    // Module errors map to the code of the subcommand that raised them.
    int module_code = 6;
    try {
        if (*report) return run_report(surface_path, out);
        if (*verify) return run_verify(surface_path, verify_tol, out);
        if (*neck) {
            module_code = 3;
            return run_neck(neck_r, neck_shape, out);
        }
        if (*bump) {
            module_code = 4;
            return run_bump(bump_args, out);
        }
        if (*optimize) {
            module_code = 5;
            return run_optimize(opt_area, opt_nodes, opt_iter, out);
        }
        if (*sweep) {
            module_code = 4;
            return run_sweep(a_min, a_max, steps, with_probe, out);
        }
    } catch (const cw::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return module_code;
    }
    return 2;
}
