// cloudsim command-line front end.
//
// Subcommands:
//   run               full simulation from a config file
//   validate-velocity incompressibility / no-penetration report
//   mms               manufactured-solutions convergence study
//   check             one-shot bound check of a checkpoint
//   print-params      resolved physical constants and derived bounds
//
// Exit codes: 0 success, 1 invariant violation, 2 usage or config error.
// Flags: --config, --out, --json, --threads (env CLOUDSIM_THREADS),
// --log-level (error|warn|info|debug, env CLOUDSIM_LOG_LEVEL).

#include <omp.h>

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cloudsim/config.hpp"
#include "cloudsim/io.hpp"
#include "cloudsim/run.hpp"
#include "cloudsim/thermo.hpp"

namespace {

using nlohmann::json;

struct CommonOpts {
    std::string config_path;
    std::string out_dir;
    bool json_output = false;
    int threads = 0;
    std::string log_level = "info";
};

int log_rank(const std::string& level) {
    if (level == "error") return 0;
    if (level == "warn") return 1;
    if (level == "info") return 2;
    if (level == "debug") return 3;
    return 2;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_config) {
    auto* c = cmd->add_option("--config", opts.config_path, "config file path");
    if (needs_config) c->required();
    cmd->add_option("--out", opts.out_dir, "override the output directory");
    cmd->add_flag("--json", opts.json_output,
                  "machine-readable summary on stdout");
    cmd->add_option("--threads", opts.threads, "OpenMP thread count")
        ->envname("CLOUDSIM_THREADS");
    cmd->add_option("--log-level", opts.log_level, "error|warn|info|debug")
        ->envname("CLOUDSIM_LOG_LEVEL");
}

cloudsim::RunConfig load(const CommonOpts& opts) {
    cloudsim::RunConfig cfg = cloudsim::parse_config(opts.config_path);
    if (!opts.out_dir.empty()) cfg.output.dir = opts.out_dir;
    return cfg;
}

void apply_threads(const CommonOpts& opts) {
    if (opts.threads > 0) omp_set_num_threads(opts.threads);
}

int cmd_run(const CommonOpts& opts) {
    const cloudsim::RunConfig cfg = load(opts);
    apply_threads(opts);
    const cloudsim::RunResult r = cloudsim::run(cfg);
    if (log_rank(opts.log_level) >= 2 && !opts.json_output)
        std::cerr << "run: t=" << r.t_final << " steps=" << r.steps
                  << " violations=" << r.invariant_violations
                  << " clipped=" << r.clipped_cells << "\n";
    if (opts.json_output) {
        json j;
        j["t_final"] = r.t_final;
        j["steps"] = r.steps;
        j["invariant_violations"] = r.invariant_violations;
        j["clipped_cells"] = r.clipped_cells;
        j["qv_star"] = r.qv_star;
        j["levelset_M"] = r.levelset_M;
        const cloudsim::FieldSummary* s[4] = {&r.T, &r.qv, &r.qc, &r.qr};
        const char* names[4] = {"T", "qv", "qc", "qr"};
        for (int f = 0; f < 4; ++f)
            j["fields"][names[f]] = {{"min", s[f]->min},
                                     {"max", s[f]->max},
                                     {"l2", s[f]->l2}};
        std::cout << j.dump(2) << "\n";
    }
    return r.invariant_violations == 0 ? 0 : 1;
}

int cmd_validate_velocity(const CommonOpts& opts) {
    const cloudsim::RunConfig cfg = load(opts);
    apply_threads(opts);
    const cloudsim::Grid grid = cfg.make_grid();
    if (cfg.velocity.kind == cloudsim::VelocityKind::None) {
        std::cerr << "validate-velocity: config has no velocity block\n";
        return 2;
    }
    // sample the provider at the endpoints and midpoint of [0, t_end]
    const auto provider = cfg.make_velocity(grid);
    bool pass = true;
    json frames = json::array();
    for (double t : {0.0, 0.5 * cfg.stepping.t_end, cfg.stepping.t_end}) {
        const cloudsim::VelocityField vel = provider->at(t, grid);
        const cloudsim::ValidationReport rep = cloudsim::validate_velocity(
            vel, grid, cfg.velocity.div_tol, cfg.velocity.flux_tol);
        pass = pass && rep.pass;
        if (!opts.json_output)
            std::cerr << "t=" << t << " max_div=" << rep.max_divergence
                      << " (tol " << rep.div_tol << ")"
                      << " max_boundary_flux=" << rep.max_boundary_flux
                      << " (tol " << rep.flux_tol << ") "
                      << (rep.pass ? "ok" : "FAIL") << "\n";
        frames.push_back({{"t", t},
                          {"max_divergence", rep.max_divergence},
                          {"div_tol", rep.div_tol},
                          {"max_boundary_flux", rep.max_boundary_flux},
                          {"flux_tol", rep.flux_tol},
                          {"pass", rep.pass}});
    }
    if (opts.json_output)
        std::cout << json{{"pass", pass}, {"frames", frames}}.dump(2) << "\n";
    return pass ? 0 : 1;
}

int cmd_mms(const CommonOpts& opts) {
    const cloudsim::RunConfig cfg = load(opts);
    apply_threads(opts);
    const cloudsim::MMSCase c = cfg.mms.mms_case == "advection"
                                    ? cloudsim::make_advection_mms_case()
                                    : cloudsim::make_diffusion_mms_case();
    const cloudsim::ObservedOrders obs =
        cloudsim::mms_convergence(c, cfg.mms.levels);
    json j;
    j["case"] = c.name;
    const char* names[4] = {"T", "qv", "qc", "qr"};
    for (std::size_t l = 0; l < obs.levels.size(); ++l) {
        json row = {{"n", obs.levels[l]}, {"h", obs.h[l]}};
        for (int f = 0; f < 4; ++f) row[names[f]] = obs.errors[l][f];
        j["levels"].push_back(row);
        if (!opts.json_output) {
            std::cerr << "n=" << obs.levels[l];
            for (int f = 0; f < 4; ++f)
                std::cerr << " " << names[f] << "=" << obs.errors[l][f];
            std::cerr << "\n";
        }
    }
    for (int f = 0; f < 4; ++f) j["order"][names[f]] = obs.order[f];
    j["monotone"] = obs.monotone;
    if (!opts.json_output) {
        std::cerr << "observed order:";
        for (int f = 0; f < 4; ++f)
            std::cerr << " " << names[f] << "=" << obs.order[f];
        std::cerr << (obs.monotone ? " (monotone)" : " (NOT monotone)") << "\n";
    }
    if (opts.json_output) std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_check(const CommonOpts& opts, const std::string& snapshot) {
    cloudsim::RunConfig cfg;
    if (!opts.config_path.empty()) cfg = cloudsim::parse_config(opts.config_path);
    int nx, ny, np;
    double t;
    cloudsim::read_checkpoint_dims(snapshot, nx, ny, np, t);
    if (opts.config_path.empty()) {
        cfg.nx = nx;
        cfg.ny = ny;
        cfg.np = np;
    }
    const cloudsim::Grid grid = cfg.make_grid();
    const cloudsim::MoistState state = cloudsim::read_checkpoint(snapshot, grid);
    const cloudsim::BoundarySpec bc = cfg.make_boundary();
    const double qv_star = cloudsim::compute_qv_star(cfg, grid, state, bc);
    cloudsim::BoundTolerances tol;
    tol.neg = cfg.diagnostics.tol_neg;
    tol.qv_star = cfg.diagnostics.tol_qv;
    const std::vector<cloudsim::Violation> v =
        cloudsim::check_bounds(state, grid, cfg.physics, qv_star, tol);
    for (const auto& w : v)
        std::cerr << "violation: t=" << w.t << " field=" << w.field << " ("
                  << w.i << "," << w.j << "," << w.k << ") value=" << w.value
                  << " bound=" << w.bound << " " << w.what << "\n";
    if (opts.json_output)
        std::cout << json{{"snapshot", snapshot},
                          {"t", t},
                          {"qv_star", qv_star},
                          {"violations", v.size()}}
                         .dump(2)
                  << "\n";
    else
        std::cerr << "check: " << v.size() << " violation(s)\n";
    return v.empty() ? 0 : 1;
}

int cmd_print_params(const CommonOpts& opts) {
    const cloudsim::RunConfig cfg = load(opts);
    const cloudsim::PhysParams& p = cfg.physics;
    const cloudsim::Grid grid = cfg.make_grid();
    const cloudsim::BoundarySpec bc = cfg.make_boundary();
    const cloudsim::MoistState initial = cfg.make_initial_state(grid);
    const double t_crit = cloudsim::critical_temperature(p);
    const double qv_star = cloudsim::compute_qv_star(cfg, grid, initial, bc);
    const double m = cloudsim::compute_levelset_M(cfg, grid, initial, bc);
    if (opts.json_output) {
        json j;
        j["T_crit"] = t_crit;
        j["E"] = p.E();
        j["kappa1"] = p.kappa1();
        j["qv_star"] = qv_star;
        j["levelset_M"] = m;
        j["config"] = cfg.serialize();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout.precision(17);
        std::cout << "T_crit = " << t_crit << "\n"
                  << "E = " << p.E() << "\n"
                  << "kappa1 = " << p.kappa1() << "\n"
                  << "qv_star = " << qv_star << "\n"
                  << "levelset_M = " << m << "\n"
                  << cfg.serialize();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cloudsim: warm-cloud moisture dynamics simulator"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string snapshot;

    CLI::App* run_cmd = app.add_subcommand("run", "run a full simulation");
    add_common(run_cmd, opts, true);
    CLI::App* vv_cmd =
        app.add_subcommand("validate-velocity", "validate the velocity field");
    add_common(vv_cmd, opts, true);
    CLI::App* mms_cmd =
        app.add_subcommand("mms", "manufactured-solutions convergence study");
    add_common(mms_cmd, opts, true);
    CLI::App* check_cmd =
        app.add_subcommand("check", "bound check of a checkpoint");
    check_cmd->add_option("snapshot", snapshot, "checkpoint path")->required();
    add_common(check_cmd, opts, false);
    CLI::App* pp_cmd =
        app.add_subcommand("print-params", "resolved constants and bounds");
    add_common(pp_cmd, opts, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(opts);
        if (vv_cmd->parsed()) return cmd_validate_velocity(opts);
        if (mms_cmd->parsed()) return cmd_mms(opts);
        if (check_cmd->parsed()) return cmd_check(opts, snapshot);
        if (pp_cmd->parsed()) return cmd_print_params(opts);
    } catch (const cloudsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
