#include "cloudsim/run.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cloudsim/io.hpp"
#include "cloudsim/thermo.hpp"

namespace cloudsim {

namespace {

FieldSummary summarize(const ScalarField& f, const Grid& grid) {
    FieldSummary s;
    const auto [lo, hi] = field_minmax(f);
    s.min = lo;
    s.max = hi;
    double ss = 0;
    for (int k = 1; k <= grid.np; ++k)
        for (int j = 1; j <= grid.ny; ++j)
            for (int i = 1; i <= grid.nx; ++i) ss += f(i, j, k) * f(i, j, k);
    s.l2 = std::sqrt(ss * grid.cell_volume());
    return s;
}

std::string snap_name(const char* stem, long index, const char* ext) {
    std::ostringstream ss;
    ss << stem << "_" << index << ext;
    return ss.str();
}

}  // namespace

double compute_qv_star(const RunConfig& cfg, const Grid& grid,
                       const MoistState& initial, const BoundarySpec& bc) {
    const auto [lo, hi] = field_minmax(initial.qv);
    double qv_star = std::max(hi, 0.0);
    qv_star = std::max(qv_star, bc.data_sup(1, grid, cfg.stepping.t_end));
    qv_star = std::max(qv_star,
                       max_saturation_mixing_ratio(grid.p1, grid.p0, cfg.physics));
    return qv_star;
}

double compute_levelset_M(const RunConfig& cfg, const Grid& grid,
                          const MoistState& initial, const BoundarySpec& bc) {
    if (cfg.diagnostics.levelset_M > 0.0) return cfg.diagnostics.levelset_M;
    const auto [lo, hi] = field_minmax(initial.T);
    double m = std::max(hi, critical_temperature(cfg.physics));
    m = std::max(m, bc.data_sup(0, grid, cfg.stepping.t_end));
    return 2.0 * m;
}

RunResult run(const RunConfig& cfg, Exec exec) {
    namespace fs = std::filesystem;

    const Grid grid = cfg.make_grid();
    const BoundarySpec bc = cfg.make_boundary();
    bc.validate(grid, cfg.stepping.t_end);
    const std::unique_ptr<VelocityProvider> velp = cfg.make_velocity(grid);
    MoistState state = cfg.make_initial_state(grid);

    const double qv_star = compute_qv_star(cfg, grid, state, bc);
    const double levelset_M = compute_levelset_M(cfg, grid, state, bc);
    LevelSetSeries levels(levelset_M, cfg.diagnostics.levelset_kmax);
    BoundTolerances tol;
    tol.neg = cfg.diagnostics.tol_neg;
    tol.qv_star = cfg.diagnostics.tol_qv;

    fs::create_directories(cfg.output.dir);
    const fs::path outdir(cfg.output.dir);

    std::ofstream diag(outdir / "diagnostics.csv");
    diag.precision(17);
    diag << "t";
    for (int f = 0; f < 4; ++f) {
        const char* n = MoistState::field_name(f);
        diag << "," << n << "_l2," << n << "_linf," << n << "_min," << n
             << "_gradh," << n << "_gradpw," << n << "_h1w";
    }
    diag << ",qv_star,max_T,levelset_M";
    for (int k = 1; k <= levels.kmax; ++k) diag << ",J_" << k;
    diag << ",violations,clipped_cells\n";

    std::ofstream viol(outdir / "violations.csv");
    viol.precision(17);
    viol << "t,field,i,j,k,value,bound,what\n";

    RunResult result;
    result.qv_star = qv_star;
    result.levelset_M = levelset_M;

    long snapshot_index = 0;
    auto write_snapshots = [&](long index) {
        if (cfg.output.checkpoint)
            write_checkpoint((outdir / snap_name("state", index, ".bin")).string(),
                             state, grid);
        if (cfg.output.vtk)
            write_vtk((outdir / snap_name("state", index, ".vtk")).string(),
                      state, grid, cfg.physics);
        for (int k : cfg.output.csv_levels) {
            std::ostringstream name;
            name << "slice_k" << k << "_" << index << ".csv";
            write_csv_slice((outdir / name.str()).string(), state, grid, k);
        }
    };

    auto emit_diagnostics = [&](long clipped) {
        const NormRecord rec = record_norms(state, grid, cfg.physics);
        const std::vector<Violation> v =
            check_bounds(state, grid, cfg.physics, qv_star, tol);
        result.invariant_violations += static_cast<long>(v.size());
        for (const Violation& w : v)
            viol << w.t << "," << MoistState::field_name(std::min(w.field, 3))
                 << (w.field == 4 ? "(coeff)" : "") << "," << w.i << ","
                 << w.j << "," << w.k << "," << w.value << "," << w.bound
                 << "," << w.what << "\n";
        const auto [t_lo, t_hi] = field_minmax(state.T);
        diag << rec.t;
        for (int f = 0; f < 4; ++f)
            diag << "," << rec.f[f].l2 << "," << rec.f[f].linf << ","
                 << rec.f[f].min << "," << rec.f[f].grad_h << ","
                 << rec.f[f].grad_p_w << "," << rec.f[f].h1w;
        diag << "," << qv_star << "," << t_hi << "," << levelset_M;
        for (int k = 0; k < levels.kmax; ++k) diag << "," << levels.J[k];
        diag << "," << v.size() << "," << clipped << "\n";
    };

    const StepControl& ctrl = cfg.stepping;
    const double t_end = ctrl.t_end;
    double next_output =
        cfg.output.cadence > 0.0 ? cfg.output.cadence : t_end;

    update_level_sets(levels, state, grid, cfg.physics, 0.0);
    emit_diagnostics(0);
    write_snapshots(snapshot_index++);

    while (state.t < t_end - 1e-14 * std::max(t_end, 1.0)) {
        const VelocityField vel = velp->at(state.t, grid);
        double dt = stable_dt(state, vel, grid, cfg.physics, ctrl);
        dt = std::min(dt, t_end - state.t);
        const bool at_output = state.t + dt >= next_output - 1e-14;
        if (at_output) dt = std::min(dt, next_output - state.t);

        // left-endpoint accumulation of the dissipation integral
        update_level_sets(levels, state, grid, cfg.physics, dt);
        const StepStats stats =
            step(state, *velp, grid, cfg.physics, bc, ctrl, dt, nullptr, exec);
        result.clipped_cells += stats.clipped_cells;
        ++result.steps;

        emit_diagnostics(stats.clipped_cells);
        if (at_output && state.t < t_end - 1e-14) {
            write_snapshots(snapshot_index++);
            next_output += cfg.output.cadence;
        }
    }
    update_level_sets(levels, state, grid, cfg.physics, 0.0);

    write_snapshots(snapshot_index++);

    result.t_final = state.t;
    result.T = summarize(state.T, grid);
    result.qv = summarize(state.qv, grid);
    result.qc = summarize(state.qc, grid);
    result.qr = summarize(state.qr, grid);
    return result;
}

}  // namespace cloudsim
