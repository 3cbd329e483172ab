// Kernel benchmark: serial reference path vs the OpenMP path, plus one
// full time step. Reports best-of-five wall times and the speedup.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "cloudsim/operators.hpp"
#include "cloudsim/solver.hpp"
#include "cloudsim/velocity.hpp"

using namespace cloudsim;

namespace {

double best_of(int reps, const std::function<void()>& fn) {
    double best = 1e30;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        best = std::min(best, dt);
    }
    return best;
}

void row(const std::string& name, double serial, double parallel) {
    std::printf("%-28s %10.3f ms %10.3f ms %8.2fx\n", name.c_str(),
                serial * 1e3, parallel * 1e3, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 64;
    std::printf("grid %d^3, %d OpenMP threads\n", n, omp_get_max_threads());
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp",
                "speedup");

    GridConfig gc;
    gc.nx = gc.ny = gc.np = n;
    gc.p1 = 1.0;
    gc.p0 = 2.0;
    gc.g = 1.0;
    gc.R_d = 1.0;
    gc.tbar = [](double) { return 1.0; };
    const Grid grid = build_grid(gc);
    const VelocityField vel = analytic_velocity({}, grid, 0.0);

    ScalarField f(n, n, n), out(n, n, n);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::size_t i = 0; i < f.size(); ++i) f.data()[i] = u(rng);
    FieldBC bc;

    row("boundary ghosts",
        best_of(5, [&] { apply_boundary_ghosts(f, bc, grid, 0.0, Exec::Serial); }),
        best_of(5, [&] { apply_boundary_ghosts(f, bc, grid, 0.0, Exec::OpenMP); }));
    row("upwind advection",
        best_of(5, [&] { advect(f, vel, grid, out, Exec::Serial); }),
        best_of(5, [&] { advect(f, vel, grid, out, Exec::OpenMP); }));
    row("horizontal laplacian",
        best_of(5, [&] { horizontal_laplacian(f, grid, 0.5, out, Exec::Serial); }),
        best_of(5, [&] { horizontal_laplacian(f, grid, 0.5, out, Exec::OpenMP); }));
    row("weighted vertical diffusion",
        best_of(5, [&] { weighted_vertical_diffusion(f, grid, 0.5, out, Exec::Serial); }),
        best_of(5, [&] { weighted_vertical_diffusion(f, grid, 0.5, out, Exec::OpenMP); }));
    row("sedimentation",
        best_of(5, [&] { sedimentation(f, grid, 0.3, 1.0, out, Exec::Serial); }),
        best_of(5, [&] { sedimentation(f, grid, 0.3, 1.0, out, Exec::OpenMP); }));

    PhysParams p;
    p.R_d = 1.0;
    p.R_v = 1.6;
    p.c_pd = 1.0;
    p.c_pv = 1.8;
    p.c_l = 4.0;
    p.L0 = 2.5;
    p.T0 = 1.0;
    p.es0 = 0.3;
    p.g = 1.0;
    p.V = 0.2;
    p.T_low = 0.05;
    p.T_ramp = 0.05;
    p.p0_ref = 1.0;
    p.mu_T = p.mu_qv = p.mu_qc = p.mu_qr = 0.005;
    p.nu_T = p.nu_qv = p.nu_qc = p.nu_qr = 0.005;

    MoistState base(grid);
    base.T.fill(1.0);
    base.qv.fill(0.02);
    base.qc.fill(0.005);
    base.qr.fill(0.002);
    const BoundarySpec bspec;
    const AnalyticVelocity provider({}, grid);
    StepControl ctrl;

    MoistState sa = base, sb = base;
    row("full euler step",
        best_of(5, [&] { step(sa, provider, grid, p, bspec, ctrl, 1e-4, nullptr, Exec::Serial); }),
        best_of(5, [&] { step(sb, provider, grid, p, bspec, ctrl, 1e-4, nullptr, Exec::OpenMP); }));
    return 0;
}
