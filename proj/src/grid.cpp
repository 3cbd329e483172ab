#include "cloudsim/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace cloudsim {

Grid build_grid(const GridConfig& cfg) {
    if (cfg.nx < 2 || cfg.ny < 2 || cfg.np < 2)
        throw std::invalid_argument("build_grid: nx, ny, np must be >= 2");
    if (!(cfg.Lx > 0.0) || !(cfg.Ly > 0.0))
        throw std::invalid_argument("build_grid: horizontal extents must be positive");
    if (!(cfg.p0 > cfg.p1) || !(cfg.p1 > 0.0))
        throw std::invalid_argument("build_grid: require p0 > p1 > 0");
    if (!(cfg.g > 0.0) || !(cfg.R_d > 0.0))
        throw std::invalid_argument("build_grid: g and R_d must be positive");

    Grid g;
    g.nx = cfg.nx;
    g.ny = cfg.ny;
    g.np = cfg.np;
    g.Lx = cfg.Lx;
    g.Ly = cfg.Ly;
    g.p1 = cfg.p1;
    g.p0 = cfg.p0;
    g.dx = cfg.Lx / cfg.nx;
    g.dy = cfg.Ly / cfg.ny;
    g.dp = (cfg.p0 - cfg.p1) / cfg.np;

    g.p_centers.resize(cfg.np);
    g.p_faces.resize(cfg.np + 1);
    g.tbar.resize(cfg.np);
    g.tbar_face.resize(cfg.np + 1);
    g.w.resize(cfg.np);
    g.w_face.resize(cfg.np + 1);

    for (int k = 0; k <= cfg.np; ++k) g.p_faces[k] = cfg.p1 + k * g.dp;
    for (int k = 0; k < cfg.np; ++k) g.p_centers[k] = cfg.p1 + (k + 0.5) * g.dp;

    auto check_tbar = [](double T) {
        if (!std::isfinite(T) || T <= 0.0)
            throw std::invalid_argument(
                "build_grid: T-bar profile must be finite and strictly positive");
        return T;
    };
    for (int k = 0; k < cfg.np; ++k) {
        g.tbar[k] = check_tbar(cfg.tbar(g.p_centers[k]));
        g.w[k] = cfg.g * g.p_centers[k] / (cfg.R_d * g.tbar[k]);
    }
    for (int k = 0; k <= cfg.np; ++k)
        g.tbar_face[k] = check_tbar(cfg.tbar(g.p_faces[k]));

    // interior faces: geometric interpolation of the center weights
    // (positivity of the diffusion stencil); boundary faces from the
    // profile evaluated at the face pressure.
    g.w_face[0] = cfg.g * g.p_faces[0] / (cfg.R_d * g.tbar_face[0]);
    g.w_face[cfg.np] = cfg.g * g.p_faces[cfg.np] / (cfg.R_d * g.tbar_face[cfg.np]);
    for (int k = 1; k < cfg.np; ++k)
        g.w_face[k] = std::sqrt(g.w[k - 1] * g.w[k]);

    g.w_min = g.w_face[0];
    g.w_max = g.w_face[0];
    for (int k = 0; k <= cfg.np; ++k) {
        g.w_min = std::min(g.w_min, g.w_face[k]);
        g.w_max = std::max(g.w_max, g.w_face[k]);
    }
    for (int k = 0; k < cfg.np; ++k) {
        g.w_min = std::min(g.w_min, g.w[k]);
        g.w_max = std::max(g.w_max, g.w[k]);
    }
    if (!(g.w_min > 0.0) || !std::isfinite(g.w_max))
        throw std::invalid_argument("build_grid: diffusion weight not positive and bounded");
    return g;
}

}  // namespace cloudsim
