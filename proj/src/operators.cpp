#include "cloudsim/operators.hpp"

#include <algorithm>
#include <cmath>

#include "cloudsim/thermo.hpp"

namespace cloudsim {

namespace {

// All kernels are maps over p-slabs; parallelization over k with a
// static schedule keeps results bit-identical for any thread count.
template <typename F>
void for_each_slab(int np, Exec exec, F&& body) {
    if (exec == Exec::Serial) {
        for (int k = 1; k <= np; ++k) body(k);
    } else {
#pragma omp parallel for schedule(static)
        for (int k = 1; k <= np; ++k) body(k);
    }
}

// Second-order one-sided Robin closure: with f_i the first interior
// value and h the spacing, the ghost value satisfies
// (f_g - f_i)/h = alpha (b - (f_g + f_i)/2) along the outward normal.
inline double robin_ghost(double f_i, double alpha, double b, double h) {
    const double ah = 0.5 * alpha * h;
    return (f_i * (1.0 - ah) + alpha * h * b) / (1.0 + ah);
}

}  // namespace

void apply_boundary_ghosts(ScalarField& f, const FieldBC& bc,
                           const Grid& grid, double t, Exec exec) {
    const int nx = grid.nx, ny = grid.ny, np = grid.np;

    // Γ1 (k=0 ghost, p=p1): homogeneous Neumann.
    // Γ0 (k=np+1 ghost, p=p0): Robin with data in (x,y,t).
    auto horizontal_faces = [&](int j) {
        const double y = grid.y_center(j);
        for (int i = 1; i <= nx; ++i) {
            const double x = grid.x_center(i);
            f(i, j, 0) = f(i, j, 1);
            f(i, j, np + 1) = robin_ghost(f(i, j, np), bc.alpha0(x, y, t),
                                          bc.b0(x, y, t), grid.dp);
        }
    };
    if (exec == Exec::Serial) {
        for (int j = 1; j <= ny; ++j) horizontal_faces(j);
    } else {
#pragma omp parallel for schedule(static)
        for (int j = 1; j <= ny; ++j) horizontal_faces(j);
    }

    // lateral faces: Robin with data in (p,t), shared by all four sides
    for_each_slab(np, exec, [&](int k) {
        const double p = grid.p_center(k);
        const double al = bc.alphal(p, t);
        const double bl = bc.bl(p, t);
        for (int j = 1; j <= ny; ++j) {
            f(0, j, k) = robin_ghost(f(1, j, k), al, bl, grid.dx);
            f(nx + 1, j, k) = robin_ghost(f(nx, j, k), al, bl, grid.dx);
        }
        for (int i = 1; i <= nx; ++i) {
            f(i, 0, k) = robin_ghost(f(i, 1, k), al, bl, grid.dy);
            f(i, ny + 1, k) = robin_ghost(f(i, ny, k), al, bl, grid.dy);
        }
    });
}

void advect(const ScalarField& f, const VelocityField& vel, const Grid& grid,
            ScalarField& out, Exec exec) {
    const int nx = grid.nx, ny = grid.ny, np = grid.np;
    const double rdx = 1.0 / grid.dx, rdy = 1.0 / grid.dy, rdp = 1.0 / grid.dp;

    auto flux = [](double vn, double fl, double fr) {
        return vn >= 0.0 ? vn * fl : vn * fr;
    };

    for_each_slab(np, exec, [&](int k) {
        const int kv = k - 1;
        for (int j = 1; j <= ny; ++j) {
            const int jv = j - 1;
            for (int i = 1; i <= nx; ++i) {
                const int iv = i - 1;
                const double fxl = flux(vel.uf[vel.uidx(iv, jv, kv)],
                                        f(i - 1, j, k), f(i, j, k));
                const double fxr = flux(vel.uf[vel.uidx(iv + 1, jv, kv)],
                                        f(i, j, k), f(i + 1, j, k));
                const double fyl = flux(vel.vf[vel.vidx(iv, jv, kv)],
                                        f(i, j - 1, k), f(i, j, k));
                const double fyr = flux(vel.vf[vel.vidx(iv, jv + 1, kv)],
                                        f(i, j, k), f(i, j + 1, k));
                const double fpl = flux(vel.wf[vel.widx(iv, jv, kv)],
                                        f(i, j, k - 1), f(i, j, k));
                const double fpr = flux(vel.wf[vel.widx(iv, jv, kv + 1)],
                                        f(i, j, k), f(i, j, k + 1));
                out(i, j, k) = -((fxr - fxl) * rdx + (fyr - fyl) * rdy +
                                 (fpr - fpl) * rdp);
            }
        }
    });
}

void horizontal_laplacian(const ScalarField& f, const Grid& grid, double mu,
                          ScalarField& out, Exec exec) {
    const int nx = grid.nx, ny = grid.ny, np = grid.np;
    const double rdx2 = 1.0 / (grid.dx * grid.dx);
    const double rdy2 = 1.0 / (grid.dy * grid.dy);
    for_each_slab(np, exec, [&](int k) {
        for (int j = 1; j <= ny; ++j)
            for (int i = 1; i <= nx; ++i)
                out(i, j, k) =
                    mu * ((f(i + 1, j, k) - 2.0 * f(i, j, k) + f(i - 1, j, k)) * rdx2 +
                          (f(i, j + 1, k) - 2.0 * f(i, j, k) + f(i, j - 1, k)) * rdy2);
    });
}

void weighted_vertical_diffusion(const ScalarField& f, const Grid& grid,
                                 double nu, ScalarField& out, Exec exec) {
    const int nx = grid.nx, ny = grid.ny, np = grid.np;
    const double rdp2 = 1.0 / (grid.dp * grid.dp);
    for_each_slab(np, exec, [&](int k) {
        // face k-1 sits toward p1 (below cell k in index, above in height)
        const double wlo2 = grid.w_face[k - 1] * grid.w_face[k - 1];
        const double whi2 = grid.w_face[k] * grid.w_face[k];
        for (int j = 1; j <= ny; ++j)
            for (int i = 1; i <= nx; ++i)
                out(i, j, k) = nu * rdp2 *
                               (whi2 * (f(i, j, k + 1) - f(i, j, k)) -
                                wlo2 * (f(i, j, k) - f(i, j, k - 1)));
    });
}

void sedimentation(const ScalarField& qr, const Grid& grid, double V,
                   double R_d, ScalarField& out, Exec exec) {
    if (V < 0.0) throw std::invalid_argument("sedimentation: requires V >= 0");
    const int nx = grid.nx, ny = grid.ny, np = grid.np;
    const double rdp = 1.0 / grid.dp;
    // characteristic speed V p/(R_d T̄) > 0, transport toward p0;
    // zero inflow at Γ1 (face 0), free outflow at Γ0 (face np)
    std::vector<double> c_face(np + 1);
    for (int k = 0; k <= np; ++k)
        c_face[k] = V * grid.p_faces[k] / (R_d * grid.tbar_face[k]);

    for_each_slab(np, exec, [&](int k) {
        for (int j = 1; j <= ny; ++j)
            for (int i = 1; i <= nx; ++i) {
                const double g_lo =
                    (k == 1) ? 0.0 : c_face[k - 1] * qr(i, j, k - 1);
                const double g_hi = c_face[k] * qr(i, j, k);
                out(i, j, k) = -(g_hi - g_lo) * rdp;
            }
    });
}

void temperature_extras(const MoistState& state, const VelocityField& vel,
                        const Grid& grid, const PhysParams& params,
                        ScalarField& out, Exec exec) {
    const int nx = grid.nx, ny = grid.ny, np = grid.np;
    const double rdp = 1.0 / grid.dp;
    for_each_slab(np, exec, [&](int k) {
        const double p = grid.p_center(k);
        for (int j = 1; j <= ny; ++j)
            for (int i = 1; i <= nx; ++i) {
                const double T = state.T(i, j, k);
                const MoistCoeffs mc =
                    moist_coeffs(state.qv(i, j, k), state.qc(i, j, k),
                                 state.qr(i, j, k), T, params);
                const double om = vel.omega[vel.cidx(i - 1, j - 1, k - 1)];
                const double adiabatic = mc.kappa_tilde * (T / p) * om;
                // rain-advected temperature: speed >= 0 toward p0, so
                // upwind uses the k-1 neighbor
                const double coef =
                    params.c_l * std::max(state.qr(i, j, k), 0.0) * mc.inv_C;
                const double rain =
                    -coef * params.V * (T - state.T(i, j, k - 1)) * rdp;
                out(i, j, k) = adiabatic + rain;
            }
    });
}

}  // namespace cloudsim
