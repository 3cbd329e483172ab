#include "cloudsim/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "cloudsim/thermo.hpp"

namespace cloudsim {

namespace {

struct GradSq {
    double grad_h = 0, grad_p_w = 0;
};

// Centered differences on the interior, one-sided at the first and last
// interior cells; the vertical part carries the w(p) weight.
template <typename Sample>
GradSq gradient_squares(Sample&& f, const Grid& g) {
    GradSq out;
    const double dv = g.cell_volume();
    for (int k = 1; k <= g.np; ++k) {
        const double w = g.w[k - 1];
        for (int j = 1; j <= g.ny; ++j)
            for (int i = 1; i <= g.nx; ++i) {
                double fx, fy, fp;
                if (i == 1)
                    fx = (f(2, j, k) - f(1, j, k)) / g.dx;
                else if (i == g.nx)
                    fx = (f(g.nx, j, k) - f(g.nx - 1, j, k)) / g.dx;
                else
                    fx = (f(i + 1, j, k) - f(i - 1, j, k)) / (2.0 * g.dx);
                if (j == 1)
                    fy = (f(i, 2, k) - f(i, 1, k)) / g.dy;
                else if (j == g.ny)
                    fy = (f(i, g.ny, k) - f(i, g.ny - 1, k)) / g.dy;
                else
                    fy = (f(i, j + 1, k) - f(i, j - 1, k)) / (2.0 * g.dy);
                if (k == 1)
                    fp = (f(i, j, 2) - f(i, j, 1)) / g.dp;
                else if (k == g.np)
                    fp = (f(i, j, g.np) - f(i, j, g.np - 1)) / g.dp;
                else
                    fp = (f(i, j, k + 1) - f(i, j, k - 1)) / (2.0 * g.dp);
                out.grad_h += (fx * fx + fy * fy) * dv;
                out.grad_p_w += w * w * fp * fp * dv;
            }
    }
    return out;
}

}  // namespace

NormRecord record_norms(const MoistState& state, const Grid& grid,
                        const PhysParams&) {
    NormRecord rec;
    rec.t = state.t;
    const double dv = grid.cell_volume();
    for (int f = 0; f < 4; ++f) {
        const ScalarField& y = state.field(f);
        FieldNorms& n = rec.f[f];
        double ss = 0, linf = 0, mn = y(1, 1, 1);
        for (int k = 1; k <= grid.np; ++k)
            for (int j = 1; j <= grid.ny; ++j)
                for (int i = 1; i <= grid.nx; ++i) {
                    const double v = y(i, j, k);
                    ss += v * v;
                    linf = std::max(linf, std::abs(v));
                    mn = std::min(mn, v);
                }
        n.l2 = std::sqrt(ss * dv);
        n.linf = linf;
        n.min = mn;
        const GradSq gs = gradient_squares(
            [&](int i, int j, int k) { return y(i, j, k); }, grid);
        n.grad_h = std::sqrt(gs.grad_h);
        n.grad_p_w = std::sqrt(gs.grad_p_w);
        n.h1w = std::sqrt(n.l2 * n.l2 + gs.grad_h + gs.grad_p_w);
    }
    return rec;
}

std::vector<Violation> check_bounds(const MoistState& state, const Grid& grid,
                                    const PhysParams& params, double qv_star,
                                    const BoundTolerances& tol) {
    std::vector<Violation> out;
    const double kappa1 = params.kappa1();
    const double t = state.t;

    auto report = [&](int field, int i, int j, int k, double value,
                      double bound, const char* what) {
        out.push_back({t, field, i, j, k, value, bound, what});
    };

    for (int k = 1; k <= grid.np; ++k)
        for (int j = 1; j <= grid.ny; ++j)
            for (int i = 1; i <= grid.nx; ++i) {
                const double T = state.T(i, j, k);
                const double qv = state.qv(i, j, k);
                const double qc = state.qc(i, j, k);
                const double qr = state.qr(i, j, k);
                if (T < -tol.neg) report(0, i, j, k, T, 0.0, "T < 0");
                if (qv < -tol.neg) report(1, i, j, k, qv, 0.0, "qv < 0");
                if (qc < -tol.neg) report(2, i, j, k, qc, 0.0, "qc < 0");
                if (qr < -tol.neg) report(3, i, j, k, qr, 0.0, "qr < 0");
                if (qv > qv_star + tol.qv_star)
                    report(1, i, j, k, qv, qv_star, "qv > qv*");

                const MoistCoeffs mc = moist_coeffs(qv, qc, qr, T, params);
                if (!(mc.kappa_tilde > 0.0) || mc.kappa_tilde > kappa1 + 1e-14)
                    report(4, i, j, k, mc.kappa_tilde, kappa1,
                           "kappa~ outside (0, kappa1]");
                const double rain_coef =
                    params.c_l * std::max(qr, 0.0) * mc.inv_C;
                if (rain_coef < 0.0 || rain_coef > 1.0 + 1e-14)
                    report(4, i, j, k, rain_coef, 1.0,
                           "c_l qr+/C~+ outside [0,1]");
                if (mc.inv_C > 1.0 / params.c_pd + 1e-14)
                    report(4, i, j, k, mc.inv_C, 1.0 / params.c_pd,
                           "1/C~+ > 1/c_pd");
            }
    return out;
}

LevelSetSeries::LevelSetSeries(double M_, int kmax_) : M(M_), kmax(kmax_) {
    lambda.resize(kmax);
    sup_sq.assign(kmax, 0.0);
    integral.assign(kmax, 0.0);
    J.assign(kmax, 0.0);
    for (int k = 1; k <= kmax; ++k)
        lambda[k - 1] = M * (1.0 - std::pow(2.0, -k));
}

void update_level_sets(LevelSetSeries& series, const MoistState& state,
                       const Grid& grid, const PhysParams& params, double dt) {
    const double dv = grid.cell_volume();
    for (int lk = 0; lk < series.kmax; ++lk) {
        const double lam = series.lambda[lk];
        auto trunc = [&](int i, int j, int k) {
            return std::max(state.T(i, j, k) - lam, 0.0);
        };
        double ss = 0;
        for (int k = 1; k <= grid.np; ++k)
            for (int j = 1; j <= grid.ny; ++j)
                for (int i = 1; i <= grid.nx; ++i) {
                    const double v = trunc(i, j, k);
                    ss += v * v;
                }
        ss *= dv;
        series.sup_sq[lk] = std::max(series.sup_sq[lk], ss);
        if (dt > 0.0 && ss > 0.0) {
            const GradSq gs = gradient_squares(trunc, grid);
            series.integral[lk] +=
                dt * (params.mu_T * gs.grad_h + params.nu_T * gs.grad_p_w);
        }
        series.J[lk] = series.sup_sq[lk] + series.integral[lk];
    }
}

}  // namespace cloudsim
