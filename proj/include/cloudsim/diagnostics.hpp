#pragma once

#include <string>
#include <vector>

#include "cloudsim/grid.hpp"
#include "cloudsim/params.hpp"
#include "cloudsim/state.hpp"

namespace cloudsim {

/// Discrete norms for one field at one instant. Gradient norms use
/// centered differences on the interior; the vertical one carries the
/// w(p) weight of the diffusion operator.
struct FieldNorms {
    double l2 = 0;
    double linf = 0;
    double min = 0;
    double grad_h = 0;    // ||∇_h f||
    double grad_p_w = 0;  // ||∂_p f||_w
    double h1w = 0;       // sqrt(l2² + grad_h² + grad_p_w²)
};

struct NormRecord {
    double t = 0;
    FieldNorms f[4];  // T, qv, qc, qr
};

NormRecord record_norms(const MoistState& state, const Grid& grid,
                        const PhysParams& params);

struct Violation {
    double t;
    int field;      // 0..3 prognostic, 4 = coefficient bound
    int i, j, k;
    double value;
    double bound;
    std::string what;
};

struct BoundTolerances {
    double neg = 1e-12;      // nonnegativity slack
    double qv_star = 1e-10;  // q_v* slack
};

/// Cells violating T >= -tol, q_j >= -tol, q_v <= q_v* + tol, and the
/// pointwise coefficient bounds kappa~ in (0, kappa1],
/// c_l qr+/C~+ in [0,1], 1/C~+ <= 1/c_pd.
std::vector<Violation> check_bounds(const MoistState& state, const Grid& grid,
                                    const PhysParams& params, double qv_star,
                                    const BoundTolerances& tol = {});

/// De Giorgi level-set truncation energies for the temperature:
/// lambda_k = M (1 - 2^-k), J_k = sup_t ||T_k||² + ∫ (mu_T ||∇_h T_k||²
/// + nu_T ||∂_p T_k||_w²) dt with T_k = (T - lambda_k)+. The time
/// integral accumulates with left-endpoint steps matching the explicit
/// stepping.
struct LevelSetSeries {
    double M = 0;
    int kmax = 8;
    std::vector<double> lambda;   // kmax entries, k = 1..kmax
    std::vector<double> sup_sq;   // running sup ||T_k||²
    std::vector<double> integral; // running dissipation integral
    std::vector<double> J;        // sup_sq + integral

    LevelSetSeries() = default;
    LevelSetSeries(double M_, int kmax_);
};

void update_level_sets(LevelSetSeries& series, const MoistState& state,
                       const Grid& grid, const PhysParams& params, double dt);

}  // namespace cloudsim
