#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cloudsim/boundary.hpp"
#include "cloudsim/grid.hpp"
#include "cloudsim/operators.hpp"
#include "cloudsim/state.hpp"
#include "cloudsim/velocity.hpp"

namespace cloudsim {

enum class Scheme { Euler, RK2, Strang };

Scheme scheme_from_string(const std::string& s);
const char* scheme_name(Scheme s);

struct StepControl {
    double cfl_adv = 0.9;
    double cfl_diff = 0.9;
    double cfl_sed = 0.9;
    double dt_max = 1e30;
    double dt_floor = 1e-14;  // smaller dt signals blow-up
    double t_end = 1.0;
    Scheme scheme = Scheme::Euler;
    bool clip_negative = false;

    void validate() const;
};

/// Space-time forcing, one function per prognostic field (MMS harness).
struct Forcing {
    using Fn = std::function<double(double x, double y, double p, double t)>;
    Fn T, qv, qc, qr;
    const Fn& field(int idx) const {
        switch (idx) {
            case 0: return T;
            case 1: return qv;
            case 2: return qc;
            default: return qr;
        }
    }
};

struct Tendencies {
    ScalarField T, qv, qc, qr;
    explicit Tendencies(const Grid& g)
        : T(g.nx, g.ny, g.np), qv(g.nx, g.ny, g.np),
          qc(g.nx, g.ny, g.np), qr(g.nx, g.ny, g.np) {}
    ScalarField& field(int idx) {
        switch (idx) {
            case 0: return T;
            case 1: return qv;
            case 2: return qc;
            default: return qr;
        }
    }
};

/// Assembles the full right-hand side of the truncated system at time t.
/// Ghost layers of `state` are refreshed in place. `vertical_diffusion`
/// is skipped when false (the Strang scheme treats it implicitly).
void rhs(MoistState& state, const VelocityField& vel, const Grid& grid,
         const PhysParams& params, const BoundarySpec& bc, double t,
         Tendencies& out, const Forcing* forcing = nullptr,
         bool vertical_diffusion = true, Exec exec = Exec::OpenMP);

/// Stability-limited time step: min over the advective, diffusive,
/// sedimentation, rain-transport-of-T, adiabatic-compression, and
/// source-decay limits, scaled by the safety factors and capped at
/// dt_max. Throws on underflow below dt_floor.
double stable_dt(const MoistState& state, const VelocityField& vel,
                 const Grid& grid, const PhysParams& params,
                 const StepControl& ctrl);

struct StepStats {
    double dt = 0.0;
    long clipped_cells = 0;
};

/// One time step of the selected scheme. Deterministic for fixed inputs
/// and any OpenMP thread count. Throws on NaN/Inf in the result.
StepStats step(MoistState& state, const VelocityProvider& velp,
               const Grid& grid, const PhysParams& params,
               const BoundarySpec& bc, const StepControl& ctrl, double dt,
               const Forcing* forcing = nullptr, Exec exec = Exec::OpenMP);

struct FieldSummary {
    double min = 0, max = 0, l2 = 0;
};

struct RunResult {
    double t_final = 0;
    long steps = 0;
    long invariant_violations = 0;
    long clipped_cells = 0;
    FieldSummary T, qv, qc, qr;
    double qv_star = 0;    // maximum-principle bound used
    double levelset_M = 0;
};

/// Manufactured-solutions case: closed-form targets, their induced
/// forcing, and the parameter overrides the case is exact under.
struct MMSCase {
    std::string name;
    using TargetFn = std::function<double(double x, double y, double p, double t)>;
    TargetFn target[4];  // T, qv, qc, qr
    Forcing forcing;
    PhysParams params;
    StepControl ctrl;
    bool use_velocity = false;  // analytic family when true, zero otherwise
    AnalyticFlowSpec flow;
    double t_end = 0.01;
};

MMSCase make_diffusion_mms_case();
MMSCase make_advection_mms_case();

struct ObservedOrders {
    std::vector<int> levels;
    std::vector<double> h;
    std::vector<std::array<double, 4>> errors;  // per level, per field
    std::array<double, 4> order{};              // least-squares slope
    bool monotone = true;
};

/// Runs `c` on cubic grids of the given sizes and fits the observed
/// convergence order per field. Requires >= 3 levels.
ObservedOrders mms_convergence(const MMSCase& c, const std::vector<int>& levels,
                               Exec exec = Exec::OpenMP);

}  // namespace cloudsim
