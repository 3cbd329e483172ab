#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cloudsim/boundary.hpp"
#include "cloudsim/expression.hpp"
#include "cloudsim/grid.hpp"
#include "cloudsim/params.hpp"
#include "cloudsim/solver.hpp"
#include "cloudsim/state.hpp"
#include "cloudsim/velocity.hpp"

namespace cloudsim {

/// Error carrying the config path/key context.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class VelocityKind { None, Analytic, File };

struct VelocityConfig {
    VelocityKind kind = VelocityKind::None;
    AnalyticFlowSpec spec;
    std::string path;
    double div_tol = -1.0;   // <0: auto h² scaling
    double flux_tol = -1.0;
};

struct InitialConfig {
    // either four expressions in (x,y,p,t at 0) or a checkpoint path
    std::string expr[4] = {"0", "0", "0", "0"};  // T, qv, qc, qr
    std::string snapshot;
};

struct BoundaryConfig {
    // per field: alpha0/b0 as expressions in (x,y,t), alphal/bl in (p,t)
    std::string alpha0[4] = {"0", "0", "0", "0"};
    std::string b0[4] = {"0", "0", "0", "0"};
    std::string alphal[4] = {"0", "0", "0", "0"};
    std::string bl[4] = {"0", "0", "0", "0"};
};

struct OutputConfig {
    std::string dir = "out";
    double cadence = 0.0;  // simulated-time interval; 0 = endpoints only
    bool checkpoint = true;
    bool vtk = false;
    std::vector<int> csv_levels;  // p-level indices (1-based) for CSV slices
};

struct DiagnosticsConfig {
    double levelset_M = 0.0;  // 0 = auto: 2 max{||T0||inf, T_crit, sup T_b}
    int levelset_kmax = 8;
    double tol_neg = 1e-12;
    double tol_qv = 1e-10;
};

struct MMSConfig {
    std::string mms_case = "diffusion";  // diffusion | advection
    std::vector<int> levels = {16, 32, 64};
};

struct RunConfig {
    // [grid]
    int nx = 32, ny = 32, np = 32;
    double Lx = 1.0, Ly = 1.0, p1 = 1.0, p0 = 2.0;
    std::string tbar = "1.0";  // expression in p
    // [physics]
    PhysParams physics;
    double beta = 1.0;  // validated to equal 1
    // [velocity]
    VelocityConfig velocity;
    // [initial]
    InitialConfig initial;
    // [boundary]
    BoundaryConfig boundary;
    // [stepping]
    StepControl stepping;
    // [output]
    OutputConfig output;
    // [diagnostics]
    DiagnosticsConfig diagnostics;
    // [mms]
    MMSConfig mms;
    // [run]
    unsigned long seed = 0;

    std::string serialize() const;

    Grid make_grid() const;
    BoundarySpec make_boundary() const;
    std::unique_ptr<VelocityProvider> make_velocity(const Grid& grid) const;
    /// Initial state from expressions or checkpoint; validated
    /// nonnegative and finite.
    MoistState make_initial_state(const Grid& grid) const;
};

/// Parses and fully validates a config file. Unknown sections or keys
/// are rejected; beta != 1 is rejected (only the linear evaporation
/// exponent is supported).
RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(const std::string& text,
                            const std::string& origin = "<string>");

}  // namespace cloudsim
