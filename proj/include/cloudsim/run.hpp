#pragma once

#include <string>

#include "cloudsim/config.hpp"
#include "cloudsim/diagnostics.hpp"
#include "cloudsim/solver.hpp"

namespace cloudsim {

/// Integrates the configured problem on [0, t_end], writing snapshots
/// and the diagnostics / violations CSV streams into output.dir at the
/// configured cadence. Partial outputs are preserved on failure.
///
/// diagnostics.csv columns (fixed order):
///   t, then per field f in {T,qv,qc,qr}: f_l2 f_linf f_min f_gradh
///   f_gradpw f_h1w, then qv_star, max_T, levelset_M, J_1..J_kmax,
///   violations, clipped_cells
/// violations.csv columns: t, field, i, j, k, value, bound, what
RunResult run(const RunConfig& cfg, Exec exec = Exec::OpenMP);

/// q_v* = max{||qv0||inf, sup qb0v, sup qblv, q_vs*}; computed at run
/// start and monitored throughout.
double compute_qv_star(const RunConfig& cfg, const Grid& grid,
                       const MoistState& initial, const BoundarySpec& bc);

/// Level-set threshold: configured value, or the auto rule
/// M = 2 max{||T0||inf, T_crit, sup of the T boundary data}.
double compute_levelset_M(const RunConfig& cfg, const Grid& grid,
                          const MoistState& initial, const BoundarySpec& bc);

}  // namespace cloudsim
