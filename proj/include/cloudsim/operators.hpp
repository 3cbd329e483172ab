#pragma once

#include "cloudsim/boundary.hpp"
#include "cloudsim/field.hpp"
#include "cloudsim/grid.hpp"
#include "cloudsim/params.hpp"
#include "cloudsim/state.hpp"
#include "cloudsim/velocity.hpp"

namespace cloudsim {

/// Kernel backend. The serial path is the reference implementation the
/// tests compare against; OpenMP parallelizes over p-slabs with static
/// scheduling so results are bit-identical for any thread count.
enum class Exec { Serial, OpenMP };

/// Sets all six ghost faces: Robin at Γ0 and Γ_l via second-order
/// one-sided extrapolation, mirror at Γ1. Interior values are untouched.
void apply_boundary_ghosts(ScalarField& f, const FieldBC& bc,
                           const Grid& grid, double t,
                           Exec exec = Exec::OpenMP);

/// -∇·(v f) in conservative flux form, first-order upwind on the face
/// velocities. Boundary-face fluxes are zero (no-penetration), so the
/// global sum is preserved to rounding.
void advect(const ScalarField& f, const VelocityField& vel,
            const Grid& grid, ScalarField& out, Exec exec = Exec::OpenMP);

/// mu (∂_x² + ∂_y²) f, standard 5-point stencil per p-level.
void horizontal_laplacian(const ScalarField& f, const Grid& grid, double mu,
                          ScalarField& out, Exec exec = Exec::OpenMP);

/// nu ∂_p(w² ∂_p f) in flux form with face-interpolated w².
void weighted_vertical_diffusion(const ScalarField& f, const Grid& grid,
                                 double nu, ScalarField& out,
                                 Exec exec = Exec::OpenMP);

/// -V ∂_p(p q_r/(R_d T̄)), upwinded along the positive-p characteristic:
/// zero inflow at Γ1, free outflow at Γ0.
void sedimentation(const ScalarField& qr, const Grid& grid, double V,
                   double R_d, ScalarField& out, Exec exec = Exec::OpenMP);

/// The two non-advective temperature transport terms:
/// kappa~+ (T/p) omega  -  (c_l qr+/C~+) V ∂_p T (upwind).
void temperature_extras(const MoistState& state, const VelocityField& vel,
                        const Grid& grid, const PhysParams& params,
                        ScalarField& out, Exec exec = Exec::OpenMP);

}  // namespace cloudsim
