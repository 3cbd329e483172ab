#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cloudsim/grid.hpp"

namespace cloudsim {

/// Prescribed velocity at one instant. Cell-center samples (u, v, omega)
/// are the authoritative values for diagnostics and file I/O; the face
/// arrays carry the normal components used by the flux-form advection
/// kernel. For the analytic family the face field is discretely
/// divergence-free to rounding, with exactly zero normal components on
/// all boundary faces.
struct VelocityField {
    int nx = 0, ny = 0, np = 0;
    double t = 0.0;
    // cell centers, size nx*ny*np, p-major / y-middle / x-minor
    std::vector<double> u, v, omega;
    // face-normal components
    std::vector<double> uf;  // (nx+1) * ny * np
    std::vector<double> vf;  // nx * (ny+1) * np
    std::vector<double> wf;  // nx * ny * (np+1)

    void resize(int nx_, int ny_, int np_);

    std::size_t cidx(int i, int j, int k) const {  // 0-based center index
        return (static_cast<std::size_t>(k) * ny + j) * nx + i;
    }
    std::size_t uidx(int i, int j, int k) const {  // i in [0,nx]
        return (static_cast<std::size_t>(k) * ny + j) * (nx + 1) + i;
    }
    std::size_t vidx(int i, int j, int k) const {  // j in [0,ny]
        return (static_cast<std::size_t>(k) * (ny + 1) + j) * nx + i;
    }
    std::size_t widx(int i, int j, int k) const {  // k in [0,np]
        return (static_cast<std::size_t>(k) * ny + j) * nx + i;
    }

    /// Fills faces by averaging adjacent centers; boundary-normal faces
    /// are forced to zero (no-penetration).
    void faces_from_centers();

    double max_abs_component() const;
};

/// Separable divergence-free analytic family:
///   u = A m(t) sin(pi x/Lx) cos(pi y/Ly) s'(p)
///   v = A m(t) cos(pi x/Lx) sin(pi y/Ly) s'(p)
///   omega = -A m(t) pi (1/Lx + 1/Ly) cos(pi x/Lx) cos(pi y/Ly) s(p)
/// with s(p) = ((p0-p1)/pi) sin(pi (p-p1)/(p0-p1)) (vanishing at both
/// pressure boundaries) and m(t) = cos(2 pi time_freq t).
struct AnalyticFlowSpec {
    double amplitude = 1.0;
    int mode_x = 1, mode_y = 1, mode_p = 1;
    double time_freq = 0.0;
};

VelocityField analytic_velocity(const AnalyticFlowSpec& spec,
                                const Grid& grid, double t);

struct ValidationReport {
    double max_divergence = 0.0;    // centered-difference interior residual
    double max_boundary_flux = 0.0; // extrapolated normal component
    double div_tol = 0.0;
    double flux_tol = 0.0;
    bool pass = true;
};

/// Checks incompressibility and no-penetration of the center-sampled
/// field. Tolerances default to 10 h^2 scaled by the velocity magnitude.
ValidationReport validate_velocity(const VelocityField& vel,
                                   const Grid& grid,
                                   double div_tol = -1.0,
                                   double flux_tol = -1.0);

/// Time-dependent velocity source shared by the solver.
class VelocityProvider {
public:
    virtual ~VelocityProvider() = default;
    virtual VelocityField at(double t, const Grid& grid) const = 0;
};

class ZeroVelocity final : public VelocityProvider {
public:
    VelocityField at(double t, const Grid& grid) const override;
};

class AnalyticVelocity final : public VelocityProvider {
public:
    AnalyticVelocity(AnalyticFlowSpec spec, const Grid& grid);
    VelocityField at(double t, const Grid& grid) const override;
    const AnalyticFlowSpec& spec() const { return spec_; }

private:
    AnalyticFlowSpec spec_;
};

/// Frame series with linear time interpolation. Frames outside the
/// stored time range clamp to the nearest frame.
class VelocitySeries final : public VelocityProvider {
public:
    VelocitySeries(std::vector<double> times, std::vector<VelocityField> frames);
    VelocityField at(double t, const Grid& grid) const override;
    std::size_t frame_count() const { return frames_.size(); }

private:
    std::vector<double> times_;
    std::vector<VelocityField> frames_;
};

/// Binary series I/O (flat little-endian; see io.hpp for the layout).
/// Loading validates every frame against the grid and tolerances.
std::unique_ptr<VelocitySeries> load_velocity_series(const std::string& path,
                                                     const Grid& grid,
                                                     double div_tol = -1.0,
                                                     double flux_tol = -1.0);
void save_velocity_series(const std::string& path, const Grid& grid,
                          const std::vector<double>& times,
                          const std::vector<VelocityField>& frames);

}  // namespace cloudsim
