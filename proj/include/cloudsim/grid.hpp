#pragma once

#include <functional>
#include <vector>

namespace cloudsim {

/// Inputs for grid construction. `tbar` is the background temperature
/// profile T̄(p); it must stay strictly positive and bounded on [p1, p0].
/// `g` and `R_d` enter the vertical diffusion weight w(p) = g p/(R_d T̄).
struct GridConfig {
    int nx = 32, ny = 32, np = 32;
    double Lx = 1.0, Ly = 1.0;
    double p1 = 1.0, p0 = 2.0;  // pressure bounds, p0 > p1 > 0
    std::function<double(double)> tbar = [](double) { return 1.0; };
    double g = 9.81;
    double R_d = 287.0;
};

/// Uniform cell-centered grid on the cylinder (0,Lx)x(0,Ly)x(p1,p0).
///
/// The vertical index k increases with pressure: p_centers[0] is next to
/// the top boundary Γ1 (p = p1) and p_centers[np-1] next to the bottom
/// Γ0 (p = p0). Interior field indices are 1-based, so cell (i,j,k)
/// sits at (x_center(i), y_center(j), p_centers[k-1]).
struct Grid {
    int nx = 0, ny = 0, np = 0;
    double Lx = 0, Ly = 0, p1 = 0, p0 = 0;
    double dx = 0, dy = 0, dp = 0;

    std::vector<double> p_centers;  // np values, increasing
    std::vector<double> p_faces;    // np+1 values, p_faces[0] = p1
    std::vector<double> tbar;       // T̄ at centers
    std::vector<double> tbar_face;  // T̄ at faces
    std::vector<double> w;          // g p/(R_d T̄) at centers
    std::vector<double> w_face;     // weight at faces (geometric interior interp)
    double w_min = 0, w_max = 0;

    double x_center(int i) const { return (i - 0.5) * dx; }  // i in [1,nx]
    double y_center(int j) const { return (j - 0.5) * dy; }
    double p_center(int k) const { return p_centers[k - 1]; }  // k in [1,np]
    double cell_volume() const { return dx * dy * dp; }
};

/// Builds the grid, validating extents and the T̄ profile.
Grid build_grid(const GridConfig& cfg);

}  // namespace cloudsim
