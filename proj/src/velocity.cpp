#include "cloudsim/velocity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cloudsim/io.hpp"
#include "binio.hpp"

namespace cloudsim {

void VelocityField::resize(int nx_, int ny_, int np_) {
    nx = nx_;
    ny = ny_;
    np = np_;
    const std::size_t n = static_cast<std::size_t>(nx) * ny * np;
    u.assign(n, 0.0);
    v.assign(n, 0.0);
    omega.assign(n, 0.0);
    uf.assign(static_cast<std::size_t>(nx + 1) * ny * np, 0.0);
    vf.assign(static_cast<std::size_t>(nx) * (ny + 1) * np, 0.0);
    wf.assign(static_cast<std::size_t>(nx) * ny * (np + 1), 0.0);
}

void VelocityField::faces_from_centers() {
    for (int k = 0; k < np; ++k)
        for (int j = 0; j < ny; ++j) {
            uf[uidx(0, j, k)] = 0.0;
            uf[uidx(nx, j, k)] = 0.0;
            for (int i = 1; i < nx; ++i)
                uf[uidx(i, j, k)] =
                    0.5 * (u[cidx(i - 1, j, k)] + u[cidx(i, j, k)]);
        }
    for (int k = 0; k < np; ++k)
        for (int i = 0; i < nx; ++i) {
            vf[vidx(i, 0, k)] = 0.0;
            vf[vidx(i, ny, k)] = 0.0;
            for (int j = 1; j < ny; ++j)
                vf[vidx(i, j, k)] =
                    0.5 * (v[cidx(i, j - 1, k)] + v[cidx(i, j, k)]);
        }
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            wf[widx(i, j, 0)] = 0.0;
            wf[widx(i, j, np)] = 0.0;
            for (int k = 1; k < np; ++k)
                wf[widx(i, j, k)] =
                    0.5 * (omega[cidx(i, j, k - 1)] + omega[cidx(i, j, k)]);
        }
}

double VelocityField::max_abs_component() const {
    double m = 0.0;
    for (double x : u) m = std::max(m, std::abs(x));
    for (double x : v) m = std::max(m, std::abs(x));
    for (double x : omega) m = std::max(m, std::abs(x));
    return m;
}

VelocityField analytic_velocity(const AnalyticFlowSpec& spec,
                                const Grid& grid, double t) {
    if (spec.mode_x < 1 || spec.mode_y < 1 || spec.mode_p < 1)
        throw std::invalid_argument("analytic_velocity: mode counts must be >= 1");
    if (!std::isfinite(spec.amplitude))
        throw std::invalid_argument("analytic_velocity: amplitude must be finite");

    using std::numbers::pi;
    const double P = grid.p0 - grid.p1;
    const double a = spec.mode_x * pi / grid.Lx;
    const double b = spec.mode_y * pi / grid.Ly;
    const double c = spec.mode_p * pi / P;
    const double mod =
        spec.time_freq == 0.0 ? 1.0 : std::cos(2.0 * pi * spec.time_freq * t);
    const double A = spec.amplitude * mod;

    VelocityField f;
    f.resize(grid.nx, grid.ny, grid.np);
    f.t = t;

    auto s = [&](double p) { return std::sin(c * (p - grid.p1)) / c; };
    auto sp = [&](double p) { return std::cos(c * (p - grid.p1)); };

    // cell-center samples of the continuous family
    for (int k = 0; k < grid.np; ++k) {
        const double p = grid.p_centers[k];
        for (int j = 0; j < grid.ny; ++j) {
            const double y = (j + 0.5) * grid.dy;
            for (int i = 0; i < grid.nx; ++i) {
                const double x = (i + 0.5) * grid.dx;
                const std::size_t id = f.cidx(i, j, k);
                f.u[id] = A * std::sin(a * x) * std::cos(b * y) * sp(p);
                f.v[id] = A * std::cos(a * x) * std::sin(b * y) * sp(p);
                f.omega[id] =
                    -A * (a + b) * std::cos(a * x) * std::cos(b * y) * s(p);
            }
        }
    }

    // Face-normal components built so the discrete flux divergence
    // telescopes to zero exactly: the difference identities
    //   [sin(a x_{i+1/2}) - sin(a x_{i-1/2})]/dx = cos(a x_i) sigma_a
    // (and likewise in y and p) cancel by choosing the vertical
    // amplitude as -(sigma_a + sigma_b)/sigma_p.
    const double sig_a = 2.0 * std::sin(a * grid.dx / 2.0) / grid.dx;
    const double sig_b = 2.0 * std::sin(b * grid.dy / 2.0) / grid.dy;
    const double sig_p = 2.0 * std::sin(c * grid.dp / 2.0) / grid.dp;
    const double Aw = -A * (sig_a + sig_b) / sig_p;

    for (int k = 0; k < grid.np; ++k) {
        const double cth = std::cos(c * (grid.p_centers[k] - grid.p1));
        for (int j = 0; j < grid.ny; ++j) {
            const double cy = std::cos(b * (j + 0.5) * grid.dy);
            for (int i = 0; i <= grid.nx; ++i)
                f.uf[f.uidx(i, j, k)] =
                    A * std::sin(a * i * grid.dx) * cy * cth;
        }
        for (int j = 0; j <= grid.ny; ++j) {
            const double sy = std::sin(b * j * grid.dy);
            for (int i = 0; i < grid.nx; ++i)
                f.vf[f.vidx(i, j, k)] =
                    A * std::cos(a * (i + 0.5) * grid.dx) * sy * cth;
        }
    }
    for (int k = 0; k <= grid.np; ++k) {
        const double sth = std::sin(c * (grid.p_faces[k] - grid.p1));
        for (int j = 0; j < grid.ny; ++j) {
            const double cy = std::cos(b * (j + 0.5) * grid.dy);
            for (int i = 0; i < grid.nx; ++i)
                f.wf[f.widx(i, j, k)] =
                    Aw * std::cos(a * (i + 0.5) * grid.dx) * cy * sth;
        }
    }

    // sin(m pi) evaluates to ~1e-16, not 0; force the outflow faces to
    // exact zeros (the near faces already hit sin(0) exactly)
    for (int k = 0; k < grid.np; ++k) {
        for (int j = 0; j < grid.ny; ++j) f.uf[f.uidx(grid.nx, j, k)] = 0.0;
        for (int i = 0; i < grid.nx; ++i) f.vf[f.vidx(i, grid.ny, k)] = 0.0;
    }
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i) f.wf[f.widx(i, j, grid.np)] = 0.0;
    return f;
}

ValidationReport validate_velocity(const VelocityField& vel, const Grid& grid,
                                   double div_tol, double flux_tol) {
    ValidationReport rep;
    const int nx = vel.nx, ny = vel.ny, np = vel.np;
    const double vmax = std::max(vel.max_abs_component(), 1e-300);
    const double h2 = grid.dx * grid.dx + grid.dy * grid.dy + grid.dp * grid.dp;
    rep.div_tol = div_tol >= 0.0 ? div_tol : 10.0 * vmax * h2;
    rep.flux_tol = flux_tol >= 0.0 ? flux_tol : 10.0 * vmax * h2;

    // centered-difference divergence at cells with full neighborhoods
    double div_max = 0.0;
    for (int k = 1; k + 1 < np; ++k)
        for (int j = 1; j + 1 < ny; ++j)
            for (int i = 1; i + 1 < nx; ++i) {
                const double div =
                    (vel.u[vel.cidx(i + 1, j, k)] - vel.u[vel.cidx(i - 1, j, k)]) /
                        (2.0 * grid.dx) +
                    (vel.v[vel.cidx(i, j + 1, k)] - vel.v[vel.cidx(i, j - 1, k)]) /
                        (2.0 * grid.dy) +
                    (vel.omega[vel.cidx(i, j, k + 1)] -
                     vel.omega[vel.cidx(i, j, k - 1)]) /
                        (2.0 * grid.dp);
                div_max = std::max(div_max, std::abs(div));
            }
    rep.max_divergence = div_max;

    // second-order extrapolation of the normal component to each face
    auto extrap = [](double f1, double f2) { return 1.5 * f1 - 0.5 * f2; };
    double flux_max = 0.0;
    for (int k = 0; k < np; ++k)
        for (int j = 0; j < ny; ++j) {
            flux_max = std::max(flux_max, std::abs(extrap(
                vel.u[vel.cidx(0, j, k)], vel.u[vel.cidx(1, j, k)])));
            flux_max = std::max(flux_max, std::abs(extrap(
                vel.u[vel.cidx(nx - 1, j, k)], vel.u[vel.cidx(nx - 2, j, k)])));
        }
    for (int k = 0; k < np; ++k)
        for (int i = 0; i < nx; ++i) {
            flux_max = std::max(flux_max, std::abs(extrap(
                vel.v[vel.cidx(i, 0, k)], vel.v[vel.cidx(i, 1, k)])));
            flux_max = std::max(flux_max, std::abs(extrap(
                vel.v[vel.cidx(i, ny - 1, k)], vel.v[vel.cidx(i, ny - 2, k)])));
        }
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            flux_max = std::max(flux_max, std::abs(extrap(
                vel.omega[vel.cidx(i, j, 0)], vel.omega[vel.cidx(i, j, 1)])));
            flux_max = std::max(flux_max, std::abs(extrap(
                vel.omega[vel.cidx(i, j, np - 1)],
                vel.omega[vel.cidx(i, j, np - 2)])));
        }
    rep.max_boundary_flux = flux_max;

    rep.pass = rep.max_divergence <= rep.div_tol &&
               rep.max_boundary_flux <= rep.flux_tol;
    return rep;
}

VelocityField ZeroVelocity::at(double t, const Grid& grid) const {
    VelocityField f;
    f.resize(grid.nx, grid.ny, grid.np);
    f.t = t;
    return f;
}

AnalyticVelocity::AnalyticVelocity(AnalyticFlowSpec spec, const Grid& grid)
    : spec_(spec) {
    analytic_velocity(spec_, grid, 0.0);  // validates the spec
}

VelocityField AnalyticVelocity::at(double t, const Grid& grid) const {
    return analytic_velocity(spec_, grid, t);
}

VelocitySeries::VelocitySeries(std::vector<double> times,
                               std::vector<VelocityField> frames)
    : times_(std::move(times)), frames_(std::move(frames)) {
    if (times_.empty() || times_.size() != frames_.size())
        throw std::invalid_argument("VelocitySeries: need matching, nonempty times/frames");
    if (!std::is_sorted(times_.begin(), times_.end()))
        throw std::invalid_argument("VelocitySeries: frame times must be sorted");
}

VelocityField VelocitySeries::at(double t, const Grid& grid) const {
    (void)grid;
    if (frames_.size() == 1 || t <= times_.front()) {
        VelocityField f = frames_.front();
        f.t = t;
        return f;
    }
    if (t >= times_.back()) {
        VelocityField f = frames_.back();
        f.t = t;
        return f;
    }
    const auto it = std::upper_bound(times_.begin(), times_.end(), t);
    const std::size_t hi = it - times_.begin();
    const std::size_t lo = hi - 1;
    const double theta = (t - times_[lo]) / (times_[hi] - times_[lo]);

    VelocityField f = frames_[lo];
    f.t = t;
    auto lerp = [theta](std::vector<double>& a, const std::vector<double>& b) {
        for (std::size_t n = 0; n < a.size(); ++n)
            a[n] += theta * (b[n] - a[n]);
    };
    lerp(f.u, frames_[hi].u);
    lerp(f.v, frames_[hi].v);
    lerp(f.omega, frames_[hi].omega);
    lerp(f.uf, frames_[hi].uf);
    lerp(f.vf, frames_[hi].vf);
    lerp(f.wf, frames_[hi].wf);
    return f;
}

void save_velocity_series(const std::string& path, const Grid& grid,
                          const std::vector<double>& times,
                          const std::vector<VelocityField>& frames) {
    if (times.size() != frames.size() || times.empty())
        throw std::invalid_argument("save_velocity_series: times/frames mismatch");
    std::ofstream os(path, std::ios::binary);
    if (!os) binio::fail(path, "cannot open for writing");
    binio::write_magic(os, kVelocityMagic);
    binio::write_pod(os, std::uint32_t{1});
    binio::write_pod(os, std::int32_t{grid.nx});
    binio::write_pod(os, std::int32_t{grid.ny});
    binio::write_pod(os, std::int32_t{grid.np});
    binio::write_pod(os, static_cast<std::uint64_t>(times.size()));
    for (double t : times) binio::write_pod(os, t);
    const std::size_t n = static_cast<std::size_t>(grid.nx) * grid.ny * grid.np;
    for (const VelocityField& f : frames) {
        if (f.nx != grid.nx || f.ny != grid.ny || f.np != grid.np)
            binio::fail(path, "frame dimensions do not match grid");
        binio::write_array(os, f.u.data(), n);
        binio::write_array(os, f.v.data(), n);
        binio::write_array(os, f.omega.data(), n);
    }
    if (!os) binio::fail(path, "write failed");
}

std::unique_ptr<VelocitySeries> load_velocity_series(const std::string& path,
                                                     const Grid& grid,
                                                     double div_tol,
                                                     double flux_tol) {
    std::ifstream is(path, std::ios::binary);
    if (!is) binio::fail(path, "cannot open");
    binio::check_magic(is, kVelocityMagic, path);
    std::uint32_t version;
    binio::read_pod(is, version, path);
    if (version != 1) binio::fail(path, "unsupported version");
    std::int32_t nx, ny, np;
    binio::read_pod(is, nx, path);
    binio::read_pod(is, ny, path);
    binio::read_pod(is, np, path);
    if (nx != grid.nx || ny != grid.ny || np != grid.np) {
        std::ostringstream ss;
        ss << "grid mismatch: file is " << nx << "x" << ny << "x" << np
           << ", expected " << grid.nx << "x" << grid.ny << "x" << grid.np;
        binio::fail(path, ss.str());
    }
    std::uint64_t nframes;
    binio::read_pod(is, nframes, path);
    if (nframes == 0) binio::fail(path, "empty series");
    std::vector<double> times(nframes);
    for (auto& t : times) binio::read_pod(is, t, path);

    const std::size_t n = static_cast<std::size_t>(nx) * ny * np;
    std::vector<VelocityField> frames(nframes);
    for (std::uint64_t fi = 0; fi < nframes; ++fi) {
        VelocityField& f = frames[fi];
        f.resize(nx, ny, np);
        f.t = times[fi];
        binio::read_array(is, f.u.data(), n, path);
        binio::read_array(is, f.v.data(), n, path);
        binio::read_array(is, f.omega.data(), n, path);
        f.faces_from_centers();
        const ValidationReport rep =
            validate_velocity(f, grid, div_tol, flux_tol);
        if (!rep.pass) {
            std::ostringstream ss;
            ss << "frame " << fi << " at t=" << times[fi]
               << " failed validation: max divergence " << rep.max_divergence
               << " (tol " << rep.div_tol << "), max boundary flux "
               << rep.max_boundary_flux << " (tol " << rep.flux_tol << ")";
            binio::fail(path, ss.str());
        }
    }
    return std::make_unique<VelocitySeries>(std::move(times), std::move(frames));
}

}  // namespace cloudsim
