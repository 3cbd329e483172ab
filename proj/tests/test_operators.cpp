#include <doctest.h>

#include <cmath>
#include <random>

#include "cloudsim/operators.hpp"
#include "cloudsim/velocity.hpp"

using namespace cloudsim;

namespace {

Grid unit_grid(int n) {
    GridConfig gc;
    gc.nx = gc.ny = gc.np = n;
    gc.Lx = gc.Ly = 1.0;
    gc.p1 = 1.0;
    gc.p0 = 2.0;
    gc.g = 1.0;
    gc.R_d = 1.0;
    gc.tbar = [](double) { return 1.0; };
    return build_grid(gc);
}

ScalarField random_field(const Grid& g, unsigned seed, double lo = 0.0,
                         double hi = 1.0) {
    ScalarField f(g.nx, g.ny, g.np);
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(lo, hi);
    for (int k = 0; k <= g.np + 1; ++k)
        for (int j = 0; j <= g.ny + 1; ++j)
            for (int i = 0; i <= g.nx + 1; ++i) f(i, j, k) = u(rng);
    return f;
}

double interior_sum(const ScalarField& f, const Grid& g) {
    double s = 0;
    for (int k = 1; k <= g.np; ++k)
        for (int j = 1; j <= g.ny; ++j)
            for (int i = 1; i <= g.nx; ++i) s += f(i, j, k);
    return s;
}

bool bitwise_equal_interior(const ScalarField& a, const ScalarField& b,
                            const Grid& g) {
    for (int k = 1; k <= g.np; ++k)
        for (int j = 1; j <= g.ny; ++j)
            for (int i = 1; i <= g.nx; ++i)
                if (a(i, j, k) != b(i, j, k)) return false;
    return true;
}

}  // namespace

TEST_CASE("Robin ghost layers") {
    const Grid g = unit_grid(8);
    ScalarField f = random_field(g, 11);
    FieldBC bc;  // all-zero alpha: Neumann everywhere

    SUBCASE("alpha = 0 mirrors the interior") {
        apply_boundary_ghosts(f, bc, g, 0.0, Exec::Serial);
        CHECK(f(0, 3, 4) == f(1, 3, 4));
        CHECK(f(g.nx + 1, 3, 4) == f(g.nx, 3, 4));
        CHECK(f(3, 0, 4) == f(3, 1, 4));
        CHECK(f(3, g.ny + 1, 4) == f(3, g.ny, 4));
        CHECK(f(3, 4, 0) == f(3, 4, 1));
        CHECK(f(3, 4, g.np + 1) == f(3, 4, g.np));
    }

    SUBCASE("Robin closure satisfies the discrete flux relation") {
        bc.alpha0 = [](double, double, double) { return 0.7; };
        bc.b0 = [](double, double, double) { return 2.0; };
        bc.alphal = [](double, double) { return 0.3; };
        bc.bl = [](double, double) { return 1.0; };
        apply_boundary_ghosts(f, bc, g, 0.0, Exec::Serial);
        {
            // (f_g - f_i)/dp = alpha (b - (f_g + f_i)/2) at Γ0
            const double fi = f(4, 4, g.np), fg = f(4, 4, g.np + 1);
            CHECK((fg - fi) / g.dp ==
                  doctest::Approx(0.7 * (2.0 - 0.5 * (fg + fi))));
            // Γ1 stays homogeneous Neumann
            CHECK(f(4, 4, 0) == f(4, 4, 1));
        }
        {
            const double fi = f(1, 4, 4), fg = f(0, 4, 4);
            CHECK((fg - fi) / g.dx ==
                  doctest::Approx(0.3 * (1.0 - 0.5 * (fg + fi))));
        }
    }
}

TEST_CASE("advection: constant preservation and conservation") {
    const Grid g = unit_grid(10);
    AnalyticFlowSpec spec;
    spec.amplitude = 1.7;
    const VelocityField vel = analytic_velocity(spec, g, 0.2);
    ScalarField out(g.nx, g.ny, g.np);

    SUBCASE("constants are preserved to machine precision") {
        ScalarField f(g.nx, g.ny, g.np);
        f.fill(3.25);
        advect(f, vel, g, out, Exec::Serial);
        for (int k = 1; k <= g.np; ++k)
            for (int j = 1; j <= g.ny; ++j)
                for (int i = 1; i <= g.nx; ++i)
                    CHECK(std::abs(out(i, j, k)) < 1e-13);
    }

    SUBCASE("total tracer is conserved to machine precision") {
        ScalarField f = random_field(g, 5);
        FieldBC bc;
        apply_boundary_ghosts(f, bc, g, 0.0, Exec::Serial);
        advect(f, vel, g, out, Exec::Serial);
        CHECK(std::abs(interior_sum(out, g) * g.cell_volume()) < 1e-13);
    }

    SUBCASE("upwind picks the upstream value") {
        // uniform interior u > 0 moves information from the left
        VelocityField v;
        v.resize(g.nx, g.ny, g.np);
        for (double& x : v.u) x = 1.0;
        v.faces_from_centers();
        ScalarField f(g.nx, g.ny, g.np);
        for (int k = 0; k <= g.np + 1; ++k)
            for (int j = 0; j <= g.ny + 1; ++j)
                for (int i = 0; i <= g.nx + 1; ++i)
                    f(i, j, k) = i <= 5 ? 1.0 : 0.0;
        advect(f, v, g, out, Exec::Serial);
        // the step at i = 5/6 moves right: cell 6 gains, cell 5 keeps
        CHECK(out(6, 3, 3) > 0.0);
        CHECK(out(4, 3, 3) == 0.0);
    }
}

TEST_CASE("horizontal laplacian stencil") {
    const Grid g = unit_grid(8);
    ScalarField f(g.nx, g.ny, g.np);
    // f = x^2 -> mu lap = 2 mu, exactly for the 3-point stencil
    for (int k = 0; k <= g.np + 1; ++k)
        for (int j = 0; j <= g.ny + 1; ++j)
            for (int i = 0; i <= g.nx + 1; ++i) {
                const double x = (i - 0.5) * g.dx;
                f(i, j, k) = x * x;
            }
    ScalarField out(g.nx, g.ny, g.np);
    horizontal_laplacian(f, g, 0.5, out, Exec::Serial);
    for (int k = 1; k <= g.np; ++k)
        for (int j = 1; j <= g.ny; ++j)
            for (int i = 1; i <= g.nx; ++i)
                CHECK(out(i, j, k) == doctest::Approx(1.0));
}

TEST_CASE("weighted vertical diffusion") {
    const Grid g = unit_grid(8);

    SUBCASE("annihilates constants with mirrored ghosts") {
        ScalarField f(g.nx, g.ny, g.np);
        f.fill(2.0);
        FieldBC bc;
        apply_boundary_ghosts(f, bc, g, 0.0, Exec::Serial);
        ScalarField out(g.nx, g.ny, g.np);
        weighted_vertical_diffusion(f, g, 1.0, out, Exec::Serial);
        for (int k = 1; k <= g.np; ++k) CHECK(out(4, 4, k) == 0.0);
    }

    SUBCASE("flux form conserves mass under Neumann closures") {
        ScalarField f = random_field(g, 9);
        FieldBC bc;
        apply_boundary_ghosts(f, bc, g, 0.0, Exec::Serial);
        ScalarField out(g.nx, g.ny, g.np);
        weighted_vertical_diffusion(f, g, 1.0, out, Exec::Serial);
        double col = 0.0;
        for (int k = 1; k <= g.np; ++k) col += out(4, 4, k);
        CHECK(std::abs(col) < 1e-12);
    }

    SUBCASE("matches nu d/dp(w^2 df/dp) for a quadratic in p with w = p") {
        // f = p^2, w = p: flux w^2 f' = 2 p^3, divergence 6 p^2. The
        // discrete face weights are exact only up to O(dp^2), so compare
        // with a loose tolerance at an interior cell.
        ScalarField f(g.nx, g.ny, g.np);
        for (int k = 0; k <= g.np + 1; ++k) {
            const double p = g.p1 + (k - 0.5) * g.dp;
            for (int j = 0; j <= g.ny + 1; ++j)
                for (int i = 0; i <= g.nx + 1; ++i) f(i, j, k) = p * p;
        }
        ScalarField out(g.nx, g.ny, g.np);
        weighted_vertical_diffusion(f, g, 1.0, out, Exec::Serial);
        const double p = g.p_center(4);
        CHECK(out(4, 4, 4) == doctest::Approx(6.0 * p * p).epsilon(0.01));
    }
}

TEST_CASE("sedimentation transports toward the bottom only") {
    const Grid g = unit_grid(8);
    const double V = 0.4;
    ScalarField qr = random_field(g, 13);
    ScalarField out(g.nx, g.ny, g.np);
    sedimentation(qr, g, V, 1.0, out, Exec::Serial);

    // column total changes only by the outflow through Γ0
    for (int j = 1; j <= g.ny; ++j)
        for (int i = 1; i <= g.nx; ++i) {
            double col = 0.0;
            for (int k = 1; k <= g.np; ++k) col += out(i, j, k) * g.dp;
            const double outflow =
                V * g.p_faces[g.np] / (1.0 * g.tbar_face[g.np]) * qr(i, j, g.np);
            CHECK(col == doctest::Approx(-outflow).epsilon(1e-12));
        }
    // zero inflow at the top: the k = 1 tendency only drains
    ScalarField zero_top(g.nx, g.ny, g.np);
    zero_top.fill(0.0);
    zero_top(4, 4, 1) = 1.0;
    sedimentation(zero_top, g, V, 1.0, out, Exec::Serial);
    CHECK(out(4, 4, 1) < 0.0);
    CHECK_THROWS(sedimentation(qr, g, -1.0, 1.0, out, Exec::Serial));
}

TEST_CASE("serial and OpenMP kernels agree bitwise") {
    const Grid g = unit_grid(12);
    const VelocityField vel = analytic_velocity({}, g, 0.1);
    ScalarField f = random_field(g, 21);
    FieldBC bc;
    bc.alpha0 = [](double x, double y, double) { return 0.2 + 0.1 * x * y; };
    bc.b0 = [](double x, double, double) { return 1.0 + x; };
    bc.alphal = [](double p, double) { return 0.1 * p; };
    bc.bl = [](double p, double) { return p; };

    ScalarField f2 = f;
    apply_boundary_ghosts(f, bc, g, 0.3, Exec::Serial);
    apply_boundary_ghosts(f2, bc, g, 0.3, Exec::OpenMP);
    CHECK(f.size() == f2.size());
    for (std::size_t n = 0; n < f.size(); ++n) CHECK(f.data()[n] == f2.data()[n]);

    ScalarField a(g.nx, g.ny, g.np), b(g.nx, g.ny, g.np);
    advect(f, vel, g, a, Exec::Serial);
    advect(f, vel, g, b, Exec::OpenMP);
    CHECK(bitwise_equal_interior(a, b, g));
    horizontal_laplacian(f, g, 0.7, a, Exec::Serial);
    horizontal_laplacian(f, g, 0.7, b, Exec::OpenMP);
    CHECK(bitwise_equal_interior(a, b, g));
    weighted_vertical_diffusion(f, g, 0.7, a, Exec::Serial);
    weighted_vertical_diffusion(f, g, 0.7, b, Exec::OpenMP);
    CHECK(bitwise_equal_interior(a, b, g));
    sedimentation(f, g, 0.4, 1.0, a, Exec::Serial);
    sedimentation(f, g, 0.4, 1.0, b, Exec::OpenMP);
    CHECK(bitwise_equal_interior(a, b, g));
}
