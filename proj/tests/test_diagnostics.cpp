#include <doctest.h>

#include <cmath>

#include "cloudsim/diagnostics.hpp"
#include "cloudsim/state.hpp"

using namespace cloudsim;

namespace {

PhysParams nondim() {
    PhysParams p;
    p.R_d = 1.0;
    p.R_v = 1.6;
    p.c_pd = 1.0;
    p.c_pv = 1.8;
    p.c_l = 4.0;
    p.L0 = 2.5;
    p.T0 = 1.0;
    p.es0 = 0.3;
    p.g = 1.0;
    p.T_low = 0.05;
    p.T_ramp = 0.05;
    p.p0_ref = 1.0;
    return p;
}

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

}  // namespace

TEST_CASE("norms of simple fields") {
    const Grid g = unit_grid(8);
    const PhysParams p = nondim();
    MoistState s(g);
    s.T.fill(3.0);
    s.qv.fill(0.0);

    const NormRecord rec = record_norms(s, g, p);
    // domain volume is 1, so the L2 norm of a constant is the constant
    CHECK(rec.f[0].l2 == doctest::Approx(3.0));
    CHECK(rec.f[0].linf == 3.0);
    CHECK(rec.f[0].min == 3.0);
    CHECK(rec.f[0].grad_h == 0.0);
    CHECK(rec.f[0].grad_p_w == 0.0);
    CHECK(rec.f[0].h1w == doctest::Approx(3.0));
    CHECK(rec.f[1].l2 == 0.0);

    // linear-in-x field: |grad_h| = slope everywhere
    for (int k = 1; k <= g.np; ++k)
        for (int j = 1; j <= g.ny; ++j)
            for (int i = 1; i <= g.nx; ++i)
                s.qc(i, j, k) = 2.0 * g.x_center(i);
    const NormRecord rec2 = record_norms(s, g, p);
    CHECK(rec2.f[2].grad_h == doctest::Approx(2.0));
}

TEST_CASE("bound checker flags seeded violations") {
    const Grid g = unit_grid(6);
    const PhysParams p = nondim();
    MoistState s(g);
    s.T.fill(1.0);
    s.qv.fill(0.01);
    s.qc.fill(0.0);
    s.qr.fill(0.0);
    s.t = 0.5;

    CHECK(check_bounds(s, g, p, 0.1).empty());

    s.qc(2, 3, 4) = -1e-9;
    s.qv(5, 5, 5) = 0.2;  // above qv* = 0.1
    const auto v = check_bounds(s, g, p, 0.1);
    REQUIRE(v.size() == 2);
    CHECK(v[0].t == 0.5);
    bool saw_neg = false, saw_qv = false;
    for (const auto& w : v) {
        if (w.field == 2 && w.i == 2 && w.j == 3 && w.k == 4) saw_neg = true;
        if (w.field == 1 && w.value == 0.2 && w.bound == 0.1) saw_qv = true;
    }
    CHECK(saw_neg);
    CHECK(saw_qv);

    // slack tolerances absorb rounding-level undershoot
    s.qc(2, 3, 4) = -1e-13;
    s.qv(5, 5, 5) = 0.1 + 1e-11;
    CHECK(check_bounds(s, g, p, 0.1).empty());
}

TEST_CASE("level-set thresholds and trivial decay") {
    LevelSetSeries ls(8.0, 8);
    CHECK(ls.lambda[0] == doctest::Approx(4.0));
    CHECK(ls.lambda[1] == doctest::Approx(6.0));
    CHECK(ls.lambda[7] == doctest::Approx(8.0 * (1.0 - 1.0 / 256.0)));

    const Grid g = unit_grid(6);
    const PhysParams p = nondim();
    MoistState s(g);
    s.T.fill(1.0);  // below every threshold
    update_level_sets(ls, s, g, p, 0.1);
    for (int k = 0; k < 8; ++k) CHECK(ls.J[k] == 0.0);
}

TEST_CASE("level-set energies match the closed form for a constant exceedance") {
    const Grid g = unit_grid(6);
    const PhysParams p = nondim();
    const double M = 2.0;
    LevelSetSeries ls(M, 8);
    MoistState s(g);
    s.T.fill(1.9);  // exceeds lambda_1 = 1, lambda_2 = 1.5, ..., not lambda_5
    update_level_sets(ls, s, g, p, 0.0);
    for (int k = 1; k <= 8; ++k) {
        const double lam = M * (1.0 - std::pow(2.0, -k));
        const double expect =
            s.T(1, 1, 1) > lam ? std::pow(1.9 - lam, 2) : 0.0;  // volume 1
        CHECK(ls.J[k - 1] == doctest::Approx(expect).epsilon(1e-12));
    }
    // monotone nonincreasing in k
    for (int k = 1; k < 8; ++k) CHECK(ls.J[k] <= ls.J[k - 1] + 1e-15);

    // the gradient of a constant truncation is zero, so the time
    // integral stays zero even with dt > 0
    update_level_sets(ls, s, g, p, 0.5);
    CHECK(ls.integral[0] == 0.0);
}
