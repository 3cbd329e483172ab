#include <doctest.h>

#include <cmath>

#include "cloudsim/thermo.hpp"
#include "ode_oracle.hpp"

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

}  // namespace

TEST_CASE("latent heat is affine with the expected root") {
    const PhysParams p;
    CHECK(latent_heat(p.T0, p) == p.L0);
    const double t_crit = critical_temperature(p);
    CHECK(t_crit == doctest::Approx(p.T0 + p.L0 / (p.c_l - p.c_pv)));
    CHECK(std::abs(latent_heat(t_crit, p)) < 1e-12 * p.L0);
    CHECK(t_crit == doctest::Approx(1343.355).epsilon(1e-4));
    // slope -(c_l - c_pv)
    CHECK(latent_heat(p.T0 + 1.0, p) - latent_heat(p.T0, p) ==
          doctest::Approx(-(p.c_l - p.c_pv)));
}

TEST_CASE("saturation curve anchor, cutoffs, and ramp") {
    const PhysParams p;
    const double t_crit = critical_temperature(p);
    CHECK(saturation_vapor_pressure(p.T0, p) == doctest::Approx(p.es0));
    CHECK(saturation_vapor_pressure(p.T_low, p) == 0.0);
    CHECK(saturation_vapor_pressure(p.T_low - 50.0, p) == 0.0);
    CHECK(saturation_vapor_pressure(t_crit, p) == 0.0);
    CHECK(saturation_vapor_pressure(t_crit + 10.0, p) == 0.0);
    // ramp midpoints
    CHECK(saturation_ramp(p.T_low + 0.5 * p.T_ramp, p) == doctest::Approx(0.5));
    CHECK(saturation_ramp(t_crit - 0.5 * p.T_ramp, p) == doctest::Approx(0.5));
    CHECK(saturation_ramp(0.5 * (p.T_low + t_crit), p) == 1.0);
    // monotone increasing on the physical band
    double prev = 0.0;
    for (double T = 200.0; T <= 320.0; T += 5.0) {
        const double es = saturation_vapor_pressure(T, p);
        CHECK(es > prev);
        prev = es;
    }
}

TEST_CASE("closed form agrees with the Clausius-Clapeyron quadrature") {
    for (const PhysParams& p : {PhysParams{}, nondim()}) {
        const double t_crit = critical_temperature(p);
        const double lo = p.T_low + p.T_ramp;
        const double hi = t_crit - p.T_ramp;
        for (int i = 0; i <= 24; ++i) {
            const double T = lo + (hi - lo) * i / 24.0;
            const double ours = saturation_vapor_pressure(T, p);
            const double ref = oracle::saturation_vapor_pressure(T, p);
            if (ref == 0.0)
                CHECK(ours == 0.0);
            else
                CHECK(std::abs(ours - ref) / ref < 1e-9);
        }
    }
}

TEST_CASE("saturation mixing ratio clamps at the pressure pole") {
    PhysParams p = nondim();
    // e_s grows toward T_crit; at low pressure the raw E e_s/(p - e_s)
    // blows up and must clamp
    const double t_mid = 0.5 * (p.T_low + critical_temperature(p));
    CHECK(saturation_mixing_ratio(1.5, t_mid, p) > 0.0);
    CHECK(saturation_mixing_ratio(1.5, t_mid, p) <= p.q_vs_max);
    p.q_vs_max = 0.01;
    CHECK(saturation_mixing_ratio(1.5, t_mid, p) <= 0.01);
    CHECK(saturation_mixing_ratio(1.5, 0.01, p) == 0.0);  // below T_low
    CHECK_THROWS(saturation_mixing_ratio(-1.0, t_mid, p));
}

TEST_CASE("moist coefficients: truncation and certified bounds") {
    const PhysParams p;
    const double k1 = p.kappa1();
    // negative inputs truncate to the dry values
    const MoistCoeffs dry = moist_coeffs(-0.1, -0.2, -0.3, 250.0, p);
    CHECK(dry.R_tilde == doctest::Approx(p.R_d));
    CHECK(dry.C_tilde == doctest::Approx(p.c_pd));
    unsigned rng = 7;
    auto next = [&rng]() {
        rng = rng * 1664525u + 1013904223u;
        return rng / 4294967296.0;
    };
    for (int n = 0; n < 2000; ++n) {
        const double qv = next() * 0.1 - 0.02;
        const double qc = next() * 0.1 - 0.02;
        const double qr = next() * 0.1 - 0.02;
        const double T = 150.0 + 200.0 * next();
        const MoistCoeffs mc = moist_coeffs(qv, qc, qr, T, p);
        CHECK(mc.kappa_tilde > 0.0);
        CHECK(mc.kappa_tilde <= k1 + 1e-15);
        CHECK(mc.inv_C <= 1.0 / p.c_pd + 1e-18);
        CHECK(mc.C_tilde >= p.c_pd);
        CHECK(mc.R_tilde >= 0.0);
    }
}

TEST_CASE("diagnostic theta and rho") {
    const PhysParams p;
    CHECK(potential_temperature(300.0, p.p0_ref, p) == doctest::Approx(300.0));
    CHECK(potential_temperature(300.0, p.p0_ref / 2, p) > 300.0);
    const double rho = density(1e5, 300.0, 0.0, 0.0, 0.0, p);
    CHECK(rho == doctest::Approx(1e5 / (p.R_d * 300.0)));
    CHECK_THROWS(density(1e5, -1.0, 0, 0, 0, p));
}

TEST_CASE("max saturation mixing ratio bounds the pointwise values") {
    const PhysParams p = nondim();
    const double star = max_saturation_mixing_ratio(1.0, 2.0, p);
    const double t_crit = critical_temperature(p);
    for (int ip = 0; ip <= 10; ++ip)
        for (int it = 0; it <= 100; ++it) {
            const double pr = 1.0 + ip / 10.0;
            const double T = t_crit * it / 100.0;
            CHECK(saturation_mixing_ratio(pr, T, p) <= star + 1e-12);
        }
}
