#include <doctest.h>

#include <cmath>
#include <random>

#include "cloudsim/microphysics.hpp"
#include "cloudsim/thermo.hpp"

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

TEST_CASE("moisture exchange is exactly mass neutral") {
    const PhysParams p = nondim();
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> uq(0.0, 0.2);
    std::uniform_real_distribution<double> ut(0.0, 2.5);
    std::uniform_real_distribution<double> up(1.0, 2.0);
    for (int n = 0; n < 20000; ++n) {
        const PhaseChangeTendencies d = phase_change_tendencies(
            up(rng), ut(rng), uq(rng), uq(rng), uq(rng), p);
        CHECK(d.dqv + d.dqc + d.dqr == 0.0);  // exact, by construction
    }
}

TEST_CASE("evaporation sign structure") {
    const PhysParams p = nondim();
    const double t_crit = critical_temperature(p);
    // subsaturated warm air with rain: evaporation active
    SourceRates s = source_rates(1.5, 1.0, 0.0, 0.0, 0.01, p);
    CHECK(s.S_ev > 0.0);
    // no rain, no evaporation
    s = source_rates(1.5, 1.0, 0.0, 0.0, 0.0, p);
    CHECK(s.S_ev == 0.0);
    // supersaturated: no evaporation
    s = source_rates(1.5, 1.0, 0.5, 0.0, 0.01, p);
    CHECK(s.S_ev == 0.0);
    // at and above T_crit the saturation curve is off
    for (double T : {t_crit, t_crit + 0.5, t_crit + 5.0}) {
        s = source_rates(1.5, T, 0.01, 0.0, 0.05, p);
        CHECK(s.S_ev == 0.0);
    }
    // negative T truncates
    s = source_rates(1.5, -0.5, 0.0, 0.0, 0.01, p);
    CHECK(s.S_ev == 0.0);
}

TEST_CASE("condensation and conversion terms") {
    PhysParams p = nondim();
    const double pres = 1.5, T = 1.0;
    const double qvs = saturation_mixing_ratio(pres, T, p);
    CHECK(qvs > 0.0);
    // supersaturation condenses even without cloud water
    SourceRates s = source_rates(pres, T, qvs + 0.1, 0.0, 0.0, p);
    CHECK(s.S_cd == doctest::Approx(p.C_cn * 0.1));
    // subsaturation with cloud water evaporates cloud
    s = source_rates(pres, T, 0.0, 0.05, 0.0, p);
    CHECK(s.S_cd < 0.0);
    // autoconversion switches on above the threshold only
    s = source_rates(pres, T, 0.0, p.q_ac_star * 0.5, 0.0, p);
    CHECK(s.S_ac == 0.0);
    s = source_rates(pres, T, 0.0, p.q_ac_star + 0.02, 0.0, p);
    CHECK(s.S_ac == doctest::Approx(p.C_ac * 0.02));
    // collection needs both cloud and rain
    CHECK(source_rates(pres, T, 0.0, 0.01, 0.0, p).S_cr == 0.0);
    CHECK(source_rates(pres, T, 0.0, 0.01, 0.01, p).S_cr ==
          doctest::Approx(p.C_cr * 1e-4));
}

TEST_CASE("latent heating couples to the net condensation") {
    const PhysParams p = nondim();
    const double pres = 1.5, T = 1.0;
    const double qvs = saturation_mixing_ratio(pres, T, p);
    const double qv = qvs + 0.05, qc = 0.01, qr = 0.0;
    const SourceRates s = source_rates(pres, T, qv, qc, qr, p);
    const MoistCoeffs mc = moist_coeffs(qv, qc, qr, T, p);
    const PhaseChangeTendencies d = phase_change_tendencies(pres, T, qv, qc, qr, p);
    CHECK(d.dT == doctest::Approx(mc.L_tilde * (s.S_cd - s.S_ev)));
    CHECK(d.dT > 0.0);  // condensation heats below T_crit
    CHECK(d.dqv == doctest::Approx(s.S_ev - s.S_cd));
}

TEST_CASE("quasi-positivity at the axes") {
    const PhysParams p = nondim();
    // each species' tendency is nonnegative when that species is zero
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uq(0.0, 0.2);
    std::uniform_real_distribution<double> ut(0.0, 2.0);
    for (int n = 0; n < 5000; ++n) {
        const double pres = 1.0 + uq(rng) * 5.0;
        const double T = ut(rng), a = uq(rng), b = uq(rng);
        CHECK(phase_change_tendencies(pres, T, 0.0, a, b, p).dqv >= 0.0);
        CHECK(phase_change_tendencies(pres, T, a, 0.0, b, p).dqc >= 0.0);
        // dqr is the negated partial sum, so allow rounding slack here
        CHECK(phase_change_tendencies(pres, T, a, b, 0.0, p).dqr >= -1e-16);
        // T = 0 sits below T_low, so q_vs = 0 and the heating is >= 0
        CHECK(phase_change_tendencies(pres, 0.0, a, b, uq(rng), p).dT >= 0.0);
    }
}
