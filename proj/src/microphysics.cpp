#include "cloudsim/microphysics.hpp"

#include <algorithm>

#include "cloudsim/thermo.hpp"

namespace cloudsim {

SourceRates source_rates(double pres, double T, double qv, double qc,
                         double qr, const PhysParams& p) {
    const double qvs = saturation_mixing_ratio(pres, T, p);
    const MoistCoeffs mc = moist_coeffs(qv, qc, qr, T, p);
    const double Tp = std::max(T, 0.0);
    const double qvp = std::max(qv, 0.0);
    const double qcp = std::max(qc, 0.0);
    const double qrp = std::max(qr, 0.0);

    SourceRates s;
    s.S_ev = p.C_ev * mc.R_tilde * Tp * qrp * std::max(qvs - qv, 0.0);
    s.S_cr = p.C_cr * qcp * qrp;
    s.S_ac = p.C_ac * std::max(qc - p.q_ac_star, 0.0);
    s.S_cd = p.C_cd * (qvp - qvs) * qcp + p.C_cn * std::max(qv - qvs, 0.0);
    return s;
}

PhaseChangeTendencies phase_change_tendencies(double pres, double T,
                                              double qv, double qc,
                                              double qr,
                                              const PhysParams& p) {
    const SourceRates s = source_rates(pres, T, qv, qc, qr, p);
    const MoistCoeffs mc = moist_coeffs(qv, qc, qr, T, p);
    PhaseChangeTendencies d;
    d.dqv = s.S_ev - s.S_cd;
    d.dqc = s.S_cd - s.S_ac - s.S_cr;
    // dqr equals S_ac + S_cr - S_ev up to rounding; forming it as the
    // negated partial sum makes dqv + dqc + dqr telescope to exactly 0.
    d.dqr = -(d.dqv + d.dqc);
    d.dT = mc.L_tilde * (s.S_cd - s.S_ev);
    return d;
}

}  // namespace cloudsim
