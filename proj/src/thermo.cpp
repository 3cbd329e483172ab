#include "cloudsim/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cloudsim {

double latent_heat(double T, const PhysParams& p) {
    return p.L0 - (p.c_l - p.c_pv) * (T - p.T0);
}

double critical_temperature(const PhysParams& p) {
    if (!(p.c_l > p.c_pv))
        throw std::invalid_argument("critical_temperature: requires c_l > c_pv");
    return p.T0 + p.L0 / (p.c_l - p.c_pv);
}

double saturation_ramp(double T, const PhysParams& p) {
    const double t_crit = critical_temperature(p);
    if (T <= p.T_low || T >= t_crit) return 0.0;
    double r = 1.0;
    if (T < p.T_low + p.T_ramp) r = (T - p.T_low) / p.T_ramp;
    if (T > t_crit - p.T_ramp) r = std::min(r, (t_crit - T) / p.T_ramp);
    return r;
}

double saturation_vapor_pressure(double T, const PhysParams& p) {
    const double ramp = saturation_ramp(T, p);
    if (ramp == 0.0) return 0.0;
    // closed-form solution of d ln e_s/dT = L(T)/(R_v T^2), anchored at
    // e_s(T0) = es0:
    //   e_s(T) = es0 (T0/T)^gamma exp(A (1/T0 - 1/T)),
    //   gamma = (c_l - c_pv)/R_v, A = (L0 + (c_l - c_pv) T0)/R_v
    const double dc = p.c_l - p.c_pv;
    const double gamma = dc / p.R_v;
    const double A = (p.L0 + dc * p.T0) / p.R_v;
    const double es =
        p.es0 * std::pow(p.T0 / T, gamma) * std::exp(A * (1.0 / p.T0 - 1.0 / T));
    return ramp * es;
}

double saturation_mixing_ratio(double pres, double T, const PhysParams& p) {
    if (!(pres > 0.0))
        throw std::invalid_argument("saturation_mixing_ratio: requires p > 0");
    const double es = saturation_vapor_pressure(T, p);
    if (es == 0.0) return 0.0;
    if (es >= pres) return p.q_vs_max;
    const double qvs = p.E() * es / (pres - es);
    return std::min(qvs, p.q_vs_max);
}

MoistCoeffs moist_coeffs(double qv, double qc, double qr, double T,
                         const PhysParams& p) {
    const double qvp = std::max(qv, 0.0);
    const double qcp = std::max(qc, 0.0);
    const double qrp = std::max(qr, 0.0);
    MoistCoeffs c;
    c.R_tilde = (p.R_d + p.R_v * qvp) / (1.0 + qvp + qcp + qrp);
    c.C_tilde = p.c_pd + p.c_pv * qvp + p.c_l * (qcp + qrp);
    c.kappa_tilde = c.R_tilde / c.C_tilde;
    c.inv_C = 1.0 / c.C_tilde;
    c.L_tilde = latent_heat(T, p) * c.inv_C;
    return c;
}

double potential_temperature(double T, double pres, const PhysParams& p) {
    if (!(pres > 0.0))
        throw std::invalid_argument("potential_temperature: requires p > 0");
    return T * std::pow(p.p0_ref / pres, p.R_d / p.c_pd);
}

double density(double pres, double T, double qv, double qc, double qr,
               const PhysParams& p) {
    if (!(T > 0.0)) throw std::invalid_argument("density: requires T > 0");
    return pres / (moist_coeffs(qv, qc, qr, T, p).R_tilde * T);
}

double max_saturation_mixing_ratio(double p_lo, double p_hi,
                                   const PhysParams& p, int samples) {
    const double t_crit = critical_temperature(p);
    double best = 0.0;
    // q_vs increases as p decreases, so scan T at the low-pressure edge
    // plus a coarse p sweep as a guard for the clamp region.
    for (int ip = 0; ip <= 8; ++ip) {
        const double pr = p_lo + (p_hi - p_lo) * ip / 8.0;
        for (int it = 0; it <= samples; ++it) {
            const double T = t_crit * it / samples;
            best = std::max(best, saturation_mixing_ratio(pr, T, p));
        }
    }
    return best;
}

}  // namespace cloudsim
