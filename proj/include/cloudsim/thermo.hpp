#pragma once

#include "cloudsim/params.hpp"

namespace cloudsim {

/// Moisture-dependent thermodynamic coefficients. Inputs to
/// `moist_coeffs` are truncated at zero internally, so the bounds
/// 0 < kappa_tilde <= kappa1 and 0 < inv_C <= 1/c_pd always hold.
struct MoistCoeffs {
    double R_tilde;      // moist gas "constant"
    double C_tilde;      // moist heat capacity
    double kappa_tilde;  // R~/C~
    double L_tilde;      // L(T)/C~
    double inv_C;        // 1/C~
};

/// L(T) = L0 - (c_l - c_pv)(T - T0); affine, strictly decreasing.
double latent_heat(double T, const PhysParams& p);

/// Unique root of latent_heat: T0 + L0/(c_l - c_pv).
double critical_temperature(const PhysParams& p);

/// Saturation vapor pressure. Closed-form Clausius-Clapeyron solution
/// anchored at e_s(T0) = es0, ramped linearly to zero over
/// [T_low, T_low + T_ramp] and [T_crit - T_ramp, T_crit], identically
/// zero outside (T_low, T_crit).
double saturation_vapor_pressure(double T, const PhysParams& p);

/// The two-sided cutoff ramp factor in [0,1] multiplying the closed form.
double saturation_ramp(double T, const PhysParams& p);

/// q_vs = E e_s/(p - e_s), zero where e_s = 0, clamped at q_vs_max.
double saturation_mixing_ratio(double pres, double T, const PhysParams& p);

/// R~, C~, kappa~, L~ of the truncated system.
MoistCoeffs moist_coeffs(double qv, double qc, double qr, double T,
                         const PhysParams& p);

/// theta = T (p0_ref/p)^(R_d/c_pd); diagnostic only.
double potential_temperature(double T, double pres, const PhysParams& p);

/// rho = p/(R~ T); diagnostic only.
double density(double pres, double T, double qv, double qc, double qr,
               const PhysParams& p);

/// max of q_vs over p in [p_lo, p_hi] x T in [0, T_crit], by dense
/// sampling. Enters the q_v* maximum-principle bound.
double max_saturation_mixing_ratio(double p_lo, double p_hi,
                                   const PhysParams& p, int samples = 512);

}  // namespace cloudsim
