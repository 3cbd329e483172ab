#pragma once

namespace cloudsim {

/// Physical constants and rate constants. Defaults are SI values for
/// moist air; nondimensional studies override them wholesale.
struct PhysParams {
    // gas constants [J kg^-1 K^-1]
    double R_d = 287.0;
    double R_v = 461.5;
    // heat capacities [J kg^-1 K^-1]
    double c_pd = 1005.0;
    double c_pv = 1850.0;
    double c_l = 4186.0;
    // latent heat anchor
    double L0 = 2.5e6;   // L(T0) [J kg^-1]
    double T0 = 273.15;  // reference temperature [K]
    double es0 = 611.0;  // e_s(T0) [Pa]
    double g = 9.81;     // [m s^-2]
    double V = 0.0;      // terminal rain velocity (pressure-coordinate sense)
    // microphysics rate constants (nondimensional by convention; C_ev
    // carries the dimension compensating the R~ T factor in S_ev)
    double C_ev = 1.0;
    double C_cd = 1.0;
    double C_cn = 1.0;
    double C_ac = 1.0;
    double C_cr = 1.0;
    double q_ac_star = 1e-3;  // autoconversion threshold
    // saturation-curve cutoffs
    double T_low = 150.0;  // lower cutoff [K]
    double T_ramp = 5.0;   // blend width at both cutoffs [K]
    double q_vs_max = 1.0;  // clamp guarding the e_s -> p pole
    // diffusivities per prognostic field
    double mu_T = 1.0, nu_T = 1.0;
    double mu_qv = 1.0, nu_qv = 1.0;
    double mu_qc = 1.0, nu_qc = 1.0;
    double mu_qr = 1.0, nu_qr = 1.0;
    double p0_ref = 1e5;  // reference pressure for potential temperature

    double E() const { return R_d / R_v; }

    /// Certified upper bound for kappa~ = R~/C~: R~ <= max(R_d,R_v) and
    /// C~ >= c_pd for nonnegative mixing ratios.
    double kappa1() const;

    /// Throws std::invalid_argument when any structural invariant
    /// (c_l > c_pv > 0, R_v > R_d > 0, L0 > 0, T0 > T_low >= 0,
    /// positive diffusivities, ...) fails.
    void validate() const;

    double mu(int field) const;  // field: 0=T 1=qv 2=qc 3=qr
    double nu(int field) const;
};

}  // namespace cloudsim
