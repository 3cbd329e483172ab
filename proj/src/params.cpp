#include "cloudsim/params.hpp"

#include <algorithm>
#include <stdexcept>

namespace cloudsim {

double PhysParams::kappa1() const { return std::max(R_d, R_v) / c_pd; }

void PhysParams::validate() const {
    auto req = [](bool ok, const char* msg) {
        if (!ok) throw std::invalid_argument(msg);
    };
    req(R_d > 0.0 && R_v > R_d, "PhysParams: require R_v > R_d > 0");
    req(c_pd > 0.0 && c_pv > 0.0 && c_l > c_pv,
        "PhysParams: require c_l > c_pv > 0 and c_pd > 0");
    req(L0 > 0.0, "PhysParams: require L0 > 0");
    req(T_low >= 0.0 && T0 > T_low, "PhysParams: require T0 > T_low >= 0");
    req(T_ramp > 0.0, "PhysParams: require T_ramp > 0");
    req(es0 > 0.0, "PhysParams: require es0 > 0");
    req(g > 0.0, "PhysParams: require g > 0");
    req(V >= 0.0, "PhysParams: require V >= 0");
    req(mu_T > 0.0 && nu_T > 0.0 && mu_qv > 0.0 && nu_qv > 0.0 &&
            mu_qc > 0.0 && nu_qc > 0.0 && mu_qr > 0.0 && nu_qr > 0.0,
        "PhysParams: all diffusivities must be positive");
    req(C_ev >= 0.0 && C_cd >= 0.0 && C_cn >= 0.0 && C_ac >= 0.0 && C_cr >= 0.0,
        "PhysParams: rate constants must be nonnegative");
    req(q_ac_star >= 0.0, "PhysParams: require q_ac* >= 0");
    req(q_vs_max > 0.0, "PhysParams: require q_vs_max > 0");
    req(p0_ref > 0.0, "PhysParams: require p0_ref > 0");
    const double e = E();
    req(e > 0.0 && e < 1.0, "PhysParams: require E = R_d/R_v in (0,1)");
}

double PhysParams::mu(int field) const {
    switch (field) {
        case 0: return mu_T;
        case 1: return mu_qv;
        case 2: return mu_qc;
        default: return mu_qr;
    }
}

double PhysParams::nu(int field) const {
    switch (field) {
        case 0: return nu_T;
        case 1: return nu_qv;
        case 2: return nu_qc;
        default: return nu_qr;
    }
}

}  // namespace cloudsim
