#pragma once

#include "cloudsim/params.hpp"

namespace cloudsim {

/// Kessler-type phase-change rates. S_ev, S_ac, S_cr are nonnegative by
/// construction; S_cd carries the sign of the saturation deficit.
struct SourceRates {
    double S_ev;  // evaporation of rain
    double S_cd;  // condensation (negative: cloud evaporation)
    double S_ac;  // autoconversion of cloud to rain
    double S_cr;  // collection of cloud by rain
};

/// Truncated source terms with evaporation exponent fixed at beta = 1:
///   S_ev = C_ev R~+ T+ qr+ (q_vs - qv)+
///   S_cr = C_cr qc+ qr+
///   S_ac = C_ac (qc - q_ac*)+
///   S_cd = C_cd (qv+ - q_vs) qc+ + C_cn (qv - q_vs)+
SourceRates source_rates(double pres, double T, double qv, double qc,
                         double qr, const PhysParams& p);

struct PhaseChangeTendencies {
    double dT, dqv, dqc, dqr;
};

/// Combined phase-change contributions:
///   dqv = S_ev - S_cd, dqc = S_cd - S_ac - S_cr,
///   dqr = S_ac + S_cr - S_ev, dT = L~+ (S_cd - S_ev).
/// dqv + dqc + dqr telescopes to zero exactly.
PhaseChangeTendencies phase_change_tendencies(double pres, double T,
                                              double qv, double qc,
                                              double qr,
                                              const PhysParams& p);

}  // namespace cloudsim
