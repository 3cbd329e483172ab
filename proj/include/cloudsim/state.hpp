#pragma once

#include "cloudsim/field.hpp"
#include "cloudsim/grid.hpp"

namespace cloudsim {

/// The prognostic tuple (T, q_v, q_c, q_r) at one time level.
struct MoistState {
    ScalarField T, qv, qc, qr;
    double t = 0.0;

    MoistState() = default;
    explicit MoistState(const Grid& g)
        : T(g.nx, g.ny, g.np), qv(g.nx, g.ny, g.np),
          qc(g.nx, g.ny, g.np), qr(g.nx, g.ny, g.np) {}

    ScalarField& field(int idx) {
        switch (idx) {
            case 0: return T;
            case 1: return qv;
            case 2: return qc;
            default: return qr;
        }
    }
    const ScalarField& field(int idx) const {
        return const_cast<MoistState*>(this)->field(idx);
    }

    static const char* field_name(int idx) {
        static const char* names[4] = {"T", "qv", "qc", "qr"};
        return names[idx];
    }
};

}  // namespace cloudsim
