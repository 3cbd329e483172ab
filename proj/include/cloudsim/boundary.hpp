#pragma once

#include <functional>

#include "cloudsim/grid.hpp"

namespace cloudsim {

using BottomFn = std::function<double(double x, double y, double t)>;
using LateralFn = std::function<double(double p, double t)>;

/// Robin data for one prognostic field.
///
///   Γ0 (p = p0):  ∂_p f = alpha0 (b0 - f)
///   Γ1 (p = p1):  ∂_p f = 0 (fixed homogeneous Neumann)
///   Γ_l lateral:  ∂_n f = alphal (bl - f)
///
/// All functions must be nonnegative and bounded; `validate` samples them.
struct FieldBC {
    BottomFn alpha0 = [](double, double, double) { return 0.0; };
    BottomFn b0 = [](double, double, double) { return 0.0; };
    LateralFn alphal = [](double, double) { return 0.0; };
    LateralFn bl = [](double, double) { return 0.0; };
};

struct BoundarySpec {
    FieldBC T, qv, qc, qr;

    FieldBC& field(int idx) {
        switch (idx) {
            case 0: return T;
            case 1: return qv;
            case 2: return qc;
            default: return qr;
        }
    }
    const FieldBC& field(int idx) const {
        return const_cast<BoundarySpec*>(this)->field(idx);
    }

    /// Samples every coefficient and data function over the grid and
    /// [0, t_end]; throws on negative, non-finite, or unbounded values.
    void validate(const Grid& grid, double t_end) const;

    /// sup of the boundary data for field `idx` sampled over the grid
    /// and [0, t_end] (enters q_v* and the level-set threshold M).
    double data_sup(int idx, const Grid& grid, double t_end) const;
};

}  // namespace cloudsim
