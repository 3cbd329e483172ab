#include "cloudsim/field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cloudsim {

// Reductions accumulate per p-slab and combine slabs in ascending k, so
// the result is independent of the OpenMP thread count.

std::pair<double, double> field_minmax(const ScalarField& f) {
    const int nx = f.nx(), ny = f.ny(), np = f.np();
    std::vector<double> mins(np, std::numeric_limits<double>::infinity());
    std::vector<double> maxs(np, -std::numeric_limits<double>::infinity());
    std::vector<char> has_nan(np, 0);
#pragma omp parallel for schedule(static)
    for (int k = 1; k <= np; ++k) {
        double lo = mins[k - 1], hi = maxs[k - 1];
        for (int j = 1; j <= ny; ++j)
            for (int i = 1; i <= nx; ++i) {
                const double v = f(i, j, k);
                if (std::isnan(v)) has_nan[k - 1] = 1;
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        mins[k - 1] = lo;
        maxs[k - 1] = hi;
    }
    for (int k = 0; k < np; ++k)
        if (has_nan[k]) throw std::runtime_error("field_minmax: NaN in interior");
    double lo = mins[0], hi = maxs[0];
    for (int k = 1; k < np; ++k) {
        lo = std::min(lo, mins[k]);
        hi = std::max(hi, maxs[k]);
    }
    return {lo, hi};
}

double field_sum_interior(const ScalarField& f) {
    const int nx = f.nx(), ny = f.ny(), np = f.np();
    std::vector<double> partial(np, 0.0);
#pragma omp parallel for schedule(static)
    for (int k = 1; k <= np; ++k) {
        double s = 0.0;
        for (int j = 1; j <= ny; ++j)
            for (int i = 1; i <= nx; ++i) s += f(i, j, k);
        partial[k - 1] = s;
    }
    double s = 0.0;
    for (int k = 0; k < np; ++k) s += partial[k];
    return s;
}

bool field_interior_finite(const ScalarField& f) {
    const int nx = f.nx(), ny = f.ny(), np = f.np();
    int bad = 0;
#pragma omp parallel for schedule(static) reduction(+ : bad)
    for (int k = 1; k <= np; ++k)
        for (int j = 1; j <= ny; ++j)
            for (int i = 1; i <= nx; ++i)
                if (!std::isfinite(f(i, j, k))) ++bad;
    return bad == 0;
}

}  // namespace cloudsim
