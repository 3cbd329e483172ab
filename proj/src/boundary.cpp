#include "cloudsim/boundary.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cloudsim {

namespace {

void check_value(double v, const char* what) {
    if (!std::isfinite(v))
        throw std::invalid_argument(std::string("BoundarySpec: ") + what +
                                    " is not finite");
    if (v < 0.0)
        throw std::invalid_argument(std::string("BoundarySpec: ") + what +
                                    " is negative");
}

}  // namespace

void BoundarySpec::validate(const Grid& grid, double t_end) const {
    const int nt = 8;
    for (int f = 0; f < 4; ++f) {
        const FieldBC& bc = field(f);
        for (int it = 0; it <= nt; ++it) {
            const double t = t_end * it / nt;
            for (int j = 1; j <= grid.ny; ++j)
                for (int i = 1; i <= grid.nx; ++i) {
                    const double x = grid.x_center(i), y = grid.y_center(j);
                    check_value(bc.alpha0(x, y, t), "bottom Robin coefficient");
                    check_value(bc.b0(x, y, t), "bottom boundary data");
                }
            for (int k = 1; k <= grid.np; ++k) {
                const double p = grid.p_center(k);
                check_value(bc.alphal(p, t), "lateral Robin coefficient");
                check_value(bc.bl(p, t), "lateral boundary data");
            }
        }
    }
}

double BoundarySpec::data_sup(int idx, const Grid& grid, double t_end) const {
    const FieldBC& bc = field(idx);
    const int nt = 8;
    double sup = 0.0;
    for (int it = 0; it <= nt; ++it) {
        const double t = t_end * it / nt;
        for (int j = 1; j <= grid.ny; ++j)
            for (int i = 1; i <= grid.nx; ++i)
                sup = std::max(sup, bc.b0(grid.x_center(i), grid.y_center(j), t));
        for (int k = 1; k <= grid.np; ++k)
            sup = std::max(sup, bc.bl(grid.p_center(k), t));
    }
    return sup;
}

}  // namespace cloudsim
