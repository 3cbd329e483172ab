#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace cloudsim {

/// Cell-centered scalar with one ghost layer per face.
///
/// Interior cells are indexed (i,j,k) with i in [1,nx], j in [1,ny],
/// k in [1,np]; index 0 and n+1 address the ghost layers. Storage is
/// p-major, y-middle, x-minor so the innermost x loop is contiguous.
class ScalarField {
public:
    ScalarField() = default;

    ScalarField(int nx, int ny, int np)
        : nx_(nx), ny_(ny), np_(np),
          sx_(nx + 2), sxy_(static_cast<std::size_t>(nx + 2) * (ny + 2)),
          data_(static_cast<std::size_t>(nx + 2) * (ny + 2) * (np + 2), 0.0) {
        if (nx < 1 || ny < 1 || np < 1)
            throw std::invalid_argument("ScalarField: dimensions must be positive");
    }

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int np() const { return np_; }

    std::size_t index(int i, int j, int k) const {
        return static_cast<std::size_t>(k) * sxy_ + static_cast<std::size_t>(j) * sx_ + i;
    }

    double& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
    double operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::size_t size() const { return data_.size(); }

    void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

    bool same_shape(const ScalarField& o) const {
        return nx_ == o.nx_ && ny_ == o.ny_ && np_ == o.np_;
    }

private:
    int nx_ = 0, ny_ = 0, np_ = 0;
    std::size_t sx_ = 0, sxy_ = 0;
    std::vector<double> data_;
};

/// Interior extrema with a deterministic (k-slab ordered) reduction.
/// Throws if a NaN is found in the interior.
std::pair<double, double> field_minmax(const ScalarField& f);

/// Deterministic interior sum of fn(f(i,j,k)) in fixed slab order.
double field_sum_interior(const ScalarField& f);

/// True if every interior value is finite.
bool field_interior_finite(const ScalarField& f);

}  // namespace cloudsim
