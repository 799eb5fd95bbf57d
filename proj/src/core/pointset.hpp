#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace rgg {

// n points in R^d, coordinate-major (structure of arrays): axis k occupies
// coords_[k*n .. k*n + n). Immutable after construction in normal use.
class PointSet {
  public:
    PointSet() = default;
    PointSet(int d, std::int64_t n);

    // Row-major input, point i at data[i*d .. i*d+d).
    static PointSet from_rows(int d, std::span<const double> row_major);

    int dim() const { return d_; }
    std::int64_t size() const { return n_; }

    double coord(std::int64_t i, int axis) const { return coords_[axis * n_ + i]; }
    void set_coord(std::int64_t i, int axis, double v) { coords_[axis * n_ + i] = v; }

    std::span<const double> axis(int k) const {
        return {coords_.data() + static_cast<std::size_t>(k) * n_, static_cast<std::size_t>(n_)};
    }

    // Copies point i into out[0..d).
    void point(std::int64_t i, double* out) const {
        for (int k = 0; k < d_; ++k) out[k] = coords_[static_cast<std::int64_t>(k) * n_ + i];
    }

    // CSV with header x1,...,xd, one row per point, full double precision.
    void save_csv(std::ostream& os) const;
    void save_csv_file(const std::string& path) const;
    static PointSet load_csv(std::istream& is);
    static PointSet load_csv_file(const std::string& path);

  private:
    int d_ = 0;
    std::int64_t n_ = 0;
    std::vector<double> coords_;
};

}  // namespace rgg
