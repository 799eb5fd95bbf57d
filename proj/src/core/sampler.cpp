#include "sampler.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace rgg {

PointSet sample_unit_ball(std::int64_t n, int d, Seed seed) {
    if (d < 1) throw UsageError("sample_unit_ball: dimension must be >= 1");
    if (n < 0) throw UsageError("sample_unit_ball: count must be >= 0");
    PointSet ps(d, n);
    SplitMix64 rng(seed);
    std::vector<double> g(d);
    for (std::int64_t i = 0; i < n; ++i) {
        double norm2;
        do {
            norm2 = 0.0;
            for (int k = 0; k < d; ++k) {
                g[k] = rng.next_gaussian();
                norm2 += g[k] * g[k];
            }
        } while (norm2 == 0.0);
        double radius = std::pow(rng.next_double(), 1.0 / d);
        double scale = radius / std::sqrt(norm2);
        for (int k = 0; k < d; ++k) ps.set_coord(i, k, g[k] * scale);
    }
    return ps;
}

std::vector<double> sample_d1(std::int64_t n, Seed seed) {
    if (n < 0) throw UsageError("sample_d1: count must be >= 0");
    SplitMix64 rng(seed);
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (auto& x : xs) x = rng.next_symmetric();
    std::sort(xs.begin(), xs.end());
    return xs;
}

}  // namespace rgg
