#pragma once

#include <vector>

#include "pointset.hpp"
#include "rng.hpp"

namespace rgg {

// n i.i.d. points uniform in the Euclidean unit ball B_2^d(1), via a
// normalized Gaussian direction and radius U^{1/d} (exact for every d).
// Deterministic for a fixed seed, independent of thread count.
PointSet sample_unit_ball(std::int64_t n, int d, Seed seed);

// d=1 fast path: n uniform coordinates in [-1,1], returned sorted.
std::vector<double> sample_d1(std::int64_t n, Seed seed);

}  // namespace rgg
