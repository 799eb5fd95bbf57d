#pragma once

#include <span>
#include <vector>

#include "lp_exponent.hpp"

namespace rgg {

// Closed-form l_p and spherical geometry of the unit ball B = B_2^d(1):
// distances, ball volumes, the volume ratio alpha, antipodes, spherical-cap
// bounds and the petal (lens) bounds used by the pincushion construction.
// All functions are pure and safe for unrestricted concurrent use.

// ||x - y||_p. Throws UsageError on dimension mismatch or empty points.
double lp_distance(std::span<const double> x, std::span<const double> y, LpExponent p);

// vol(B_p^d(r)) = (2r)^d Gamma((p+1)/p)^d / Gamma((p+d)/p); (2r)^d for p=inf.
double lp_ball_volume(int d, LpExponent p, double r);

// Euclidean ball volume pi^{d/2} r^d / Gamma(d/2+1).
double euclidean_ball_volume(int d, double r);

// alpha_p^d = vol(B_p^d(r)) / vol(B_2^d(r)); independent of r, exactly 1 at p=2.
double alpha(int d, LpExponent p);

// diam_p(B) = max(2, 2 d^{1/p-1/2}).
double unit_ball_lp_diameter(int d, LpExponent p);

// Canonical representative a of an antipode pair {+a, -a} realizing
// diam_p(B): all coordinates d^{-1/2} for p < 2, the first coordinate unit
// vector for p >= 2 (where the p=2 solution set is the whole sphere).
std::vector<double> lp_antipode(int d, LpExponent p);

// Spherical cap of the Euclidean ball B_2^d(r), height h measured from the
// boundary along the axis: C = {x in B : r-h <= <x,a>/||a||}.
struct CapSpec {
    double r;  // ball radius > 0
    double h;  // cap height, 0 <= h <= r
};

// Volume of the hypercone inscribed in the cap:
//   pi^{(d-1)/2} (2r-h)^{(d-1)/2} h^{(d+1)/2} / (d Gamma((d+1)/2)).
// Lower-bounds the true cap volume; zero at h=0, increasing in h.
double cap_cone_volume(int d, CapSpec cap);

// Lower bound for vol(C)/vol(B_2^d(r)) obtained from the cone volume and
// 2r-h >= r: pi^{(d-1)/2} r^{(d-1)/2} h^{(d+1)/2} / (d Gamma((d+1)/2) vol(B_2^d(r))).
double cap_relative_volume_lower_bound(int d, double r, double h);

// l_p distance between the two caps of height h at an l_p antipode pair of
// B_2^d(r): 2(r-h) d^{1/p-1/2} for p <= 2, else 2(r-h).
double cap_pair_lp_distance(int d, LpExponent p, double r, double h);

// Radius r' of the Euclidean ball centered at the midpoint of two l_p balls
// of radius lambda/2 whose centers are spacing apart; that ball lies inside
// both. r' = (lambda/2) d^{1/2-1/p} - spacing/2 for p <= 2, else
// (lambda/2) - spacing/2. Throws UsageError when spacing would make r' < 0.
double petal_inscribed_radius(int d, LpExponent p, double lambda, double spacing);

// Lower bound (r')^d for xi / vol(B), the minimum relative petal volume.
double xi_lower_bound(int d, LpExponent p, double lambda, double spacing);

// Distance kernel with the branch on p resolved once. Used in hot loops
// (graph construction, occupancy scans); dist() agrees exactly with
// lp_distance on every input.
class LpMetric {
  public:
    LpMetric(int d, LpExponent p);

    int dim() const { return d_; }
    LpExponent exponent() const { return p_; }

    double dist(const double* x, const double* y) const;

    // true iff ||x-y||_p <= radius, with an exact max-coordinate prefilter
    // (||.||_inf <= ||.||_p, so the prefilter never drops a true neighbor).
    bool within(const double* x, const double* y, double radius) const;

  private:
    enum class Kind { one, two, inf, general };
    int d_;
    LpExponent p_;
    Kind kind_;
    double pval_ = 0.0;
};

}  // namespace rgg
