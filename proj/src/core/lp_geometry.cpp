#include "lp_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rgg {

namespace {

// All gamma arguments here are positive, so the sign term is irrelevant;
// lgamma_r avoids the signgam global in concurrent use.
double log_gamma(double x) {
#ifdef __GLIBC__
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

void check_dim(int d) {
    if (d < 1) throw UsageError("dimension must be >= 1");
}

// d^{1/p - 1/2} clamped to >= 1 branch behavior: exponent max(0, 1/p - 1/2).
double diameter_stretch(int d, LpExponent p) {
    double e = std::max(0.0, p.inv() - 0.5);
    return std::pow(static_cast<double>(d), e);
}

// d^{1/2 - 1/p} for p <= 2, 1 for p >= 2: exponent min(0, 1/2 - 1/p).
double petal_shrink(int d, LpExponent p) {
    double e = std::min(0.0, 0.5 - p.inv());
    return std::pow(static_cast<double>(d), e);
}

}  // namespace

double lp_distance(std::span<const double> x, std::span<const double> y, LpExponent p) {
    if (x.size() != y.size() || x.empty()) {
        throw UsageError("lp_distance: points must share a dimension >= 1");
    }
    LpMetric m(static_cast<int>(x.size()), p);
    return m.dist(x.data(), y.data());
}

double lp_ball_volume(int d, LpExponent p, double r) {
    check_dim(d);
    if (r < 0.0) throw UsageError("lp_ball_volume: radius must be >= 0");
    if (r == 0.0) return 0.0;
    if (p.is_infinite()) return std::pow(2.0 * r, d);
    double pv = p.value();
    double log_vol = d * std::log(2.0 * r) + d * log_gamma((pv + 1.0) / pv) -
                     log_gamma((pv + d) / pv);
    return std::exp(log_vol);
}

double euclidean_ball_volume(int d, double r) {
    check_dim(d);
    if (r < 0.0) throw UsageError("euclidean_ball_volume: radius must be >= 0");
    if (r == 0.0) return 0.0;
    double log_vol = 0.5 * d * std::log(std::numbers::pi) + d * std::log(r) -
                     log_gamma(0.5 * d + 1.0);
    return std::exp(log_vol);
}

double alpha(int d, LpExponent p) {
    check_dim(d);
    if (!p.is_infinite() && p.value() == 2.0) return 1.0;
    double lg_half = log_gamma(1.5);
    double lg_num_p = p.is_infinite() ? 0.0 : log_gamma((p.value() + 1.0) / p.value());
    double lg_den_p = p.is_infinite() ? 0.0 : log_gamma((p.value() + d) / p.value());
    double log_a = d * (lg_num_p - lg_half) + log_gamma(0.5 * (2.0 + d)) - lg_den_p;
    return std::exp(log_a);
}

double unit_ball_lp_diameter(int d, LpExponent p) {
    check_dim(d);
    return 2.0 * diameter_stretch(d, p);
}

std::vector<double> lp_antipode(int d, LpExponent p) {
    check_dim(d);
    std::vector<double> a(d, 0.0);
    if (!p.is_infinite() && p.value() < 2.0) {
        std::fill(a.begin(), a.end(), 1.0 / std::sqrt(static_cast<double>(d)));
    } else {
        a[0] = 1.0;
    }
    return a;
}

double cap_cone_volume(int d, CapSpec cap) {
    check_dim(d);
    if (!(cap.r > 0.0) || cap.h < 0.0 || cap.h > cap.r) {
        throw UsageError("cap spec requires r > 0 and 0 <= h <= r");
    }
    if (cap.h == 0.0) return 0.0;
    double log_v = 0.5 * (d - 1) * std::log(std::numbers::pi) +
                   0.5 * (d - 1) * std::log(2.0 * cap.r - cap.h) +
                   0.5 * (d + 1) * std::log(cap.h) - std::log(static_cast<double>(d)) -
                   log_gamma(0.5 * (d + 1));
    return std::exp(log_v);
}

double cap_relative_volume_lower_bound(int d, double r, double h) {
    check_dim(d);
    if (!(r > 0.0) || h < 0.0 || h > r) {
        throw UsageError("cap spec requires r > 0 and 0 <= h <= r");
    }
    if (h == 0.0) return 0.0;
    double log_v = 0.5 * (d - 1) * std::log(std::numbers::pi) + 0.5 * (d - 1) * std::log(r) +
                   0.5 * (d + 1) * std::log(h) - std::log(static_cast<double>(d)) -
                   log_gamma(0.5 * (d + 1));
    return std::exp(log_v) / euclidean_ball_volume(d, r);
}

double cap_pair_lp_distance(int d, LpExponent p, double r, double h) {
    check_dim(d);
    if (!(r > 0.0) || h < 0.0 || h > r) {
        throw UsageError("cap spec requires r > 0 and 0 <= h <= r");
    }
    return 2.0 * (r - h) * diameter_stretch(d, p);
}

double petal_inscribed_radius(int d, LpExponent p, double lambda, double spacing) {
    check_dim(d);
    if (!(lambda > 0.0)) throw UsageError("petal_inscribed_radius: lambda must be > 0");
    double shrink = petal_shrink(d, p);
    if (spacing < 0.0 || spacing > lambda * shrink) {
        throw UsageError("petal_inscribed_radius: spacing must lie in [0, lambda*d^{1/2-1/p}]");
    }
    return 0.5 * lambda * shrink - 0.5 * spacing;
}

double xi_lower_bound(int d, LpExponent p, double lambda, double spacing) {
    double rp = petal_inscribed_radius(d, p, lambda, spacing);
    return std::pow(rp, d);
}

LpMetric::LpMetric(int d, LpExponent p) : d_(d), p_(p) {
    check_dim(d);
    if (p.is_infinite()) {
        kind_ = Kind::inf;
    } else if (p.value() == 1.0) {
        kind_ = Kind::one;
    } else if (p.value() == 2.0) {
        kind_ = Kind::two;
    } else {
        kind_ = Kind::general;
        pval_ = p.value();
    }
}

double LpMetric::dist(const double* x, const double* y) const {
    switch (kind_) {
        case Kind::inf: {
            double m = 0.0;
            for (int k = 0; k < d_; ++k) m = std::max(m, std::fabs(x[k] - y[k]));
            return m;
        }
        case Kind::one: {
            double s = 0.0;
            for (int k = 0; k < d_; ++k) s += std::fabs(x[k] - y[k]);
            return s;
        }
        case Kind::two: {
            double s = 0.0;
            for (int k = 0; k < d_; ++k) {
                double t = x[k] - y[k];
                s += t * t;
            }
            return std::sqrt(s);
        }
        case Kind::general: {
            double s = 0.0;
            for (int k = 0; k < d_; ++k) s += std::pow(std::fabs(x[k] - y[k]), pval_);
            return std::pow(s, 1.0 / pval_);
        }
    }
    return 0.0;
}

bool LpMetric::within(const double* x, const double* y, double radius) const {
    for (int k = 0; k < d_; ++k) {
        if (std::fabs(x[k] - y[k]) > radius) return false;
    }
    if (kind_ == Kind::inf) return true;
    return dist(x, y) <= radius;
}

}  // namespace rgg
