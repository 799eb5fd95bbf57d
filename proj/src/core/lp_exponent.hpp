#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace rgg {

// Metric exponent p of the l_p norm. Either a finite real >= 1 or the
// distinguished infinity variant; infinity is a tagged state, not a float.
class LpExponent {
  public:
    static LpExponent finite(double p) {
        if (!(p >= 1.0) || std::isinf(p)) {
            throw UsageError("lp exponent must be a finite real >= 1");
        }
        return LpExponent(p, false);
    }

    static LpExponent infinity() { return LpExponent(0.0, true); }

    // Accepts "inf"/"infinity"/"oo" or a decimal literal >= 1.
    static std::optional<LpExponent> parse(std::string_view s) {
        if (s == "inf" || s == "infinity" || s == "oo" || s == "Inf" || s == "INF") {
            return infinity();
        }
        try {
            size_t used = 0;
            double v = std::stod(std::string(s), &used);
            if (used != s.size() || !(v >= 1.0)) return std::nullopt;
            if (std::isinf(v)) return infinity();
            return finite(v);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    bool is_infinite() const { return infinite_; }

    // Finite exponent value; invalid for the infinity variant.
    double value() const {
        if (infinite_) throw UsageError("p is infinite; no finite value");
        return value_;
    }

    // 1/p, with the p=infinity limit 0. Safe for both variants.
    double inv() const { return infinite_ ? 0.0 : 1.0 / value_; }

    bool operator==(const LpExponent& o) const {
        return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
    }

    std::string str() const {
        if (infinite_) return "inf";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", value_);
        return buf;
    }

  private:
    LpExponent(double v, bool inf) : value_(v), infinite_(inf) {}
    double value_;
    bool infinite_;
};

}  // namespace rgg
