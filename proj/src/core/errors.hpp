#pragma once

#include <stdexcept>
#include <string>

namespace rgg {

// Caller violated a documented precondition (bad arguments, bad config).
// Maps to exit code 2 at the CLI boundary.
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Parameters fall outside the asymptotic regime a formula is valid for
// (e.g. the pincushion schedule at too-small n).
struct RegimeError : std::invalid_argument {
    explicit RegimeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Estimated resource use exceeds the configured cap.
// Maps to exit code 3 at the CLI boundary.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rgg
