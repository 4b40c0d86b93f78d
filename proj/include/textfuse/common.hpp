#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace textfuse {

/// Raised for bad configuration or missing resources. The CLI maps this to
/// exit code 2; plain std::runtime_error maps to exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void warn(const std::string& msg) {
    std::fprintf(stderr, "[warn] %s\n", msg.c_str());
}

inline void info(const std::string& msg) {
    std::fprintf(stderr, "[info] %s\n", msg.c_str());
}

inline bool is_finite(double x) { return std::isfinite(x); }

}  // namespace textfuse
