#pragma once

#include <cmath>
#include <numbers>

namespace btzharvest::detail {

/// log(sinh(x)) for x > 0 without overflow.
inline double log_sinh(double x) {
    if (x > 20.0) return x - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * x));
    return std::log(std::sinh(x));
}

/// 1 / sqrt(2 sinh(p) sinh(q)) for p, q > 0, overflow-safe.
inline double inv_sqrt_sinh_product(double p, double q) {
    return std::exp(-0.5 * (std::numbers::ln2 + log_sinh(p) + log_sinh(q)));
}

}  // namespace btzharvest::detail
