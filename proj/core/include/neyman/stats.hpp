#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace neyman {

/// Mean with a fixed left-to-right extended-precision accumulator.
inline double mean(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    long double acc = 0.0L;
    for (double x : xs) acc += x;
    return static_cast<double>(acc / static_cast<long double>(xs.size()));
}

/// Unbiased (n-1) sample variance, two-pass for stability.
inline double sample_variance(std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n < 2) return 0.0;
    const long double m = mean(xs);
    long double acc = 0.0L;
    for (double x : xs) {
        const long double d = static_cast<long double>(x) - m;
        acc += d * d;
    }
    return static_cast<double>(acc / static_cast<long double>(n - 1));
}

/// Linear-interpolation quantile (the numpy default): h = (n-1)q,
/// x[floor(h)] interpolated toward x[floor(h)+1]. Takes a copy and sorts.
inline double quantile(std::vector<double> xs, double q) {
    if (xs.empty()) return 0.0;
    std::sort(xs.begin(), xs.end());
    q = std::clamp(q, 0.0, 1.0);
    const double h = q * static_cast<double>(xs.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= xs.size()) return xs.back();
    const double frac = h - static_cast<double>(lo);
    return xs[lo] + frac * (xs[lo + 1] - xs[lo]);
}

}  // namespace neyman
