#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace testutil {

// Deterministic RNG for property-style tests.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
}

inline double log_uniform(std::mt19937_64& gen, double lo, double hi) {
    return std::exp(uniform(gen, std::log(lo), std::log(hi)));
}

inline std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return out;
}

template <typename F>
double central_diff(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace testutil
