#pragma once

#include <cmath>
#include <random>
#include <vector>

namespace testutil {

inline double rel_err(double got, double want) {
    return std::fabs(got - want) / std::fabs(want);
}

/// n points geometrically spaced in (value − 1) over [lo, hi].
inline std::vector<double> log_spaced_above_one(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(n);
    const double a = std::log(lo - 1.0);
    const double b = std::log(hi - 1.0);
    for (int i = 0; i < n; ++i) {
        out.push_back(1.0 + std::exp(a + (b - a) * i / (n - 1)));
    }
    return out;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed1234ULL);
    return gen;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

}  // namespace testutil
