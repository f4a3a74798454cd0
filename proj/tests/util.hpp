#pragma once

#include "stdecomp/series.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace testutil {

using stdecomp::Index;
using stdecomp::Vector;

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double gaussian(std::mt19937_64& rng) {
    double u1 = uniform01(rng);
    while (u1 <= 0.0) {
        u1 = uniform01(rng);
    }
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

// Trend + seasonal + noise mix with randomized slopes, pattern and scale.
inline Vector random_series(std::mt19937_64& rng, Index period, Index cycles) {
    const Index n = period * cycles;
    const double slope = 4.0 * (uniform01(rng) - 0.5);
    const double level = 20.0 * (uniform01(rng) - 0.5);
    const double amplitude = 0.5 + 5.0 * uniform01(rng);
    Vector pattern(period);
    for (Index j = 0; j < period; ++j) {
        pattern[j] = std::sin(2.0 * M_PI * j / static_cast<double>(period)) +
                     0.3 * gaussian(rng);
    }
    Vector y(n);
    for (Index t = 0; t < n; ++t) {
        y[t] = level + slope * static_cast<double>(t) / period +
               amplitude * pattern[t % period] + 0.2 * gaussian(rng);
    }
    return y;
}

inline Vector random_positive_series(std::mt19937_64& rng, Index period,
                                     Index cycles) {
    Vector y = random_series(rng, period, cycles);
    const double shift = y.minCoeff();
    return (y.array() - shift + 1.0).matrix();
}

inline double max_rel_error(const Vector& got, const Vector& want) {
    double worst = 0.0;
    for (Index t = 0; t < want.size(); ++t) {
        const double scale = std::max(1.0, std::abs(want[t]));
        worst = std::max(worst, std::abs(got[t] - want[t]) / scale);
    }
    return worst;
}

inline std::string data_path(const std::string& file) {
    return std::string(STDECOMP_DATA_DIR) + "/" + file;
}

}  // namespace testutil
