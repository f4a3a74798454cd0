#pragma once

// Deliberately naive double-loop STD/STDR used as an independent oracle.
// Transliterated from the reference listing with the diversity measure taken
// as the root sum of squared deviations (not sample std * sqrt(n)).

#include "stdecomp/series.hpp"

#include <cmath>
#include <vector>

namespace oracle {

using stdecomp::Index;
using stdecomp::Vector;

struct NaiveResult {
    std::vector<double> trend, dispersion, seasonal, seasonal_avg, remainder;
};

inline NaiveResult naive_std(const Vector& y, Index n, bool with_remainder) {
    const Index big_n = y.size();
    const Index k = big_n / n;
    NaiveResult r;
    r.trend.resize(big_n);
    r.dispersion.resize(big_n);
    r.seasonal.resize(big_n);
    for (Index i = 0; i < k; ++i) {
        double mean = 0.0;
        for (Index j = 0; j < n; ++j) {
            mean += y[i * n + j];
        }
        mean /= static_cast<double>(n);
        double ssq = 0.0;
        for (Index j = 0; j < n; ++j) {
            const double d = y[i * n + j] - mean;
            ssq += d * d;
        }
        const double diversity = std::sqrt(ssq);
        for (Index j = 0; j < n; ++j) {
            r.trend[i * n + j] = mean;
            r.dispersion[i * n + j] = diversity;
            r.seasonal[i * n + j] =
                diversity > 0.0 ? (y[i * n + j] - mean) / diversity : 0.0;
        }
    }
    if (with_remainder) {
        std::vector<double> pattern(n, 0.0);
        for (Index j = 0; j < n; ++j) {
            for (Index i = 0; i < k; ++i) {
                pattern[j] += r.seasonal[i * n + j];
            }
            pattern[j] /= static_cast<double>(k);
        }
        r.seasonal_avg.resize(big_n);
        r.remainder.resize(big_n);
        for (Index i = 0; i < k; ++i) {
            for (Index j = 0; j < n; ++j) {
                const Index t = i * n + j;
                r.seasonal_avg[t] = pattern[j];
                r.remainder[t] =
                    y[t] - (pattern[j] * r.dispersion[t] + r.trend[t]);
            }
        }
    }
    return r;
}

}  // namespace oracle
