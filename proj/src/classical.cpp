#include "stdecomp/classical.hpp"

#include <cmath>
#include <limits>

namespace stdecomp {

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
}

Index edge_margin(Index period) {
    return period % 2 == 0 ? period / 2 : (period - 1) / 2;
}

Vector moving_average_trend(const Vector& series, Index period) {
    const Index n = series.size();
    if (period < 2) {
        throw DataError("period must be at least 2");
    }
    if (n < period + 1) {
        throw SeriesTooShortError(
            "moving average of order " + std::to_string(period) +
            " needs at least " + std::to_string(period + 1) +
            " observations, got " + std::to_string(n));
    }
    const Index m = edge_margin(period);
    Vector trend = Vector::Constant(n, kNan);
    if (period % 2 == 1) {
        // centered MA of order n
        const double w = 1.0 / static_cast<double>(period);
        for (Index t = m; t < n - m; ++t) {
            trend[t] = w * series.segment(t - m, period).sum();
        }
    } else {
        // 2xn MA: half weight on both endpoints of a window of n+1
        const double w = 1.0 / static_cast<double>(period);
        for (Index t = m; t < n - m; ++t) {
            double acc = 0.5 * (series[t - m] + series[t + m]);
            acc += series.segment(t - m + 1, period - 1).sum();
            trend[t] = w * acc;
        }
    }
    return trend;
}

ClassicalComponents classical_decompose(const Vector& series, Index period,
                                        ClassicalMode mode) {
    if (mode == ClassicalMode::Multiplicative) {
        for (Index t = 0; t < series.size(); ++t) {
            if (series[t] <= 0.0) {
                throw NonPositiveSeriesError(
                    "multiplicative decomposition needs a strictly positive "
                    "series; offending position " + std::to_string(t + 1));
            }
        }
    }
    ClassicalComponents c;
    c.period = period;
    c.mode = mode;
    c.trend = moving_average_trend(series, period);
    const Index n = series.size();

    // Per-position-in-cycle means of the detrended series, masked trend
    // positions excluded.
    Vector sums = Vector::Zero(period);
    Eigen::VectorXi counts = Eigen::VectorXi::Zero(period);
    for (Index t = 0; t < n; ++t) {
        if (std::isnan(c.trend[t])) {
            continue;
        }
        const double detrended = mode == ClassicalMode::Additive
                                     ? series[t] - c.trend[t]
                                     : series[t] / c.trend[t];
        sums[t % period] += detrended;
        counts[t % period] += 1;
    }
    c.pattern.resize(period);
    for (Index j = 0; j < period; ++j) {
        if (counts[j] == 0) {
            throw SeriesTooShortError(
                "no unmasked observation for cycle position " +
                std::to_string(j + 1));
        }
        c.pattern[j] = sums[j] / counts[j];
    }
    // Normalize: additive pattern sums to zero, multiplicative averages to one.
    if (mode == ClassicalMode::Additive) {
        c.pattern.array() -= c.pattern.mean();
    } else {
        c.pattern /= c.pattern.mean();
    }

    c.seasonal.resize(n);
    for (Index t = 0; t < n; ++t) {
        c.seasonal[t] = c.pattern[t % period];
    }
    c.remainder.resize(n);
    for (Index t = 0; t < n; ++t) {
        if (std::isnan(c.trend[t])) {
            c.remainder[t] = kNan;
        } else if (mode == ClassicalMode::Additive) {
            c.remainder[t] = series[t] - c.trend[t] - c.seasonal[t];
        } else {
            c.remainder[t] = series[t] / (c.trend[t] * c.seasonal[t]);
        }
    }
    return c;
}

}  // namespace stdecomp
