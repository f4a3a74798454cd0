#include "stdecomp/decompose.hpp"

#include <algorithm>
#include <cmath>

namespace stdecomp {

const char* to_string(Dispersion variant) {
    switch (variant) {
        case Dispersion::Diversity: return "diversity";
        case Dispersion::StdDev: return "stddev";
        case Dispersion::Appendix: return "appendix";
    }
    return "?";
}

Vector cycle_mean(const SeasonalGrid& grid) {
    return grid.cycles.rowwise().mean();
}

Vector cycle_diversity(const SeasonalGrid& grid, Dispersion variant) {
    const Index n = grid.period();
    const Vector means = cycle_mean(grid);
    Vector out =
        (grid.cycles.colwise() - means).rowwise().norm();
    switch (variant) {
        case Dispersion::Diversity:
            break;
        case Dispersion::StdDev:
            out /= std::sqrt(static_cast<double>(n));
            break;
        case Dispersion::Appendix:
            // sample std * sqrt(n), as in the reference MATLAB code
            out *= std::sqrt(static_cast<double>(n) /
                             static_cast<double>(n - 1));
            break;
    }
    return out;
}

namespace {

Vector tile_per_cycle(const Vector& per_cycle, Index period) {
    Vector out(per_cycle.size() * period);
    for (Index i = 0; i < per_cycle.size(); ++i) {
        out.segment(i * period, period).setConstant(per_cycle[i]);
    }
    return out;
}

}  // namespace

Vector trend_component(const Vector& means, Index period) {
    return tile_per_cycle(means, period);
}

Vector dispersion_component(const Vector& diversities, Index period) {
    return tile_per_cycle(diversities, period);
}

Vector seasonal_component(const Vector& values, const Vector& trend,
                          const Vector& dispersion,
                          std::vector<std::string>* warnings) {
    if (trend.size() != values.size() || dispersion.size() != values.size()) {
        throw DataError("component length mismatch");
    }
    Vector out(values.size());
    std::vector<Index> degenerate;  // positions with D == 0
    for (Index t = 0; t < values.size(); ++t) {
        if (dispersion[t] > 0.0) {
            out[t] = (values[t] - trend[t]) / dispersion[t];
        } else {
            // constant cycle: y == T there, so reconstruction still holds
            out[t] = 0.0;
            degenerate.push_back(t);
        }
    }
    if (warnings != nullptr && !degenerate.empty()) {
        std::string msg =
            "zero dispersion: seasonal component set to 0 at positions";
        const std::size_t shown = std::min<std::size_t>(degenerate.size(), 8);
        for (std::size_t i = 0; i < shown; ++i) {
            msg += ' ' + std::to_string(degenerate[i] + 1);
        }
        if (degenerate.size() > shown) {
            msg += " ... (" + std::to_string(degenerate.size()) + " total)";
        }
        warnings->push_back(msg);
    }
    return out;
}

Vector average_seasonal_pattern(const Vector& seasonal, Index period) {
    if (seasonal.size() % period != 0) {
        throw DataError("seasonal length is not a multiple of the period");
    }
    const Index k = seasonal.size() / period;
    Vector pattern = Vector::Zero(period);
    for (Index i = 0; i < k; ++i) {
        pattern += seasonal.segment(i * period, period);
    }
    return pattern / static_cast<double>(k);
}

StdComponents decompose_std(const TimeSeries& series, Index period,
                            Dispersion variant, const SplitOptions& options) {
    series.validate();
    StdComponents c;
    c.period = period;
    c.variant = variant;
    SplitOptions opts = options;
    opts.allow_single_cycle = true;  // K == 1 is legal for STD, with a warning
    const SeasonalGrid grid = split_cycles(series.values, period, opts,
                                           &c.warnings);
    const Vector y = grid.flatten();
    c.trend = trend_component(cycle_mean(grid), period);
    c.dispersion = dispersion_component(cycle_diversity(grid, variant), period);
    c.seasonal = seasonal_component(y, c.trend, c.dispersion, &c.warnings);
    return c;
}

StdrComponents decompose_stdr(const TimeSeries& series, Index period,
                              Dispersion variant, const SplitOptions& options) {
    series.validate();
    StdrComponents c;
    c.period = period;
    c.variant = variant;
    const SeasonalGrid grid =
        split_cycles(series.values, period, options, &c.warnings);
    const Vector y = grid.flatten();
    c.trend = trend_component(cycle_mean(grid), period);
    c.dispersion = dispersion_component(cycle_diversity(grid, variant), period);
    c.seasonal = seasonal_component(y, c.trend, c.dispersion, &c.warnings);
    c.avg_pattern = average_seasonal_pattern(c.seasonal, period);
    c.seasonal_avg.resize(y.size());
    for (Index i = 0; i < grid.cycle_count(); ++i) {
        c.seasonal_avg.segment(i * period, period) = c.avg_pattern;
    }
    c.remainder =
        y - (c.seasonal_avg.cwiseProduct(c.dispersion) + c.trend);
    return c;
}

Vector reconstruct(const StdComponents& components) {
    return components.seasonal.cwiseProduct(components.dispersion) +
           components.trend;
}

Vector reconstruct(const StdrComponents& components) {
    return components.seasonal_avg.cwiseProduct(components.dispersion) +
           components.trend + components.remainder;
}

}  // namespace stdecomp
