#pragma once

#include "stdecomp/grid.hpp"
#include "stdecomp/series.hpp"

namespace stdecomp {

/// How the per-cycle dispersion is measured.
///   Diversity — root of the sum of squared deviations from the cycle mean;
///               makes the seasonal patterns zero-sum and unit-norm.
///   StdDev    — Diversity / sqrt(n); population standard deviation.
///   Appendix  — sample standard deviation * sqrt(n), i.e. Diversity
///               * sqrt(n/(n-1)); kept for cross-checking against the
///               reference MATLAB code.
enum class Dispersion { Diversity, StdDev, Appendix };

const char* to_string(Dispersion variant);

struct StdComponents {
    Vector trend;       // cycle mean, tiled; step function
    Vector dispersion;  // cycle diversity, tiled; step function, >= 0
    Vector seasonal;    // (y - T) / D, zero where D == 0
    Index period = 0;
    Dispersion variant = Dispersion::Diversity;
    std::vector<std::string> warnings;
};

struct StdrComponents : StdComponents {
    Vector avg_pattern;   // length n, mean seasonal pattern over cycles
    Vector seasonal_avg;  // avg_pattern tiled K times
    Vector remainder;     // y - (S' * D + T)
};

/// Per-cycle means (one value per grid row).
Vector cycle_mean(const SeasonalGrid& grid);

/// Per-cycle dispersion under the chosen variant. Constant cycles yield 0.
Vector cycle_diversity(const SeasonalGrid& grid, Dispersion variant);

/// Tiles each per-cycle mean across its n positions.
Vector trend_component(const Vector& means, Index period);

/// Tiles each per-cycle diversity across its n positions.
Vector dispersion_component(const Vector& diversities, Index period);

/// S_t = (y_t - T_t) / D_t, with S_t = 0 where D_t = 0 (constant cycle).
/// Affected cycles are reported through `warnings`.
Vector seasonal_component(const Vector& values, const Vector& trend,
                          const Vector& dispersion,
                          std::vector<std::string>* warnings = nullptr);

/// Mean pattern over cycles: element j averages position j of every cycle.
Vector average_seasonal_pattern(const Vector& seasonal, Index period);

StdComponents decompose_std(const TimeSeries& series, Index period,
                            Dispersion variant = Dispersion::Diversity,
                            const SplitOptions& options = {});

StdrComponents decompose_stdr(const TimeSeries& series, Index period,
                              Dispersion variant = Dispersion::Diversity,
                              const SplitOptions& options = {});

/// S * D + T.
Vector reconstruct(const StdComponents& components);

/// S' * D + T + R.
Vector reconstruct(const StdrComponents& components);

}  // namespace stdecomp
