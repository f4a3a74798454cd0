#pragma once

#include "stdecomp/series.hpp"

#include <map>

namespace stdecomp {

/// Summary of the remainder-to-series ratio r_t = |R_t / y_t| * 100.
struct RatioSummary {
    Vector ratios;        // one value per included position, in percent
    double median = 0.0;  // percent
    double iqr = 0.0;     // percent
    Index excluded = 0;   // positions dropped because y_t == 0
};

/// Type-7 quantile (linear interpolation between order statistics).
/// `p` in [0, 1]; the input need not be sorted.
double quantile(const Vector& sample, double p);

RatioSummary remainder_ratio(const Vector& remainder, const Vector& series);

struct Correlogram {
    Vector values;     // index k = correlation at lag k
    double conf_band;  // +-1.96 / sqrt(N)

    Index max_lag() const { return values.size() - 1; }
};

/// Sample autocorrelation, lags 0..max_lag.
/// Throws ZeroVarianceError for a constant series.
Correlogram acf(const Vector& series, Index max_lag);

/// Partial autocorrelation via the Durbin-Levinson recursion on the ACF.
/// Lag 0 is reported as 1 by convention.
Correlogram pacf(const Vector& series, Index max_lag);

enum class TestKind { Adf, Kpss, Pp };
enum class RegressionSpec { Constant, ConstantTrend };
enum class Conclusion { StationaryAt1pct, NotStationary, Inconclusive };

const char* to_string(TestKind test);
const char* to_string(Conclusion conclusion);

struct StationarityVerdict {
    TestKind test;
    double statistic = 0.0;
    std::map<int, double> critical_values;  // significance percent -> value
    Conclusion conclusion = Conclusion::Inconclusive;
    RegressionSpec spec = RegressionSpec::Constant;
    Index lags_or_bandwidth = 0;
};

constexpr Index kAutoLag = -1;

/// Augmented Dickey-Fuller test; null hypothesis is a unit root.
/// max_lag == kAutoLag selects the lag order by AIC up to
/// floor(12 * (N/100)^(1/4)).
StationarityVerdict adf_test(const Vector& series,
                             RegressionSpec spec = RegressionSpec::Constant,
                             Index max_lag = kAutoLag);

/// KPSS test; null hypothesis is (level or trend) stationarity.
/// bandwidth == kAutoLag uses floor(4 * (N/100)^(1/4)).
StationarityVerdict kpss_test(const Vector& series,
                              RegressionSpec spec = RegressionSpec::Constant,
                              Index bandwidth = kAutoLag);

/// Phillips-Perron Z_t test; null hypothesis is a unit root.
StationarityVerdict pp_test(const Vector& series,
                            RegressionSpec spec = RegressionSpec::Constant,
                            Index bandwidth = kAutoLag);

struct DiagnosticsReport {
    StationarityVerdict adf;
    StationarityVerdict kpss;
    StationarityVerdict pp;
    RatioSummary ratio;
};

/// Runs the three tests with default specs on the remainder and summarizes
/// its ratio to the source series.
DiagnosticsReport stationarity_report(const Vector& remainder,
                                      const Vector& series);

}  // namespace stdecomp
