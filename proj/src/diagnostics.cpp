#include "stdecomp/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace stdecomp {

const char* to_string(TestKind test) {
    switch (test) {
        case TestKind::Adf: return "adf";
        case TestKind::Kpss: return "kpss";
        case TestKind::Pp: return "pp";
    }
    return "?";
}

const char* to_string(Conclusion conclusion) {
    switch (conclusion) {
        case Conclusion::StationaryAt1pct: return "stationary_at_1pct";
        case Conclusion::NotStationary: return "not_stationary";
        case Conclusion::Inconclusive: return "inconclusive";
    }
    return "?";
}

double quantile(const Vector& sample, double p) {
    if (sample.size() == 0) {
        throw DataError("quantile of an empty sample");
    }
    std::vector<double> sorted(sample.data(), sample.data() + sample.size());
    std::sort(sorted.begin(), sorted.end());
    const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= sorted.size()) {
        return sorted.back();
    }
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

RatioSummary remainder_ratio(const Vector& remainder, const Vector& series) {
    if (remainder.size() != series.size()) {
        throw DataError("remainder and series lengths differ");
    }
    RatioSummary summary;
    std::vector<double> ratios;
    ratios.reserve(series.size());
    for (Index t = 0; t < series.size(); ++t) {
        if (series[t] == 0.0) {
            ++summary.excluded;
        } else {
            ratios.push_back(std::abs(remainder[t] / series[t]) * 100.0);
        }
    }
    if (ratios.empty()) {
        throw AllZeroSeriesError("every observation is zero; r_t undefined");
    }
    summary.ratios =
        Eigen::Map<const Vector>(ratios.data(), static_cast<Index>(ratios.size()));
    summary.median = quantile(summary.ratios, 0.5);
    summary.iqr = quantile(summary.ratios, 0.75) - quantile(summary.ratios, 0.25);
    return summary;
}

Correlogram acf(const Vector& series, Index max_lag) {
    const Index n = series.size();
    if (max_lag >= n) {
        throw DataError("max_lag must be below the series length");
    }
    const double mean = series.mean();
    const Vector centered = series.array() - mean;
    const double denom = centered.squaredNorm();
    if (denom == 0.0) {
        throw ZeroVarianceError("constant series has no autocorrelation");
    }
    Correlogram result;
    result.values.resize(max_lag + 1);
    for (Index k = 0; k <= max_lag; ++k) {
        result.values[k] =
            centered.head(n - k).dot(centered.tail(n - k)) / denom;
    }
    result.conf_band = 1.96 / std::sqrt(static_cast<double>(n));
    return result;
}

Correlogram pacf(const Vector& series, Index max_lag) {
    const Correlogram rho = acf(series, max_lag);
    Correlogram result;
    result.conf_band = rho.conf_band;
    result.values.resize(max_lag + 1);
    result.values[0] = 1.0;
    if (max_lag == 0) {
        return result;
    }
    // Durbin-Levinson: phi[k][k] is the partial autocorrelation at lag k.
    std::vector<double> phi_prev(max_lag + 1, 0.0);
    std::vector<double> phi(max_lag + 1, 0.0);
    phi_prev[1] = rho.values[1];
    result.values[1] = rho.values[1];
    double variance = 1.0 - rho.values[1] * rho.values[1];
    for (Index k = 2; k <= max_lag; ++k) {
        double num = rho.values[k];
        for (Index j = 1; j < k; ++j) {
            num -= phi_prev[j] * rho.values[k - j];
        }
        const double phi_kk = variance != 0.0 ? num / variance : 0.0;
        for (Index j = 1; j < k; ++j) {
            phi[j] = phi_prev[j] - phi_kk * phi_prev[k - j];
        }
        phi[k] = phi_kk;
        variance *= 1.0 - phi_kk * phi_kk;
        result.values[k] = phi_kk;
        std::swap(phi, phi_prev);
    }
    return result;
}

namespace {

struct OlsFit {
    Vector beta;
    Vector stderr_;
    Vector residuals;
    double sigma2 = 0.0;  // SSR / (T - k)
};

OlsFit ols(const Matrix& x, const Vector& z) {
    OlsFit fit;
    const auto qr = x.colPivHouseholderQr();
    fit.beta = qr.solve(z);
    fit.residuals = z - x * fit.beta;
    const Index t = x.rows();
    const Index k = x.cols();
    fit.sigma2 = fit.residuals.squaredNorm() / static_cast<double>(t - k);
    const Matrix xtx_inv =
        (x.transpose() * x).ldlt().solve(Matrix::Identity(k, k));
    fit.stderr_ = (fit.sigma2 * xtx_inv.diagonal()).cwiseSqrt();
    return fit;
}

// Bartlett-kernel long-run variance (Newey-West) of a zero-mean residual
// series, with `bandwidth` lags.
double long_run_variance(const Vector& u, Index bandwidth) {
    const Index t = u.size();
    double lrv = u.squaredNorm() / static_cast<double>(t);
    for (Index j = 1; j <= bandwidth; ++j) {
        const double gamma =
            u.head(t - j).dot(u.tail(t - j)) / static_cast<double>(t);
        const double w =
            1.0 - static_cast<double>(j) / static_cast<double>(bandwidth + 1);
        lrv += 2.0 * w * gamma;
    }
    return lrv;
}

Index default_bandwidth(Index n) {
    return static_cast<Index>(
        std::floor(4.0 * std::pow(static_cast<double>(n) / 100.0, 0.25)));
}

Index default_max_lag(Index n) {
    return static_cast<Index>(
        std::floor(12.0 * std::pow(static_cast<double>(n) / 100.0, 0.25)));
}

struct CriticalRow {
    double n;  // sample size the row applies to
    double cv1, cv5, cv10;
};

// Dickey-Fuller t-distribution (Fuller 1976), constant-only regression.
constexpr CriticalRow kDfConstant[] = {
    {25, -3.75, -3.00, -2.63},  {50, -3.58, -2.93, -2.60},
    {100, -3.51, -2.89, -2.58}, {250, -3.46, -2.88, -2.57},
    {500, -3.44, -2.87, -2.57}, {1e18, -3.43, -2.86, -2.57},
};

// Constant + linear trend regression.
constexpr CriticalRow kDfTrend[] = {
    {25, -4.38, -3.60, -3.24},  {50, -4.15, -3.50, -3.18},
    {100, -4.04, -3.45, -3.15}, {250, -3.99, -3.43, -3.13},
    {500, -3.98, -3.42, -3.13}, {1e18, -3.96, -3.41, -3.12},
};

std::map<int, double> df_critical_values(Index n, RegressionSpec spec) {
    const CriticalRow* table =
        spec == RegressionSpec::Constant ? kDfConstant : kDfTrend;
    const int rows = 6;
    const double nn = static_cast<double>(n);
    int hi = 0;
    while (hi < rows - 1 && table[hi].n < nn) {
        ++hi;
    }
    const CriticalRow& a = table[hi == 0 ? 0 : hi - 1];
    const CriticalRow& b = table[hi];
    double w = 0.0;
    if (b.n > a.n && nn > a.n) {
        w = std::min(1.0, (nn - a.n) / (b.n - a.n));
    }
    return {{1, a.cv1 + w * (b.cv1 - a.cv1)},
            {5, a.cv5 + w * (b.cv5 - a.cv5)},
            {10, a.cv10 + w * (b.cv10 - a.cv10)}};
}

std::map<int, double> kpss_critical_values(RegressionSpec spec) {
    if (spec == RegressionSpec::Constant) {
        return {{1, 0.739}, {5, 0.463}, {10, 0.347}};
    }
    return {{1, 0.216}, {5, 0.146}, {10, 0.119}};
}

// ADF/PP reject the unit root (conclude stationarity) when the statistic is
// below the critical value; KPSS rejects stationarity above it.
Conclusion conclude(double stat, const std::map<int, double>& cv,
                    bool lower_tail_rejects) {
    if (lower_tail_rejects) {
        if (stat < cv.at(1)) return Conclusion::StationaryAt1pct;
        if (stat > cv.at(10)) return Conclusion::NotStationary;
    } else {
        if (stat > cv.at(1)) return Conclusion::NotStationary;
        if (stat < cv.at(10)) return Conclusion::StationaryAt1pct;
    }
    return Conclusion::Inconclusive;
}

// Design matrix for the Dickey-Fuller regression
//   dy_t = alpha [+ beta t] + gamma y_{t-1} + sum_k delta_k dy_{t-k} + e_t
// over observations dy[start..]. Column 1 is y_{t-1}.
Matrix df_design(const Vector& y, const Vector& dy, Index start, Index lags,
                 RegressionSpec spec) {
    const Index t = dy.size() - start;
    const Index k = 2 + lags + (spec == RegressionSpec::ConstantTrend ? 1 : 0);
    Matrix x(t, k);
    x.col(0).setOnes();
    x.col(1) = y.segment(start, t);
    Index col = 2;
    if (spec == RegressionSpec::ConstantTrend) {
        for (Index i = 0; i < t; ++i) {
            x(i, col) = static_cast<double>(i);
        }
        ++col;
    }
    for (Index lag = 1; lag <= lags; ++lag, ++col) {
        x.col(col) = dy.segment(start - lag, t);
    }
    return x;
}

}  // namespace

StationarityVerdict adf_test(const Vector& series, RegressionSpec spec,
                             Index max_lag) {
    const Index n = series.size();
    if (n < 20) {
        throw SeriesTooShortError("ADF needs at least 20 observations, got " +
                                  std::to_string(n));
    }
    const Vector dy = series.tail(n - 1) - series.head(n - 1);
    Index lags = max_lag;
    if (max_lag == kAutoLag) {
        // AIC over a common effective sample so the fits are comparable.
        const Index pmax =
            std::min(default_max_lag(n), dy.size() - 2);
        double best_aic = std::numeric_limits<double>::infinity();
        lags = 0;
        for (Index p = 0; p <= pmax; ++p) {
            const Matrix x = df_design(series, dy, pmax, p, spec);
            const Vector z = dy.tail(dy.size() - pmax);
            const OlsFit fit = ols(x, z);
            const double t = static_cast<double>(z.size());
            const double ssr = fit.residuals.squaredNorm();
            const double aic =
                t * std::log(ssr / t) + 2.0 * static_cast<double>(x.cols());
            if (aic < best_aic) {
                best_aic = aic;
                lags = p;
            }
        }
    }
    const Matrix x = df_design(series, dy, lags, lags, spec);
    const Vector z = dy.tail(dy.size() - lags);
    const OlsFit fit = ols(x, z);

    StationarityVerdict verdict;
    verdict.test = TestKind::Adf;
    verdict.spec = spec;
    verdict.lags_or_bandwidth = lags;
    verdict.statistic = fit.beta[1] / fit.stderr_[1];
    verdict.critical_values = df_critical_values(n, spec);
    verdict.conclusion =
        conclude(verdict.statistic, verdict.critical_values, true);
    return verdict;
}

StationarityVerdict kpss_test(const Vector& series, RegressionSpec spec,
                              Index bandwidth) {
    const Index n = series.size();
    if (n < 20) {
        throw SeriesTooShortError("KPSS needs at least 20 observations, got " +
                                  std::to_string(n));
    }
    Vector resid;
    if (spec == RegressionSpec::Constant) {
        resid = series.array() - series.mean();
    } else {
        Matrix x(n, 2);
        x.col(0).setOnes();
        for (Index i = 0; i < n; ++i) {
            x(i, 1) = static_cast<double>(i);
        }
        resid = ols(x, series).residuals;
    }
    if (bandwidth == kAutoLag) {
        bandwidth = default_bandwidth(n);
    }
    Vector partial(n);
    double cum = 0.0;
    for (Index t = 0; t < n; ++t) {
        cum += resid[t];
        partial[t] = cum;
    }
    const double lrv = long_run_variance(resid, bandwidth);
    if (lrv <= 0.0) {
        throw ZeroVarianceError("degenerate long-run variance in KPSS");
    }

    StationarityVerdict verdict;
    verdict.test = TestKind::Kpss;
    verdict.spec = spec;
    verdict.lags_or_bandwidth = bandwidth;
    verdict.statistic =
        partial.squaredNorm() / (static_cast<double>(n) * n * lrv);
    verdict.critical_values = kpss_critical_values(spec);
    verdict.conclusion =
        conclude(verdict.statistic, verdict.critical_values, false);
    return verdict;
}

StationarityVerdict pp_test(const Vector& series, RegressionSpec spec,
                            Index bandwidth) {
    const Index n = series.size();
    if (n < 20) {
        throw SeriesTooShortError("PP needs at least 20 observations, got " +
                                  std::to_string(n));
    }
    const Vector dy = series.tail(n - 1) - series.head(n - 1);
    const Matrix x = df_design(series, dy, 0, 0, spec);
    const OlsFit fit = ols(x, dy);
    const Index t = dy.size();

    if (bandwidth == kAutoLag) {
        bandwidth = default_bandwidth(n);
    }
    const double gamma0 =
        fit.residuals.squaredNorm() / static_cast<double>(t);
    const double lam2 = long_run_variance(fit.residuals, bandwidth);
    if (lam2 <= 0.0 || gamma0 <= 0.0) {
        throw ZeroVarianceError("degenerate variance in PP");
    }
    const double tau = fit.beta[1] / fit.stderr_[1];
    const double s = std::sqrt(fit.sigma2);
    const double z_t =
        std::sqrt(gamma0 / lam2) * tau -
        static_cast<double>(t) * fit.stderr_[1] * (lam2 - gamma0) /
            (2.0 * std::sqrt(lam2) * s);

    StationarityVerdict verdict;
    verdict.test = TestKind::Pp;
    verdict.spec = spec;
    verdict.lags_or_bandwidth = bandwidth;
    verdict.statistic = z_t;
    verdict.critical_values = df_critical_values(n, spec);
    verdict.conclusion =
        conclude(verdict.statistic, verdict.critical_values, true);
    return verdict;
}

DiagnosticsReport stationarity_report(const Vector& remainder,
                                      const Vector& series) {
    DiagnosticsReport report;
    report.adf = adf_test(remainder);
    report.kpss = kpss_test(remainder);
    report.pp = pp_test(remainder);
    report.ratio = remainder_ratio(remainder, series);
    return report;
}

}  // namespace stdecomp
