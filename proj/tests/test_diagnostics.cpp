#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stdecomp/decompose.hpp"
#include "stdecomp/diagnostics.hpp"
#include "stdecomp/generators.hpp"
#include "stdecomp/io.hpp"

#include "util.hpp"

#include <cmath>

using namespace stdecomp;

namespace {

Vector vec(std::initializer_list<double> values) {
    Vector v(static_cast<Index>(values.size()));
    Index i = 0;
    for (double x : values) {
        v[i++] = x;
    }
    return v;
}

Vector airline_stdr_remainder() {
    const TimeSeries airline =
        read_csv(testutil::data_path("airline.csv"), "passengers");
    return decompose_stdr(airline, 12).remainder;
}

}  // namespace

TEST_CASE("type-7 quantiles") {
    const Vector sample = vec({25.0, 100.0 / 3.0, 50.0, 100.0});
    CHECK(quantile(sample, 0.5) == doctest::Approx(125.0 / 3.0).epsilon(1e-12));
    CHECK(quantile(sample, 0.25) == doctest::Approx(31.25).epsilon(1e-12));
    CHECK(quantile(sample, 0.75) == doctest::Approx(62.5).epsilon(1e-12));
    CHECK(quantile(sample, 0.0) == 25.0);
    CHECK(quantile(sample, 1.0) == 100.0);
}

TEST_CASE("remainder_ratio hand example") {
    const RatioSummary s =
        remainder_ratio(vec({-1, 1, 1, -1}), vec({1, 3, 4, 2}));
    REQUIRE(s.ratios.size() == 4);
    CHECK(s.ratios[0] == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(s.ratios[1] == doctest::Approx(100.0 / 3.0).epsilon(1e-12));
    CHECK(s.ratios[2] == doctest::Approx(25.0).epsilon(1e-12));
    CHECK(s.ratios[3] == doctest::Approx(50.0).epsilon(1e-12));
    CHECK(s.median == doctest::Approx(125.0 / 3.0).epsilon(1e-9));
    CHECK(s.iqr == doctest::Approx(31.25).epsilon(1e-9));
    CHECK(s.excluded == 0);
}

TEST_CASE("remainder_ratio zero handling") {
    const RatioSummary zero =
        remainder_ratio(vec({0, 0, 0}), vec({1, 2, 3}));
    CHECK(zero.median == 0.0);
    CHECK(zero.iqr == 0.0);

    const RatioSummary excl =
        remainder_ratio(vec({1, 1, 1}), vec({0, 2, 4}));
    CHECK(excl.excluded == 1);
    CHECK(excl.ratios.size() == 2);

    CHECK_THROWS_AS(remainder_ratio(vec({1, 1}), vec({0, 0})),
                    AllZeroSeriesError);
}

TEST_CASE("airline STDR ratio matches the published summary") {
    const TimeSeries airline =
        read_csv(testutil::data_path("airline.csv"), "passengers");
    const StdrComponents c = decompose_stdr(airline, 12);
    const RatioSummary s = remainder_ratio(c.remainder, airline.values);
    CHECK(s.median == doctest::Approx(1.78).epsilon(0.06));
    CHECK(s.iqr == doctest::Approx(2.26).epsilon(0.05));
}

TEST_CASE("acf basics") {
    const Vector alt = vec({1, -1, 1, -1});
    const Correlogram r = acf(alt, 1);
    CHECK(r.values[0] == 1.0);
    CHECK(r.values[1] == -0.75);
    CHECK(r.conf_band == doctest::Approx(1.96 / 2.0).epsilon(1e-12));

    CHECK_THROWS_AS(acf(vec({2, 2, 2, 2}), 1), ZeroVarianceError);
    CHECK_THROWS_AS(acf(vec({1, 2}), 2), DataError);
}

TEST_CASE("acf values stay within [-1, 1] and peak at the period") {
    // zero-mean tiled pattern: lag-p correlation dominates non-multiples
    const Index p = 6;
    Vector y(p * 10);
    for (Index t = 0; t < y.size(); ++t) {
        y[t] = std::sin(2.0 * M_PI * static_cast<double>(t % p) / p);
    }
    const Correlogram r = acf(y, 3 * p);
    for (Index k = 0; k <= r.max_lag(); ++k) {
        CHECK(std::abs(r.values[k]) <= 1.0 + 1e-9);
    }
    for (Index k = 1; k <= r.max_lag(); ++k) {
        if (k % p != 0) {
            CHECK(r.values[p] >= r.values[k]);
        }
    }
}

TEST_CASE("pacf lag 1 equals acf lag 1") {
    std::mt19937_64 rng(3);
    const Vector y = testutil::random_series(rng, 4, 20);
    const Correlogram a = acf(y, 10);
    const Correlogram p = pacf(y, 10);
    CHECK(p.values[1] == doctest::Approx(a.values[1]).epsilon(1e-12));
    CHECK(p.values[0] == 1.0);

    const Correlogram alt = pacf(vec({1, -1, 1, -1}), 1);
    CHECK(alt.values[1] == -0.75);
}

TEST_CASE("pacf of a simulated AR(1) process") {
    const TimeSeries ar = gen_test_process(TestProcess::Ar1, 2000, 987, 0.8);
    const Correlogram p = pacf(ar.values, 20);
    CHECK(p.values[1] == doctest::Approx(0.8).epsilon(0.07));
    Index inside = 0;
    for (Index k = 2; k <= 20; ++k) {
        if (std::abs(p.values[k]) <= p.conf_band) {
            ++inside;
        }
    }
    CHECK(inside >= 17);  // >= 90% of lags 2..20
}

TEST_CASE("adf rejects the unit root for white noise") {
    const TimeSeries wn = gen_test_process(TestProcess::WhiteNoise, 500, 42);
    const StationarityVerdict v = adf_test(wn.values);
    CHECK(v.statistic < v.critical_values.at(1));
    CHECK(v.conclusion == Conclusion::StationaryAt1pct);
}

TEST_CASE("adf fails to reject for a random walk") {
    const TimeSeries rw = gen_test_process(TestProcess::RandomWalk, 500, 42);
    const StationarityVerdict v = adf_test(rw.values);
    CHECK(v.statistic > v.critical_values.at(5));
    CHECK(v.conclusion != Conclusion::StationaryAt1pct);
}

TEST_CASE("kpss polarity") {
    const TimeSeries wn = gen_test_process(TestProcess::WhiteNoise, 500, 42);
    const StationarityVerdict stat = kpss_test(wn.values);
    CHECK(stat.statistic < stat.critical_values.at(5));
    CHECK(stat.conclusion == Conclusion::StationaryAt1pct);

    const TimeSeries rw = gen_test_process(TestProcess::RandomWalk, 500, 42);
    const StationarityVerdict nonstat = kpss_test(rw.values);
    CHECK(nonstat.statistic > nonstat.critical_values.at(1));
    CHECK(nonstat.conclusion == Conclusion::NotStationary);
}

TEST_CASE("pp polarity") {
    const TimeSeries wn = gen_test_process(TestProcess::WhiteNoise, 500, 42);
    CHECK(pp_test(wn.values).conclusion == Conclusion::StationaryAt1pct);

    const TimeSeries rw = gen_test_process(TestProcess::RandomWalk, 500, 42);
    const StationarityVerdict v = pp_test(rw.values);
    CHECK(v.statistic > v.critical_values.at(5));
    CHECK(v.conclusion != Conclusion::StationaryAt1pct);
}

TEST_CASE("tests are deterministic, bit for bit") {
    const TimeSeries wn = gen_test_process(TestProcess::WhiteNoise, 300, 5);
    CHECK(adf_test(wn.values).statistic == adf_test(wn.values).statistic);
    CHECK(kpss_test(wn.values).statistic == kpss_test(wn.values).statistic);
    CHECK(pp_test(wn.values).statistic == pp_test(wn.values).statistic);
}

TEST_CASE("series too short") {
    const Vector tiny = Vector::LinSpaced(10, 0.0, 1.0);
    CHECK_THROWS_AS(adf_test(tiny), SeriesTooShortError);
    CHECK_THROWS_AS(kpss_test(tiny), SeriesTooShortError);
    CHECK_THROWS_AS(pp_test(tiny), SeriesTooShortError);
}

TEST_CASE("airline STDR remainder passes all three tests at 1%") {
    const Vector remainder = airline_stdr_remainder();
    const StationarityVerdict adf = adf_test(remainder);
    CHECK(adf.statistic < adf.critical_values.at(1));
    const StationarityVerdict kpss = kpss_test(remainder);
    CHECK(kpss.statistic < kpss.critical_values.at(1));
    const StationarityVerdict pp = pp_test(remainder);
    CHECK(pp.statistic < pp.critical_values.at(1));
}

TEST_CASE("stationarity_report bundles verdicts and ratio") {
    const TimeSeries airline =
        read_csv(testutil::data_path("airline.csv"), "passengers");
    const StdrComponents c = decompose_stdr(airline, 12);
    const DiagnosticsReport report =
        stationarity_report(c.remainder, airline.values);
    CHECK(report.adf.conclusion == Conclusion::StationaryAt1pct);
    CHECK(report.kpss.conclusion == Conclusion::StationaryAt1pct);
    CHECK(report.pp.conclusion == Conclusion::StationaryAt1pct);
    CHECK(report.ratio.median == doctest::Approx(1.78).epsilon(0.06));

    const TimeSeries rw = gen_test_process(TestProcess::RandomWalk, 500, 11);
    const DiagnosticsReport walk =
        stationarity_report(rw.values, (rw.values.array() + 100.0).matrix());
    CHECK(walk.adf.conclusion != Conclusion::StationaryAt1pct);
    CHECK(walk.pp.conclusion != Conclusion::StationaryAt1pct);
    CHECK(walk.kpss.conclusion == Conclusion::NotStationary);
}

TEST_CASE("ratio summary is invariant under the dispersion variant") {
    std::mt19937_64 rng(21);
    const TimeSeries series =
        make_series(testutil::random_positive_series(rng, 7, 10));
    const StdrComponents a = decompose_stdr(series, 7, Dispersion::Diversity);
    const StdrComponents b = decompose_stdr(series, 7, Dispersion::StdDev);
    const RatioSummary ra = remainder_ratio(a.remainder, series.values);
    const RatioSummary rb = remainder_ratio(b.remainder, series.values);
    CHECK(ra.median == doctest::Approx(rb.median).epsilon(1e-12));
    CHECK(ra.iqr == doctest::Approx(rb.iqr).epsilon(1e-12));
}
