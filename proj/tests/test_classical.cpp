#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stdecomp/classical.hpp"

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

}  // namespace

TEST_CASE("edge_margin") {
    CHECK(edge_margin(2) == 1);
    CHECK(edge_margin(12) == 6);
    CHECK(edge_margin(3) == 1);
    CHECK(edge_margin(7) == 3);
}

TEST_CASE("2x2 moving average") {
    const Vector trend = moving_average_trend(vec({1, 3, 1, 3, 1, 3}), 2);
    CHECK(std::isnan(trend[0]));
    CHECK(std::isnan(trend[5]));
    for (Index t = 1; t < 5; ++t) {
        CHECK(trend[t] == doctest::Approx(2.0).epsilon(1e-12));
    }
}

TEST_CASE("moving average of a constant series is that constant") {
    const Vector trend = moving_average_trend(Vector::Constant(20, 7.5), 4);
    for (Index t = 2; t < 18; ++t) {
        CHECK(trend[t] == doctest::Approx(7.5).epsilon(1e-12));
    }
}

TEST_CASE("centered MA preserves a linear ramp") {
    const Vector ramp = Vector::LinSpaced(21, 0.0, 20.0);
    const Vector trend = moving_average_trend(ramp, 5);
    for (Index t = 2; t < 19; ++t) {
        CHECK(trend[t] == doctest::Approx(ramp[t]).epsilon(1e-12));
    }
    CHECK(std::isnan(trend[1]));
    CHECK(std::isnan(trend[19]));
}

TEST_CASE("moving average rejects short series") {
    CHECK_THROWS_AS(moving_average_trend(vec({1, 2, 3, 4}), 4),
                    SeriesTooShortError);
}

TEST_CASE("additive decomposition hand example") {
    const ClassicalComponents c =
        classical_decompose(vec({1, 3, 1, 3, 1, 3}), 2, ClassicalMode::Additive);
    CHECK(c.pattern[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(c.pattern[1] == doctest::Approx(1.0).epsilon(1e-12));
    for (Index t = 1; t < 5; ++t) {
        CHECK(c.remainder[t] == doctest::Approx(0.0).epsilon(1e-12));
    }
    CHECK(std::isnan(c.remainder[0]));
    CHECK(std::isnan(c.remainder[5]));
}

TEST_CASE("multiplicative decomposition of a constant series") {
    const ClassicalComponents c = classical_decompose(
        Vector::Constant(24, 5.0), 4, ClassicalMode::Multiplicative);
    const Index m = edge_margin(4);
    for (Index t = 0; t < 24; ++t) {
        CHECK(c.seasonal[t] == doctest::Approx(1.0).epsilon(1e-12));
        if (t >= m && t < 24 - m) {
            CHECK(c.remainder[t] == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("multiplicative mode rejects non-positive values") {
    CHECK_THROWS_AS(classical_decompose(vec({1, 2, 0, 2, 1, 2}), 2,
                                        ClassicalMode::Multiplicative),
                    NonPositiveSeriesError);
    CHECK_THROWS_AS(classical_decompose(vec({1, 2, -3, 2, 1, 2}), 2,
                                        ClassicalMode::Multiplicative),
                    NonPositiveSeriesError);
}

TEST_CASE("identity closure and mask width on random series") {
    std::mt19937_64 rng(314);
    for (int rep = 0; rep < 100; ++rep) {
        const Index n = 2 + static_cast<Index>(rng() % 11);
        const Index k = 3 + static_cast<Index>(rng() % 6);
        const Vector y = testutil::random_positive_series(rng, n, k);
        const ClassicalMode mode = rep % 2 == 0 ? ClassicalMode::Additive
                                                : ClassicalMode::Multiplicative;
        const ClassicalComponents c = classical_decompose(y, n, mode);
        const Index m = edge_margin(n);
        for (Index t = 0; t < y.size(); ++t) {
            const bool masked = t < m || t >= y.size() - m;
            CHECK(std::isnan(c.trend[t]) == masked);
            CHECK(std::isnan(c.remainder[t]) == masked);
            if (masked) {
                continue;
            }
            const double recon =
                mode == ClassicalMode::Additive
                    ? c.trend[t] + c.seasonal[t] + c.remainder[t]
                    : c.trend[t] * c.seasonal[t] * c.remainder[t];
            CHECK(std::abs(recon - y[t]) <= 1e-9 * std::max(1.0, std::abs(y[t])));
        }
        // pattern normalization
        if (mode == ClassicalMode::Additive) {
            CHECK(std::abs(c.pattern.sum()) <= 1e-9);
        } else {
            CHECK(std::abs(c.pattern.mean() - 1.0) <= 1e-9);
        }
        // the tiled seasonal repeats the pattern exactly
        for (Index t = 0; t < y.size(); ++t) {
            CHECK(c.seasonal[t] == c.pattern[t % n]);
        }
    }
}
