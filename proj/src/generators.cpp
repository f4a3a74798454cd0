#include "stdecomp/generators.hpp"

#include <cmath>
#include <random>

namespace stdecomp {

void MackeyGlassConfig::validate() const {
    auto divides = [](double step, double span) {
        const double ratio = span / step;
        return std::abs(ratio - std::round(ratio)) <= 1e-12 * ratio;
    };
    if (!(integration_step > 0.0) || !(sample_every > 0.0) || !(delay > 0.0)) {
        throw DataError("integration_step, sample_every and delay must be positive");
    }
    if (!divides(integration_step, sample_every)) {
        throw DataError("integration_step must divide sample_every");
    }
    if (!divides(integration_step, delay)) {
        throw DataError("integration_step must divide delay");
    }
    if (length < 1) {
        throw DataError("length must be at least 1");
    }
    if (discard < 0) {
        throw DataError("discard must be non-negative");
    }
    for (double v : {a, b, x0}) {
        if (!std::isfinite(v)) {
            throw DataError("Mackey-Glass parameters must be finite");
        }
    }
}

TimeSeries gen_mackey_glass(const MackeyGlassConfig& config) {
    config.validate();
    const double dt = config.integration_step;
    const auto lag = static_cast<Index>(std::round(config.delay / dt));
    const auto per_sample =
        static_cast<Index>(std::round(config.sample_every / dt));
    const Index total_samples = config.discard + config.length;
    const Index steps = total_samples * per_sample;

    // buffer[lag + i] holds x at t = i*dt; the first lag entries are history.
    std::vector<double> buffer(static_cast<std::size_t>(steps + lag + 1), 0.0);
    buffer[static_cast<std::size_t>(lag)] = config.x0;

    const auto deriv = [&](double x, double x_delayed) {
        return config.a * x_delayed / (1.0 + std::pow(x_delayed, 10.0)) -
               config.b * x;
    };
    for (Index i = 0; i < steps; ++i) {
        const double x = buffer[static_cast<std::size_t>(lag + i)];
        // delayed term at t - delay, held fixed across the four stages
        const double xd = buffer[static_cast<std::size_t>(i)];
        const double k1 = deriv(x, xd);
        const double k2 = deriv(x + 0.5 * dt * k1, xd);
        const double k3 = deriv(x + 0.5 * dt * k2, xd);
        const double k4 = deriv(x + dt * k3, xd);
        const double next = x + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!std::isfinite(next) || std::abs(next) > 1e6) {
            throw UnstableIntegrationError(
                "Mackey-Glass integration diverged at t = " +
                std::to_string((i + 1) * dt));
        }
        buffer[static_cast<std::size_t>(lag + i + 1)] = next;
    }

    TimeSeries series;
    series.name = "mackey-glass";
    series.values.resize(config.length);
    for (Index s = 0; s < config.length; ++s) {
        const Index sample = config.discard + s + 1;  // t = sample * sample_every
        series.values[s] =
            buffer[static_cast<std::size_t>(lag + sample * per_sample)];
    }
    return series;
}

namespace {

// Uniform in [0, 1) with the full 53-bit mantissa.
double uniform53(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller; explicit so that seeded output does not depend on the standard
// library's normal_distribution implementation.
class Gaussian {
public:
    explicit Gaussian(std::uint64_t seed) : rng_(seed) {}

    double operator()() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform53(rng_);
        while (u1 <= 0.0) {
            u1 = uniform53(rng_);
        }
        const double u2 = uniform53(rng_);
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace

TimeSeries gen_test_process(TestProcess kind, Index length, std::uint64_t seed,
                            double phi) {
    if (length < 1) {
        throw DataError("length must be at least 1");
    }
    Gaussian gauss(seed);
    TimeSeries series;
    series.values.resize(length);
    switch (kind) {
        case TestProcess::WhiteNoise:
            series.name = "white-noise";
            for (Index t = 0; t < length; ++t) {
                series.values[t] = gauss();
            }
            break;
        case TestProcess::RandomWalk: {
            series.name = "random-walk";
            double level = 0.0;
            for (Index t = 0; t < length; ++t) {
                level += gauss();
                series.values[t] = level;
            }
            break;
        }
        case TestProcess::Ar1: {
            series.name = "ar1";
            double prev = 0.0;
            for (Index t = 0; t < length; ++t) {
                prev = phi * prev + gauss();
                series.values[t] = prev;
            }
            break;
        }
    }
    return series;
}

}  // namespace stdecomp
