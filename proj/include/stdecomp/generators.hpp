#pragma once

#include "stdecomp/series.hpp"

#include <cstdint>

namespace stdecomp {

/// Mackey-Glass delay differential equation
///   dx/dt = a x(t - delay) / (1 + x(t - delay)^10) - b x(t)
/// integrated with fixed-step RK4. The delayed term is read from the stored
/// grid (linear interpolation off-grid) and held fixed across the four
/// stages, matching the widely used benchmark generator. History is
/// x(t) = 0 for t < 0 and x(0) = x0.
struct MackeyGlassConfig {
    double a = 0.2;
    double b = 0.1;
    double delay = 17.0;
    double x0 = 1.2;
    double integration_step = 1.0;
    double sample_every = 1.0;
    Index discard = 100;  // samples dropped before emitting
    Index length = 970;   // samples emitted

    void validate() const;  // step must divide sample_every and delay
};

/// Deterministic: the same config always produces the same series.
/// Throws UnstableIntegrationError if |x| exceeds 1e6.
TimeSeries gen_mackey_glass(const MackeyGlassConfig& config);

enum class TestProcess { WhiteNoise, RandomWalk, Ar1 };

/// Seeded reference processes for diagnostics tests. Gaussian draws come
/// from a Box-Muller transform over mt19937_64, so output is reproducible
/// across platforms. Ar1: x_t = phi * x_{t-1} + eps_t, x_0 = 0.
TimeSeries gen_test_process(TestProcess kind, Index length, std::uint64_t seed,
                            double phi = 0.0);

}  // namespace stdecomp
