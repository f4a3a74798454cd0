#pragma once

#include "stdecomp/series.hpp"

namespace stdecomp {

enum class ClassicalMode { Additive, Multiplicative };

/// Classical moving-average decomposition. Masked (edge) positions of trend
/// and remainder hold NaN; they serialize as nulls, never zeros.
struct ClassicalComponents {
    Vector trend;      // NaN at the first/last edge_margin positions
    Vector seasonal;   // tiled constant pattern, fully defined
    Vector remainder;  // NaN where trend is masked
    Vector pattern;    // length n; sums to 0 (additive) or averages to 1
    Index period = 0;
    ClassicalMode mode = ClassicalMode::Additive;
};

/// Half-width of the edge mask: n/2 for even n (2xn MA), (n-1)/2 for odd n.
Index edge_margin(Index period);

/// Centered moving average of order n (2xn with half-weight endpoints for
/// even n). Edge positions are NaN.
Vector moving_average_trend(const Vector& series, Index period);

ClassicalComponents classical_decompose(const Vector& series, Index period,
                                        ClassicalMode mode);

}  // namespace stdecomp
