#pragma once

#include "stdecomp/series.hpp"

namespace stdecomp {

/// A series reshaped into K seasonal cycles of length n.
/// Row i holds cycle i; global index t = n*i + j (zero-based).
struct SeasonalGrid {
    Matrix cycles;  // K x n

    Index cycle_count() const { return cycles.rows(); }
    Index period() const { return cycles.cols(); }

    /// Flattens the rows back into a series of length K*n.
    Vector flatten() const;
};

struct SplitOptions {
    bool truncate = false;           // drop a trailing partial cycle instead of erroring
    bool allow_single_cycle = false; // permit K == 1 (STD only)
};

/// Reshapes a series into seasonal cycles.
/// Throws LengthNotMultipleError when N is not a multiple of the period and
/// truncation is off, PeriodTooLargeError when fewer than the required number
/// of full cycles fit. Truncation and K == 1 are recorded in `warnings`.
SeasonalGrid split_cycles(const Vector& values, Index period,
                          const SplitOptions& options = {},
                          std::vector<std::string>* warnings = nullptr);

}  // namespace stdecomp
