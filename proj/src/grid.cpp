#include "stdecomp/grid.hpp"

namespace stdecomp {

Vector SeasonalGrid::flatten() const {
    const Index k = cycle_count();
    const Index n = period();
    Vector out(k * n);
    for (Index i = 0; i < k; ++i) {
        out.segment(i * n, n) = cycles.row(i).transpose();
    }
    return out;
}

SeasonalGrid split_cycles(const Vector& values, Index period,
                          const SplitOptions& options,
                          std::vector<std::string>* warnings) {
    if (period < 2) {
        throw DataError("period must be at least 2, got " +
                        std::to_string(period));
    }
    const Index n = values.size();
    Index usable = n;
    if (n % period != 0) {
        if (!options.truncate) {
            throw LengthNotMultipleError(
                "series length " + std::to_string(n) +
                " is not a multiple of the period " + std::to_string(period) +
                " (pass truncate to drop the trailing partial cycle)");
        }
        usable = n - n % period;
        if (warnings != nullptr) {
            warnings->push_back("dropped trailing " +
                                std::to_string(n - usable) +
                                " observations to fit " +
                                std::to_string(usable / period) +
                                " full cycles");
        }
    }
    const Index k = usable / period;
    const Index min_cycles = options.allow_single_cycle ? 1 : 2;
    if (k < min_cycles) {
        throw PeriodTooLargeError("period " + std::to_string(period) +
                                  " leaves only " + std::to_string(k) +
                                  " full cycle(s) in a series of length " +
                                  std::to_string(n));
    }
    if (k == 1 && warnings != nullptr) {
        warnings->push_back("single seasonal cycle: trend and dispersion are "
                            "global constants");
    }
    SeasonalGrid grid;
    grid.cycles.resize(k, period);
    for (Index i = 0; i < k; ++i) {
        grid.cycles.row(i) = values.segment(i * period, period).transpose();
    }
    return grid;
}

}  // namespace stdecomp
