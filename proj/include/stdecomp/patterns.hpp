#pragma once

#include "stdecomp/decompose.hpp"
#include "stdecomp/grid.hpp"
#include "stdecomp/series.hpp"

#include <map>

namespace stdecomp {

/// One training example: the pattern of cycle i paired with cycle i+tau
/// encoded using cycle i's coding variables (mean and dispersion).
struct PatternPair {
    Vector input;    // s_i, zero-sum unit-norm under Diversity
    Vector output;   // cycle i+tau encoded with cycle i's coding variables
    double coding_mean = 0.0;
    double coding_dispersion = 0.0;
    Index cycle_index = 0;  // i, zero-based
    Index horizon = 1;      // tau
    std::string group_label;  // label of cycle i+tau; empty = global group
};

struct PatternDataset {
    std::vector<PatternPair> pairs;
    Index period = 0;
    Index horizon = 1;
    std::map<std::string, std::vector<std::size_t>> groups;  // label -> pair idx
    std::vector<std::string> warnings;
};

/// Input patterns, one row per cycle: (y_i - mean_i) / dispersion_i.
/// Degenerate (constant) cycles come back as zero rows and are reported.
Matrix encode_input_patterns(const SeasonalGrid& grid,
                             Dispersion variant = Dispersion::Diversity,
                             std::vector<std::string>* warnings = nullptr);

/// Output patterns: row i encodes cycle i+tau with cycle i's coding
/// variables. Has K - tau rows. Throws HorizonTooLarge when tau >= K.
Matrix encode_output_patterns(const SeasonalGrid& grid, Index horizon,
                              Dispersion variant = Dispersion::Diversity);

/// Builds the (input, output) pairs, optionally partitioned by the label of
/// the output cycle. Pairs whose coding cycle is degenerate are excluded.
PatternDataset build_dataset(const TimeSeries& series, Index period,
                             Index horizon, bool group_by_labels = false,
                             Dispersion variant = Dispersion::Diversity,
                             const SplitOptions& options = {});

enum class NeighborWeighting { Uniform, InverseDistance };

struct ForecastResult {
    Vector predicted_pattern;   // s-hat
    Vector predicted_sequence;  // s-hat * coding_dispersion + coding_mean
    std::vector<Index> neighbor_indices;  // cycle indices of the neighbors used
    Index query_cycle = 0;
    std::vector<std::string> warnings;
};

/// k-NN in Euclidean distance over input patterns. Ties break toward the
/// lower cycle index; k larger than the group clamps with a warning.
/// `group` selects the training partition ("" = the global group).
/// The coding variables belong to the query cycle and drive the decoding.
ForecastResult knn_forecast(const PatternDataset& dataset, const Vector& query,
                            double coding_mean, double coding_dispersion,
                            int k,
                            NeighborWeighting weighting = NeighborWeighting::Uniform,
                            const std::string& group = {},
                            Index query_cycle = 0);

/// Elementwise affine decode: pattern * coding_dispersion + coding_mean.
Vector decode_forecast(const Vector& pattern, double coding_mean,
                       double coding_dispersion);

struct ForecastErrors {
    double mape = 0.0;  // percent, zero actuals excluded
    double mae = 0.0;
    Index excluded = 0;
};

/// Row-wise comparison of actual vs predicted sequences.
ForecastErrors evaluate_forecast(const Matrix& actual, const Matrix& predicted);

}  // namespace stdecomp
