#include "stdecomp/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace stdecomp {

Matrix encode_input_patterns(const SeasonalGrid& grid, Dispersion variant,
                             std::vector<std::string>* warnings) {
    const Index k = grid.cycle_count();
    const Vector means = cycle_mean(grid);
    const Vector divs = cycle_diversity(grid, variant);
    Matrix patterns(k, grid.period());
    for (Index i = 0; i < k; ++i) {
        if (divs[i] > 0.0) {
            patterns.row(i) = (grid.cycles.row(i).array() - means[i]) / divs[i];
        } else {
            patterns.row(i).setZero();
            if (warnings != nullptr) {
                warnings->push_back("cycle " + std::to_string(i + 1) +
                                    " is constant; its pattern is zeroed");
            }
        }
    }
    return patterns;
}

Matrix encode_output_patterns(const SeasonalGrid& grid, Index horizon,
                              Dispersion variant) {
    const Index k = grid.cycle_count();
    if (horizon < 1) {
        throw DataError("horizon must be at least 1");
    }
    if (horizon >= k) {
        throw HorizonTooLargeError("horizon " + std::to_string(horizon) +
                                   " leaves no target cycle (K = " +
                                   std::to_string(k) + ")");
    }
    const Vector means = cycle_mean(grid);
    const Vector divs = cycle_diversity(grid, variant);
    Matrix patterns(k - horizon, grid.period());
    for (Index i = 0; i + horizon < k; ++i) {
        if (divs[i] <= 0.0) {
            // degenerate coding cycle; caller decides (build_dataset drops it)
            patterns.row(i).setConstant(std::numeric_limits<double>::quiet_NaN());
            continue;
        }
        patterns.row(i) =
            (grid.cycles.row(i + horizon).array() - means[i]) / divs[i];
    }
    return patterns;
}

namespace {

// Labels must be constant within a cycle; returns one label per cycle.
std::vector<std::string> cycle_labels(const TimeSeries& series, Index period,
                                      Index cycles) {
    std::vector<std::string> out;
    out.reserve(cycles);
    for (Index i = 0; i < cycles; ++i) {
        const std::string& first = series.labels[i * period];
        for (Index j = 1; j < period; ++j) {
            if (series.labels[i * period + j] != first) {
                throw InconsistentLabelsError(
                    "cycle " + std::to_string(i + 1) +
                    " spans labels '" + first + "' and '" +
                    series.labels[i * period + j] + "'");
            }
        }
        out.push_back(first);
    }
    return out;
}

}  // namespace

PatternDataset build_dataset(const TimeSeries& series, Index period,
                             Index horizon, bool group_by_labels,
                             Dispersion variant, const SplitOptions& options) {
    series.validate();
    if (group_by_labels && !series.has_labels()) {
        throw DataError("grouping requested but the series has no labels");
    }
    PatternDataset dataset;
    dataset.period = period;
    dataset.horizon = horizon;
    const SeasonalGrid grid =
        split_cycles(series.values, period, options, &dataset.warnings);
    const Index k = grid.cycle_count();
    if (horizon >= k) {
        throw HorizonTooLargeError("horizon " + std::to_string(horizon) +
                                   " leaves no target cycle (K = " +
                                   std::to_string(k) + ")");
    }
    const Vector means = cycle_mean(grid);
    const Vector divs = cycle_diversity(grid, variant);
    const Matrix inputs = encode_input_patterns(grid, variant, nullptr);

    std::vector<std::string> labels;
    if (group_by_labels) {
        labels = cycle_labels(series, period, k);
    }
    for (Index i = 0; i + horizon < k; ++i) {
        if (divs[i] <= 0.0) {
            dataset.warnings.push_back(
                "cycle " + std::to_string(i + 1) +
                " has zero dispersion; pair (" + std::to_string(i + 1) + ", " +
                std::to_string(i + horizon + 1) + ") excluded");
            continue;
        }
        PatternPair pair;
        pair.input = inputs.row(i).transpose();
        pair.output =
            (grid.cycles.row(i + horizon).array() - means[i]).transpose() /
            divs[i];
        pair.coding_mean = means[i];
        pair.coding_dispersion = divs[i];
        pair.cycle_index = i;
        pair.horizon = horizon;
        if (group_by_labels) {
            pair.group_label = labels[i + horizon];
        }
        dataset.groups[pair.group_label].push_back(dataset.pairs.size());
        dataset.pairs.push_back(std::move(pair));
    }
    return dataset;
}

ForecastResult knn_forecast(const PatternDataset& dataset, const Vector& query,
                            double coding_mean, double coding_dispersion,
                            int k, NeighborWeighting weighting,
                            const std::string& group, Index query_cycle) {
    if (k < 1) {
        throw DataError("k must be at least 1");
    }
    const auto it = dataset.groups.find(group);
    if (it == dataset.groups.end() || it->second.empty()) {
        throw EmptyGroupError("no training pairs in group '" + group + "'");
    }
    const std::vector<std::size_t>& members = it->second;

    ForecastResult result;
    result.query_cycle = query_cycle;
    if (static_cast<std::size_t>(k) > members.size()) {
        result.warnings.push_back(
            "k = " + std::to_string(k) + " exceeds group size " +
            std::to_string(members.size()) + "; clamped");
        k = static_cast<int>(members.size());
    }

    // Sort by (distance, cycle index) so ties resolve deterministically.
    std::vector<std::pair<double, std::size_t>> order;
    order.reserve(members.size());
    for (std::size_t idx : members) {
        const double dist = (dataset.pairs[idx].input - query).norm();
        order.emplace_back(dist, idx);
    }
    std::sort(order.begin(), order.end(),
              [&](const auto& a, const auto& b) {
                  if (a.first != b.first) return a.first < b.first;
                  return dataset.pairs[a.second].cycle_index <
                         dataset.pairs[b.second].cycle_index;
              });

    Vector pattern = Vector::Zero(dataset.period);
    double total_weight = 0.0;
    constexpr double kEps = 1e-12;
    for (int j = 0; j < k; ++j) {
        const auto& [dist, idx] = order[static_cast<std::size_t>(j)];
        const double w = weighting == NeighborWeighting::Uniform
                             ? 1.0
                             : 1.0 / (dist + kEps);
        pattern += w * dataset.pairs[idx].output;
        total_weight += w;
        result.neighbor_indices.push_back(dataset.pairs[idx].cycle_index);
    }
    result.predicted_pattern = pattern / total_weight;
    result.predicted_sequence =
        decode_forecast(result.predicted_pattern, coding_mean,
                        coding_dispersion);
    return result;
}

Vector decode_forecast(const Vector& pattern, double coding_mean,
                       double coding_dispersion) {
    if (coding_dispersion <= 0.0) {
        throw DataError("coding dispersion must be positive");
    }
    return pattern.array() * coding_dispersion + coding_mean;
}

ForecastErrors evaluate_forecast(const Matrix& actual,
                                 const Matrix& predicted) {
    if (actual.rows() != predicted.rows() ||
        actual.cols() != predicted.cols()) {
        throw DataError("actual and predicted shapes differ");
    }
    ForecastErrors errors;
    double ape_sum = 0.0;
    Index ape_count = 0;
    double ae_sum = 0.0;
    for (Index i = 0; i < actual.rows(); ++i) {
        for (Index j = 0; j < actual.cols(); ++j) {
            const double a = actual(i, j);
            const double p = predicted(i, j);
            ae_sum += std::abs(a - p);
            if (a == 0.0) {
                ++errors.excluded;
            } else {
                ape_sum += std::abs((a - p) / a) * 100.0;
                ++ape_count;
            }
        }
    }
    if (ape_count == 0) {
        throw AllZeroActualsError("every actual value is zero; MAPE undefined");
    }
    errors.mape = ape_sum / static_cast<double>(ape_count);
    errors.mae = ae_sum / static_cast<double>(actual.size());
    return errors;
}

}  // namespace stdecomp
