// stdecomp: seasonal-trend-dispersion decomposition, diagnostics and
// pattern-based forecasting from the command line.

#include "stdecomp/classical.hpp"
#include "stdecomp/decompose.hpp"
#include "stdecomp/diagnostics.hpp"
#include "stdecomp/generators.hpp"
#include "stdecomp/io.hpp"
#include "stdecomp/patterns.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace stdecomp;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

Dispersion parse_variant(const std::string& name) {
    if (name == "diversity") return Dispersion::Diversity;
    if (name == "stddev") return Dispersion::StdDev;
    if (name == "appendix") return Dispersion::Appendix;
    throw CLI::ValidationError("--variant",
                               "expected diversity, stddev or appendix");
}

void emit(const std::string& path, const std::string& contents) {
    if (path.empty() || path == "-") {
        std::cout << contents;
    } else {
        write_file(path, contents);
    }
}

struct DecomposeArgs {
    std::string input;
    std::string value_column = "value";
    std::string label_column;
    Index period = 0;
    bool stdr = false;
    std::string variant = "diversity";
    bool truncate = false;
    std::vector<std::string> recurse;
    Index inner_period = 0;
    std::string output;
    std::string format = "csv";
};

// Applies STD/STDR to the per-cycle value sequence of a step component
// (one value per cycle), used for multi-seasonal series whose trend or
// dispersion still carries a longer seasonality.
std::string recurse_component(const Vector& stepwise, Index outer_period,
                              Index inner_period, bool stdr,
                              Dispersion variant, const std::string& format) {
    const Index cycles = stepwise.size() / outer_period;
    Vector per_cycle(cycles);
    for (Index i = 0; i < cycles; ++i) {
        per_cycle[i] = stepwise[i * outer_period];
    }
    TimeSeries inner = make_series(per_cycle);
    SplitOptions opts;
    opts.truncate = true;
    std::ostringstream out;
    if (stdr) {
        const StdrComponents c =
            decompose_stdr(inner, inner_period, variant, opts);
        const Vector y = inner.values.head(c.trend.size());
        if (format == "json") {
            write_components_json(out, y, c);
        } else {
            write_components(out, y, c);
        }
    } else {
        const StdComponents c =
            decompose_std(inner, inner_period, variant, opts);
        const Vector y = inner.values.head(c.trend.size());
        if (format == "json") {
            write_components_json(out, y, c);
        } else {
            write_components(out, y, c);
        }
    }
    return out.str();
}

int run_decompose(const DecomposeArgs& args) {
    const TimeSeries series =
        read_csv(args.input, args.value_column, args.label_column);
    const Dispersion variant = parse_variant(args.variant);
    SplitOptions opts;
    opts.truncate = args.truncate;

    std::ostringstream out;
    Vector trend;
    Vector dispersion;
    if (args.stdr) {
        const StdrComponents c =
            decompose_stdr(series, args.period, variant, opts);
        const Vector y = series.values.head(c.trend.size());
        if (args.format == "json") {
            write_components_json(out, y, c);
        } else {
            write_components(out, y, c);
        }
        trend = c.trend;
        dispersion = c.dispersion;
    } else {
        const StdComponents c =
            decompose_std(series, args.period, variant, opts);
        const Vector y = series.values.head(c.trend.size());
        if (args.format == "json") {
            write_components_json(out, y, c);
        } else {
            write_components(out, y, c);
        }
        trend = c.trend;
        dispersion = c.dispersion;
    }
    emit(args.output, out.str());

    for (const std::string& target : args.recurse) {
        if (target != "trend" && target != "dispersion") {
            throw CLI::ValidationError("--recurse",
                                       "expected trend and/or dispersion");
        }
        const Vector& component = target == "trend" ? trend : dispersion;
        const std::string inner = recurse_component(
            component, args.period, args.inner_period, args.stdr, variant,
            args.format);
        if (args.output.empty() || args.output == "-") {
            std::cout << inner;
        } else {
            write_file(args.output + "." + target + "." + args.format, inner);
        }
    }
    return kExitOk;
}

int run_diagnose(const std::string& input, const std::string& value_column,
                 Index period, const std::string& variant_name, bool truncate,
                 const std::string& output) {
    const TimeSeries series = read_csv(input, value_column);
    const Dispersion variant = parse_variant(variant_name);
    SplitOptions opts;
    opts.truncate = truncate;
    const StdrComponents c = decompose_stdr(series, period, variant, opts);
    const Vector y = series.values.head(c.remainder.size());
    const DiagnosticsReport report = stationarity_report(c.remainder, y);
    std::ostringstream out;
    write_diagnostics_json(out, report, period, variant);
    emit(output, out.str());
    return kExitOk;
}

int run_forecast(const std::string& input, const std::string& value_column,
                 const std::string& label_column, Index period, Index horizon,
                 int k, Index holdout, const std::string& weighting_name,
                 const std::string& variant_name, bool truncate,
                 const std::string& output) {
    TimeSeries series = read_csv(input, value_column, label_column);
    const Dispersion variant = parse_variant(variant_name);
    const NeighborWeighting weighting =
        weighting_name == "inverse-distance" ? NeighborWeighting::InverseDistance
                                             : NeighborWeighting::Uniform;
    SplitOptions opts;
    opts.truncate = truncate;
    std::vector<std::string> warnings;
    const SeasonalGrid grid =
        split_cycles(series.values, period, opts, &warnings);
    const Index cycles = grid.cycle_count();
    if (holdout < 1 || holdout + horizon + 1 > cycles) {
        throw DataError("holdout of " + std::to_string(holdout) +
                        " cycles does not fit a series with " +
                        std::to_string(cycles) + " cycles");
    }

    // Train on everything before the held-out tail.
    const Index train_cycles = cycles - holdout;
    TimeSeries train;
    train.values = grid.flatten().head(train_cycles * period);
    if (series.has_labels()) {
        train.labels.assign(series.labels.begin(),
                            series.labels.begin() + train_cycles * period);
    }
    const bool grouped = series.has_labels();
    const PatternDataset dataset =
        build_dataset(train, period, horizon, grouped, variant);

    const Vector means = cycle_mean(grid);
    const Vector divs = cycle_diversity(grid, variant);
    const Matrix inputs = encode_input_patterns(grid, variant, nullptr);

    json forecasts = json::array();
    Matrix actual(holdout, period);
    Matrix predicted(holdout, period);
    for (Index h = 0; h < holdout; ++h) {
        const Index target = train_cycles + h;  // cycle being forecast
        const Index query = target - horizon;
        if (divs[query] <= 0.0) {
            throw DataError("query cycle " + std::to_string(query + 1) +
                            " has zero dispersion");
        }
        std::string group;
        if (grouped) {
            group = series.labels[static_cast<std::size_t>(target * period)];
        }
        const ForecastResult result = knn_forecast(
            dataset, inputs.row(query).transpose(), means[query], divs[query],
            k, weighting, group, query);
        actual.row(h) = grid.cycles.row(target);
        predicted.row(h) = result.predicted_sequence.transpose();
        forecasts.push_back(
            {{"cycle", target + 1},
             {"group", group},
             {"neighbors", result.neighbor_indices},
             {"predicted",
              std::vector<double>(result.predicted_sequence.data(),
                                  result.predicted_sequence.data() + period)},
             {"actual", std::vector<double>(actual.row(h).data(),
                                            actual.row(h).data() + period)}});
    }
    const ForecastErrors errors = evaluate_forecast(actual, predicted);

    json doc;
    doc["meta"] = {{"period", period},     {"horizon", horizon},
                   {"k", k},               {"holdout", holdout},
                   {"weighting", weighting_name},
                   {"variant", to_string(variant)},
                   {"warnings", warnings}};
    doc["forecast"] = {{"sequences", forecasts},
                       {"mape", errors.mape},
                       {"mae", errors.mae},
                       {"excluded", errors.excluded}};
    emit(output, doc.dump(2) + "\n");
    return kExitOk;
}

int run_baseline(const std::string& input, const std::string& value_column,
                 Index period, const std::string& mode_name,
                 const std::string& output, const std::string& format) {
    const TimeSeries series = read_csv(input, value_column);
    const ClassicalMode mode = mode_name == "multiplicative"
                                   ? ClassicalMode::Multiplicative
                                   : ClassicalMode::Additive;
    const ClassicalComponents c =
        classical_decompose(series.values, period, mode);
    std::ostringstream out;
    if (format == "json") {
        write_classical_json(out, series.values, c);
    } else {
        write_classical(out, series.values, c);
    }
    emit(output, out.str());
    return kExitOk;
}

std::string series_csv(const TimeSeries& series) {
    std::ostringstream out;
    out << "t,value\n";
    for (Index t = 0; t < series.size(); ++t) {
        out << (t + 1) << ',' << format_double(series.values[t]) << '\n';
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seasonal-trend-dispersion decomposition toolkit"};
    app.require_subcommand(1);

    // decompose
    DecomposeArgs dec;
    auto* decompose = app.add_subcommand("decompose", "STD/STDR decomposition");
    decompose->add_option("--input", dec.input, "input CSV")->required();
    decompose->add_option("--value-column", dec.value_column, "value column name");
    decompose->add_option("--label-column", dec.label_column, "label column name");
    decompose->add_option("--period", dec.period, "seasonal period n")
        ->required()->check(CLI::Range(Index{2}, Index{1} << 30));
    decompose->add_flag("--stdr", dec.stdr, "include the remainder component");
    decompose->add_option("--variant", dec.variant,
                          "diversity | stddev | appendix");
    decompose->add_flag("--truncate", dec.truncate,
                        "drop a trailing partial cycle");
    decompose->add_option("--recurse", dec.recurse,
                          "re-decompose trend and/or dispersion")
        ->delimiter(',');
    decompose->add_option("--inner-period", dec.inner_period,
                          "period for --recurse");
    decompose->add_option("--output", dec.output, "output file (default stdout)");
    decompose->add_option("--format", dec.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));

    // diagnose
    std::string dg_input, dg_value = "value", dg_variant = "diversity",
                dg_output;
    Index dg_period = 0;
    bool dg_truncate = false;
    auto* diagnose =
        app.add_subcommand("diagnose", "stationarity report for the STDR remainder");
    diagnose->add_option("--input", dg_input, "input CSV")->required();
    diagnose->add_option("--value-column", dg_value, "value column name");
    diagnose->add_option("--period", dg_period, "seasonal period n")->required();
    diagnose->add_option("--variant", dg_variant, "dispersion variant");
    diagnose->add_flag("--truncate", dg_truncate, "drop a trailing partial cycle");
    diagnose->add_option("--output", dg_output, "output file (default stdout)");

    // forecast
    std::string fc_input, fc_value = "value", fc_label, fc_weighting = "uniform",
                fc_variant = "diversity", fc_output;
    Index fc_period = 0, fc_horizon = 1, fc_holdout = 2;
    int fc_k = 3;
    bool fc_truncate = false;
    auto* forecast =
        app.add_subcommand("forecast", "k-NN pattern forecast with MAPE");
    forecast->add_option("--input", fc_input, "input CSV")->required();
    forecast->add_option("--value-column", fc_value, "value column name");
    forecast->add_option("--label-column", fc_label,
                         "cycle-position label column (enables grouping)");
    forecast->add_option("--period", fc_period, "seasonal period n")->required();
    forecast->add_option("--horizon", fc_horizon, "forecast horizon tau");
    forecast->add_option("-k,--neighbors", fc_k, "neighbor count");
    forecast->add_option("--holdout", fc_holdout, "cycles held out for scoring");
    forecast->add_option("--weighting", fc_weighting,
                         "uniform | inverse-distance")
        ->check(CLI::IsMember({"uniform", "inverse-distance"}));
    forecast->add_option("--variant", fc_variant, "dispersion variant");
    forecast->add_flag("--truncate", fc_truncate, "drop a trailing partial cycle");
    forecast->add_option("--output", fc_output, "output file (default stdout)");

    // generate
    auto* generate = app.add_subcommand("generate", "synthetic series");
    generate->require_subcommand(1);
    MackeyGlassConfig mg;
    std::string gen_output;
    auto* mgc = generate->add_subcommand("mackey-glass",
                                         "chaotic benchmark series");
    mgc->add_option("--a", mg.a, "feedback gain");
    mgc->add_option("--b", mg.b, "decay rate");
    mgc->add_option("--delay", mg.delay, "feedback delay");
    mgc->add_option("--x0", mg.x0, "initial value");
    mgc->add_option("--step", mg.integration_step, "integration step");
    mgc->add_option("--sample-every", mg.sample_every, "sampling interval");
    mgc->add_option("--discard", mg.discard, "samples discarded up front");
    mgc->add_option("--length", mg.length, "samples emitted");
    mgc->add_option("--output", gen_output, "output file (default stdout)");

    Index tp_length = 500;
    std::uint64_t tp_seed = 1;
    double tp_phi = 0.8;
    for (const char* kind : {"white-noise", "random-walk", "ar1"}) {
        auto* sub = generate->add_subcommand(kind, "seeded test process");
        sub->add_option("--length", tp_length, "series length");
        sub->add_option("--seed", tp_seed, "RNG seed");
        if (std::string(kind) == "ar1") {
            sub->add_option("--phi", tp_phi, "AR(1) coefficient");
        }
        sub->add_option("--output", gen_output, "output file (default stdout)");
    }

    // baseline
    std::string bl_input, bl_value = "value", bl_mode = "additive",
                bl_output, bl_format = "csv";
    Index bl_period = 0;
    auto* baseline =
        app.add_subcommand("baseline", "classical moving-average decomposition");
    baseline->add_option("--input", bl_input, "input CSV")->required();
    baseline->add_option("--value-column", bl_value, "value column name");
    baseline->add_option("--period", bl_period, "seasonal period n")->required();
    baseline->add_option("--mode", bl_mode, "additive | multiplicative")
        ->check(CLI::IsMember({"additive", "multiplicative"}));
    baseline->add_option("--output", bl_output, "output file (default stdout)");
    baseline->add_option("--format", bl_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*decompose) {
            if (!dec.recurse.empty() && dec.inner_period < 2) {
                std::cerr << "--recurse requires --inner-period >= 2\n";
                return kExitUsage;
            }
            return run_decompose(dec);
        }
        if (*diagnose) {
            return run_diagnose(dg_input, dg_value, dg_period, dg_variant,
                                dg_truncate, dg_output);
        }
        if (*forecast) {
            return run_forecast(fc_input, fc_value, fc_label, fc_period,
                                fc_horizon, fc_k, fc_holdout, fc_weighting,
                                fc_variant, fc_truncate, fc_output);
        }
        if (*generate) {
            TimeSeries series;
            if (generate->got_subcommand("mackey-glass")) {
                series = gen_mackey_glass(mg);
            } else if (generate->got_subcommand("white-noise")) {
                series = gen_test_process(TestProcess::WhiteNoise, tp_length,
                                          tp_seed);
            } else if (generate->got_subcommand("random-walk")) {
                series = gen_test_process(TestProcess::RandomWalk, tp_length,
                                          tp_seed);
            } else {
                series = gen_test_process(TestProcess::Ar1, tp_length, tp_seed,
                                          tp_phi);
            }
            emit(gen_output, series_csv(series));
            return kExitOk;
        }
        if (*baseline) {
            return run_baseline(bl_input, bl_value, bl_period, bl_mode,
                                bl_output, bl_format);
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
