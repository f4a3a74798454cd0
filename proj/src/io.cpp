#include "stdecomp/io.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace stdecomp {

using nlohmann::json;

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

std::string strip(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) {
        s.pop_back();
    }
    std::size_t i = 0;
    while (i < s.size() && s[i] == ' ') {
        ++i;
    }
    return s.substr(i);
}

json vector_to_json(const Vector& v) {
    json arr = json::array();
    for (Index i = 0; i < v.size(); ++i) {
        if (std::isnan(v[i])) {
            arr.push_back(nullptr);  // masked values are nulls, never zeros
        } else {
            arr.push_back(v[i]);
        }
    }
    return arr;
}

json meta_block(Index period, Dispersion variant, const char* mode,
                const std::vector<std::string>& warnings) {
    return json{{"period", period},
                {"variant", to_string(variant)},
                {"mode", mode},
                {"warnings", warnings}};
}

void write_table(std::ostream& out, const std::vector<const Vector*>& columns,
                 const std::string& header) {
    out << header << '\n';
    const Index n = columns.front()->size();
    for (Index t = 0; t < n; ++t) {
        out << (t + 1);
        for (const Vector* col : columns) {
            out << ',';
            const double v = (*col)[t];
            if (!std::isnan(v)) {
                out << format_double(v);
            }
        }
        out << '\n';
    }
}

}  // namespace

TimeSeries read_csv(const std::string& path, const std::string& value_column,
                    const std::string& label_column) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw EmptyFileError(path + " is empty");
    }
    const std::vector<std::string> header = split_line(strip(line));
    Index value_idx = -1;
    Index label_idx = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (strip(header[i]) == value_column) {
            value_idx = static_cast<Index>(i);
        }
        if (!label_column.empty() && strip(header[i]) == label_column) {
            label_idx = static_cast<Index>(i);
        }
    }
    if (value_idx < 0) {
        throw ParseError("column '" + value_column + "' not found in " + path);
    }
    if (!label_column.empty() && label_idx < 0) {
        throw ParseError("column '" + label_column + "' not found in " + path);
    }

    std::vector<double> values;
    std::vector<std::string> labels;
    Index row = 1;  // header was row 1
    while (std::getline(in, line)) {
        ++row;
        const std::string stripped = strip(line);
        if (stripped.empty()) {
            continue;
        }
        const std::vector<std::string> cells = split_line(stripped);
        if (static_cast<Index>(cells.size()) <= value_idx) {
            throw ParseError("row " + std::to_string(row) + " of " + path +
                             " has too few columns");
        }
        const std::string cell = strip(cells[static_cast<std::size_t>(value_idx)]);
        if (cell.empty()) {
            throw MissingValueError("missing value at row " +
                                    std::to_string(row) + ", column '" +
                                    value_column + "' of " + path);
        }
        char* end = nullptr;
        const double v = std::strtod(cell.c_str(), &end);
        if (end == cell.c_str() || *end != '\0' || !std::isfinite(v)) {
            throw ParseError("cannot parse '" + cell + "' at row " +
                             std::to_string(row) + ", column '" + value_column +
                             "' of " + path);
        }
        values.push_back(v);
        if (label_idx >= 0) {
            labels.push_back(strip(cells[static_cast<std::size_t>(label_idx)]));
        }
    }
    if (values.empty()) {
        throw EmptyFileError(path + " has no data rows");
    }
    TimeSeries series;
    series.values = Eigen::Map<const Vector>(values.data(),
                                             static_cast<Index>(values.size()));
    series.labels = std::move(labels);
    series.name = value_column;
    series.validate();
    return series;
}

void write_components(std::ostream& out, const Vector& series,
                      const StdComponents& components) {
    write_table(out,
                {&series, &components.trend, &components.dispersion,
                 &components.seasonal},
                "t,y,trend,dispersion,seasonal");
}

void write_components(std::ostream& out, const Vector& series,
                      const StdrComponents& components) {
    write_table(out,
                {&series, &components.trend, &components.dispersion,
                 &components.seasonal, &components.seasonal_avg,
                 &components.remainder},
                "t,y,trend,dispersion,seasonal,seasonal_avg,remainder");
}

void write_classical(std::ostream& out, const Vector& series,
                     const ClassicalComponents& components) {
    write_table(out,
                {&series, &components.trend, &components.seasonal,
                 &components.remainder},
                "t,y,trend,seasonal,remainder");
}

void write_components_json(std::ostream& out, const Vector& series,
                           const StdComponents& c) {
    json doc;
    doc["meta"] = meta_block(c.period, c.variant, "std", c.warnings);
    doc["components"] = {{"y", vector_to_json(series)},
                         {"trend", vector_to_json(c.trend)},
                         {"dispersion", vector_to_json(c.dispersion)},
                         {"seasonal", vector_to_json(c.seasonal)}};
    out << doc.dump(2) << '\n';
}

void write_components_json(std::ostream& out, const Vector& series,
                           const StdrComponents& c) {
    json doc;
    doc["meta"] = meta_block(c.period, c.variant, "stdr", c.warnings);
    doc["components"] = {{"y", vector_to_json(series)},
                         {"trend", vector_to_json(c.trend)},
                         {"dispersion", vector_to_json(c.dispersion)},
                         {"seasonal", vector_to_json(c.seasonal)},
                         {"seasonal_avg", vector_to_json(c.seasonal_avg)},
                         {"remainder", vector_to_json(c.remainder)},
                         {"avg_pattern", vector_to_json(c.avg_pattern)}};
    out << doc.dump(2) << '\n';
}

void write_classical_json(std::ostream& out, const Vector& series,
                          const ClassicalComponents& c) {
    json doc;
    doc["meta"] = {
        {"period", c.period},
        {"mode",
         c.mode == ClassicalMode::Additive ? "additive" : "multiplicative"},
        {"edge_margin", edge_margin(c.period)}};
    doc["components"] = {{"y", vector_to_json(series)},
                         {"trend", vector_to_json(c.trend)},
                         {"seasonal", vector_to_json(c.seasonal)},
                         {"remainder", vector_to_json(c.remainder)},
                         {"pattern", vector_to_json(c.pattern)}};
    out << doc.dump(2) << '\n';
}

namespace {

json verdict_to_json(const StationarityVerdict& v) {
    json cv;
    for (const auto& [pct, value] : v.critical_values) {
        cv[std::to_string(pct) + "pct"] = value;
    }
    return json{{"test", to_string(v.test)},
                {"statistic", v.statistic},
                {"critical_values", cv},
                {"conclusion", to_string(v.conclusion)},
                {"spec", v.spec == RegressionSpec::Constant
                             ? "constant"
                             : "constant+trend"},
                {"lags_or_bandwidth", v.lags_or_bandwidth}};
}

}  // namespace

void write_diagnostics_json(std::ostream& out, const DiagnosticsReport& report,
                            Index period, Dispersion variant) {
    json doc;
    doc["meta"] = meta_block(period, variant, "stdr", {});
    doc["diagnostics"] = {
        {"adf", verdict_to_json(report.adf)},
        {"kpss", verdict_to_json(report.kpss)},
        {"pp", verdict_to_json(report.pp)},
        {"ratio",
         {{"median", report.ratio.median},
          {"iqr", report.ratio.iqr},
          {"excluded", report.ratio.excluded}}}};
    out << doc.dump(2) << '\n';
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open " + path + " for writing");
    }
    out << contents;
    if (!out) {
        throw IoError("failed writing " + path);
    }
}

}  // namespace stdecomp
