#pragma once

#include "stdecomp/classical.hpp"
#include "stdecomp/decompose.hpp"
#include "stdecomp/diagnostics.hpp"
#include "stdecomp/patterns.hpp"
#include "stdecomp/series.hpp"

#include <iosfwd>
#include <string>

namespace stdecomp {

enum class OutputFormat { Csv, Json };

/// Shortest-roundtrip formatting with up to 17 significant digits; parsing
/// the result with strtod restores the exact double.
std::string format_double(double value);

/// Reads one value column (by name) and an optional label column.
/// No imputation: a blank value cell is a MissingValueError, a non-numeric
/// one a ParseError; both name the offending row.
TimeSeries read_csv(const std::string& path, const std::string& value_column,
                    const std::string& label_column = {});

/// Columns: t,y,trend,dispersion,seasonal (STD)
/// plus seasonal_avg,remainder (STDR). t is 1-based.
void write_components(std::ostream& out, const Vector& series,
                      const StdComponents& components);
void write_components(std::ostream& out, const Vector& series,
                      const StdrComponents& components);

/// Columns: t,y,trend,seasonal,remainder; masked values are empty cells.
void write_classical(std::ostream& out, const Vector& series,
                     const ClassicalComponents& components);

/// JSON mirrors of the CSV payloads, under {"meta": ..., "components": ...}.
void write_components_json(std::ostream& out, const Vector& series,
                           const StdComponents& components);
void write_components_json(std::ostream& out, const Vector& series,
                           const StdrComponents& components);
void write_classical_json(std::ostream& out, const Vector& series,
                          const ClassicalComponents& components);

/// {"meta": ..., "diagnostics": {adf, kpss, pp, ratio}}.
void write_diagnostics_json(std::ostream& out, const DiagnosticsReport& report,
                            Index period, Dispersion variant);

/// Writes to a file, throwing IoError on failure.
void write_file(const std::string& path, const std::string& contents);

}  // namespace stdecomp
