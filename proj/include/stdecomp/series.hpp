#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace stdecomp {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Recoverable problems caused by the input data (as opposed to usage bugs).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LengthNotMultipleError : public DataError {
public:
    using DataError::DataError;
};

class PeriodTooLargeError : public DataError {
public:
    using DataError::DataError;
};

class SeriesTooShortError : public DataError {
public:
    using DataError::DataError;
};

class ZeroVarianceError : public DataError {
public:
    using DataError::DataError;
};

class AllZeroSeriesError : public DataError {
public:
    using DataError::DataError;
};

class AllZeroActualsError : public DataError {
public:
    using DataError::DataError;
};

class HorizonTooLargeError : public DataError {
public:
    using DataError::DataError;
};

class InconsistentLabelsError : public DataError {
public:
    using DataError::DataError;
};

class EmptyGroupError : public DataError {
public:
    using DataError::DataError;
};

class NonPositiveSeriesError : public DataError {
public:
    using DataError::DataError;
};

class UnstableIntegrationError : public DataError {
public:
    using DataError::DataError;
};

class ParseError : public DataError {
public:
    using DataError::DataError;
};

class MissingValueError : public DataError {
public:
    using DataError::DataError;
};

class EmptyFileError : public DataError {
public:
    using DataError::DataError;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A univariate series: finite values, optional per-observation cycle-position
/// labels (e.g. day of week) and free-form metadata.
struct TimeSeries {
    Vector values;
    std::vector<std::string> labels;  // empty, or one label per observation
    std::string name;
    std::string units;

    Index size() const { return values.size(); }
    bool has_labels() const { return !labels.empty(); }

    /// Throws DataError if the invariants do not hold.
    void validate() const;
};

TimeSeries make_series(Vector values, std::string name = {});

}  // namespace stdecomp
