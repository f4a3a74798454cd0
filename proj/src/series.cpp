#include "stdecomp/series.hpp"

#include <cmath>

namespace stdecomp {

void TimeSeries::validate() const {
    if (values.size() == 0) {
        throw DataError("time series is empty");
    }
    for (Index t = 0; t < values.size(); ++t) {
        if (!std::isfinite(values[t])) {
            throw DataError("non-finite value at position " +
                            std::to_string(t + 1));
        }
    }
    if (!labels.empty() &&
        static_cast<Index>(labels.size()) != values.size()) {
        throw DataError("label count (" + std::to_string(labels.size()) +
                        ") does not match series length (" +
                        std::to_string(values.size()) + ")");
    }
}

TimeSeries make_series(Vector values, std::string name) {
    TimeSeries series;
    series.values = std::move(values);
    series.name = std::move(name);
    series.validate();
    return series;
}

}  // namespace stdecomp
