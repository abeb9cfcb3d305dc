#include "spwn/time_series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace spwn {

TimeSeries::TimeSeries(std::vector<double> values, std::optional<PowerParams> transform)
    : values_(std::move(values)), transform_(transform) {
    if (values_.empty()) {
        throw std::domain_error("time series must contain at least one observation");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw std::domain_error("time series: non-finite observation at index " +
                                    std::to_string(i));
        }
    }
}

TimeSeries transform_series(const TimeSeries& xs, const PowerParams& params) {
    params.validate();
    std::vector<double> out;
    out.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double y = asym_power(xs[i], params);
        if (!std::isfinite(y)) {
            throw std::domain_error("transform overflowed at index " + std::to_string(i));
        }
        out.push_back(y);
    }
    return TimeSeries(std::move(out), params);
}

}  // namespace spwn
