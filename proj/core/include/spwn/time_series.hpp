#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "spwn/power_transform.hpp"

namespace spwn {

/**
 * @brief An ordered stretch of real-valued observations.
 *
 * Invariants are enforced at construction: at least one observation, all
 * observations finite. NaN/Inf values are rejected eagerly (the estimators
 * downstream assume finite data), with the offending index in the message.
 *
 * A series produced by transform_series carries the power parameters that
 * generated it as provenance.
 */
class TimeSeries {
public:
    explicit TimeSeries(std::vector<double> values,
                        std::optional<PowerParams> transform = std::nullopt);

    [[nodiscard]] std::span<const double> values() const { return values_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }

    /// Power parameters this series was produced with, if any.
    [[nodiscard]] const std::optional<PowerParams>& transform() const { return transform_; }

private:
    std::vector<double> values_;
    std::optional<PowerParams> transform_;
};

/// Elementwise asym_power. Length is preserved; the result records the
/// applied (lambda, c). An element whose image is not finite (overflow for
/// lambda > 1 on huge inputs) raises std::domain_error naming the index.
[[nodiscard]] TimeSeries transform_series(const TimeSeries& xs, const PowerParams& params);

}  // namespace spwn
