#pragma once

#include <cstddef>
#include <vector>

namespace mmx {

enum class Direction { Up, Down };

/**
 * Strictly positive price samples with optional numeric timestamps.
 * Timestamps, when present, run parallel to values and are non-decreasing.
 */
struct PriceSeries {
    std::vector<double> values;
    std::vector<double> timestamps;  // empty when absent

    std::size_t size() const noexcept { return values.size(); }
    bool has_timestamps() const noexcept { return !timestamps.empty(); }
};

/// Indicator knobs: neighbor reach m and which extrema to emphasize.
struct IndicatorParams {
    int m = 5;
    Direction direction = Direction::Up;
};

/// Throws std::domain_error when the series is unusable: fewer than 2
/// samples, a non-positive or non-finite price, or broken timestamps.
void validate(const PriceSeries& s);

/// Throws std::invalid_argument when m < 1.
void validate(const IndicatorParams& p);

/// Copy of samples [start, start + count), timestamps included.
PriceSeries subseries(const PriceSeries& s, std::size_t start, std::size_t count);

}  // namespace mmx
