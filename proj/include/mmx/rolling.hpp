#pragma once

#include <cstddef>
#include <vector>

#include "mmx/indicator.hpp"
#include "mmx/series.hpp"

namespace mmx {

struct RollingConfig {
    std::size_t window = 0;  // samples per window, >= 2
    std::size_t hop = 1;     // stride between window starts, >= 1
    IndicatorParams params;
};

/// One evaluated window. start_pos is the 1-based position of its first
/// sample in the source series; the window covers
/// [start_pos, start_pos + window - 1].
struct RollingWindow {
    std::size_t start_pos = 0;
    MiniMaxSeries minimax;
};

struct RollingResult {
    std::size_t window = 0;
    std::size_t hop = 0;
    std::vector<RollingWindow> windows;
};

/**
 * Evaluates the indicator over hopping windows: starts 0, hop, 2*hop, ...
 * while a full window fits, floor((n - window) / hop) + 1 windows in total.
 * Windows are independent, so they are computed in parallel under OpenMP;
 * each window equals minimax() of that slice bit for bit.
 */
RollingResult rolling_minimax(const PriceSeries& s, const RollingConfig& cfg, Exec exec = Exec::Auto);

}  // namespace mmx
