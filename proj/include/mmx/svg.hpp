#pragma once

#include <string>

#include "mmx/indicator.hpp"
#include "mmx/series.hpp"

namespace mmx {

struct SvgOptions {
    int width = 960;
    int height = 600;
};

/**
 * Two stacked panels as a standalone SVG string: the price polyline on top,
 * the weight profiles below (up solid, down dashed, shared y scale). Either
 * profile may be null, but not both; lengths must match the series, and the
 * canvas must be at least 1x1 (std::invalid_argument otherwise).
 */
std::string render_minimax_svg(const PriceSeries& s, const MiniMaxSeries* up,
                               const MiniMaxSeries* down, const SvgOptions& opts);

}  // namespace mmx
